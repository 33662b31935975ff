//! Profile functions `(h, k)`: `h` on `i ≥ 1` bounds `ξᵢ`, `k` on `i ≥ 0` bounds `τᵢ`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::profiles::extnat::{ExtNat, Fin, Inf};

/// An eventually constant sequence with tail in `{0, ∞}`. The prefix never
/// ends with a copy of the tail.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sequence {
    pub prefix: Vec<ExtNat>,
    pub tail: ExtNat,
}

impl Sequence {
    pub fn new(mut prefix: Vec<ExtNat>, tail: ExtNat) -> Result<Self> {
        if tail != Fin(0) && tail != Inf {
            return Err(Error::Invalid(format!(
                "profile tails must be 0 or inf, got {tail}"
            )));
        }
        while prefix.last() == Some(&tail) {
            prefix.pop();
        }
        Ok(Sequence { prefix, tail })
    }

    pub fn constant(tail: ExtNat) -> Result<Self> {
        Sequence::new(Vec::new(), tail)
    }

    /// Value at position `p` of the prefix (0-based).
    pub fn at(&self, p: usize) -> ExtNat {
        self.prefix.get(p).copied().unwrap_or(self.tail)
    }

    pub fn max_finite(&self) -> u32 {
        self.prefix
            .iter()
            .chain([&self.tail])
            .filter_map(|v| v.finite())
            .max()
            .unwrap_or(0)
    }

    fn fmt_list(&self) -> String {
        let vals: Vec<String> = self.prefix.iter().map(|v| v.to_string()).collect();
        format!("[{}|{}]", vals.join(","), self.tail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Profile {
    /// `h(1), h(2), …`
    pub h: Sequence,
    /// `k(0), k(1), …`
    pub k: Sequence,
}

impl Profile {
    pub fn new(
        h_prefix: Vec<ExtNat>,
        h_tail: ExtNat,
        k_prefix: Vec<ExtNat>,
        k_tail: ExtNat,
    ) -> Result<Self> {
        Ok(Profile {
            h: Sequence::new(h_prefix, h_tail)?,
            k: Sequence::new(k_prefix, k_tail)?,
        })
    }

    /// `h ≡ 0, k ≡ 0`: the augmentation ideal.
    pub fn trivial() -> Self {
        Profile::new(vec![], Fin(0), vec![], Fin(0)).unwrap()
    }

    /// `h ≡ ∞, k ≡ ∞`: the zero ideal.
    pub fn zero_ideal() -> Self {
        Profile::new(vec![], Inf, vec![], Inf).unwrap()
    }

    /// `h(i)` for `i ≥ 1`.
    pub fn h(&self, i: usize) -> ExtNat {
        assert!(i >= 1, "h is indexed from 1");
        self.h.at(i - 1)
    }

    /// `k(i)` for `i ≥ 0`.
    pub fn k(&self, i: usize) -> ExtNat {
        self.k.at(i)
    }

    /// First index from which both `h(n)` and `k(n)` equal their tails.
    pub fn stable_index(&self) -> usize {
        (self.h.prefix.len() + 1).max(self.k.prefix.len())
    }

    pub fn max_finite(&self) -> u32 {
        self.h.max_finite().max(self.k.max_finite())
    }

    /// `(h,k) ≤ (h',k')` pointwise.
    pub fn le(&self, other: &Profile) -> bool {
        let n = self.stable_index().max(other.stable_index()) + 1;
        (1..=n).all(|i| self.h(i) <= other.h(i)) && (0..=n).all(|i| self.k(i) <= other.k(i))
    }

    pub fn with_k(&self, k: Sequence) -> Profile {
        Profile {
            h: self.h.clone(),
            k,
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h={} k={}", self.h.fmt_list(), self.k.fmt_list())
    }
}

fn parse_sequence(s: &str) -> Result<Sequence> {
    let bad = || Error::Invalid(format!("expected [v,...|tail], got {s:?}"));
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(bad)?;
    let (vals, tail) = inner.split_once('|').ok_or_else(bad)?;
    let prefix = if vals.trim().is_empty() {
        Vec::new()
    } else {
        vals.split(',')
            .map(|v| v.parse())
            .collect::<Result<Vec<ExtNat>>>()?
    };
    Sequence::new(prefix, tail.parse()?)
}

impl FromStr for Profile {
    type Err = Error;

    /// `h=[v1,v2,...|tail] k=[v0,v1,...|tail]`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("expected 'h=[...|t] k=[...|t]', got {s:?}"));
        let s = s.trim();
        let rest = s.strip_prefix("h=").ok_or_else(bad)?;
        let close = rest.find(']').ok_or_else(bad)?;
        let h = parse_sequence(&rest[..=close])?;
        let rest = rest[close + 1..]
            .trim_start()
            .strip_prefix("k=")
            .ok_or_else(bad)?;
        let k = parse_sequence(rest)?;
        Ok(Profile { h, k })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_roundtrip_and_trimming() {
        let p: Profile = "h=[0,inf,inf|inf] k=[inf,0|inf]".parse().unwrap();
        assert_eq!(p.to_string(), "h=[0|inf] k=[inf,0|inf]");
        assert_eq!(p.h(1), Fin(0));
        assert_eq!(p.h(7), Inf);
        assert_eq!(p.k(0), Inf);
        assert_eq!(p.k(1), Fin(0));
        assert_eq!(p.to_string().parse::<Profile>().unwrap(), p);
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<Profile>(&js).unwrap(), p);
        assert!("h=[1|2] k=[|0]".parse::<Profile>().is_err());
        assert_eq!(
            "h=[|0] k=[|0]".parse::<Profile>().unwrap(),
            Profile::trivial()
        );
    }

    #[test]
    fn partial_order() {
        let small: Profile = "h=[1|0] k=[2,1|0]".parse().unwrap();
        let big: Profile = "h=[2,1|0] k=[3,2,1|0]".parse().unwrap();
        assert!(small.le(&big));
        assert!(!big.le(&small));
        assert!(Profile::trivial().le(&small));
        assert!(small.le(&Profile::zero_ideal()));
    }
}
