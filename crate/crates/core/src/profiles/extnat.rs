//! `ℕ ∪ {∞}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A natural number or infinity. `Fin(_) < Inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtNat {
    Fin(u32),
    Inf,
}

pub use ExtNat::{Fin, Inf};

impl ExtNat {
    pub const ZERO: ExtNat = Fin(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Fin(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Fin(n) => Some(n),
            Inf => None,
        }
    }

    /// `self + n`, saturating at `∞`.
    pub fn plus(self, n: u32) -> ExtNat {
        match self {
            Fin(m) => Fin(m.saturating_add(n)),
            Inf => Inf,
        }
    }

    /// `self - n` floored at 0; `∞ - n = ∞`.
    pub fn minus(self, n: u32) -> ExtNat {
        match self {
            Fin(m) => Fin(m.saturating_sub(n)),
            Inf => Inf,
        }
    }
}

impl Default for ExtNat {
    fn default() -> Self {
        ExtNat::ZERO
    }
}

impl From<u32> for ExtNat {
    fn from(n: u32) -> Self {
        Fin(n)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fin(n) => write!(f, "{n}"),
            Inf => write!(f, "inf"),
        }
    }
}

impl FromStr for ExtNat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "inf" | "∞" => Ok(Inf),
            t => t.parse().map(Fin).map_err(|_| {
                Error::Invalid(format!("expected a natural number or inf, got {t:?}"))
            }),
        }
    }
}

impl Serialize for ExtNat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Fin(n) => s.serialize_u32(*n),
            Inf => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtNat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(n) => Ok(Fin(n)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_arithmetic() {
        assert!(Fin(1000) < Inf);
        assert!(Fin(2) < Fin(3));
        assert_eq!(Inf.plus(3), Inf);
        assert_eq!(Fin(2).plus(3), Fin(5));
        assert_eq!(Fin(2).minus(3), Fin(0));
        assert_eq!("inf".parse::<ExtNat>().unwrap(), Inf);
        assert_eq!(
            serde_json::to_string(&vec![Fin(1), Inf]).unwrap(),
            r#"[1,"inf"]"#
        );
        assert_eq!(
            serde_json::from_str::<Vec<ExtNat>>(r#"[1,"inf"]"#).unwrap(),
            vec![Fin(1), Inf]
        );
    }
}
