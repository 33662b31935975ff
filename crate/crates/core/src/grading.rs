//! The grading group `RO(Z/2) = Z ⊕ Zα`.
//!
//! A degree `c + dα` is stored as the pair `(c, d)`: `c` counts copies of the
//! trivial representation and `d` copies of the sign representation `α`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
pub struct RODegree {
    pub c: i64,
    pub d: i64,
}

impl RODegree {
    pub const ZERO: RODegree = RODegree { c: 0, d: 0 };

    pub const fn new(c: i64, d: i64) -> Self {
        RODegree { c, d }
    }

    /// Virtual dimension `c + d`.
    pub const fn dim(self) -> i64 {
        self.c + self.d
    }

    /// Coefficient of the sign representation.
    pub const fn twist(self) -> i64 {
        self.d
    }

    /// Degree with the given dimension and twist.
    pub const fn from_dim_twist(dim: i64, twist: i64) -> Self {
        RODegree {
            c: dim - twist,
            d: twist,
        }
    }
}

pub fn dim(deg: RODegree) -> i64 {
    deg.dim()
}

pub fn twist(deg: RODegree) -> i64 {
    deg.twist()
}

impl Add for RODegree {
    type Output = RODegree;
    fn add(self, rhs: RODegree) -> RODegree {
        RODegree::new(self.c + rhs.c, self.d + rhs.d)
    }
}

impl AddAssign for RODegree {
    fn add_assign(&mut self, rhs: RODegree) {
        self.c += rhs.c;
        self.d += rhs.d;
    }
}

impl Sub for RODegree {
    type Output = RODegree;
    fn sub(self, rhs: RODegree) -> RODegree {
        RODegree::new(self.c - rhs.c, self.d - rhs.d)
    }
}

impl Neg for RODegree {
    type Output = RODegree;
    fn neg(self) -> RODegree {
        RODegree::new(-self.c, -self.d)
    }
}

impl Mul<RODegree> for i64 {
    type Output = RODegree;
    fn mul(self, rhs: RODegree) -> RODegree {
        RODegree::new(self * rhs.c, self * rhs.d)
    }
}

/// Renders as `c+dα`, suppressing zero parts.
impl fmt::Display for RODegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alpha = match self.d {
            1 => "α".to_string(),
            -1 => "-α".to_string(),
            d => format!("{d}α"),
        };
        match (self.c, self.d) {
            (0, 0) => write!(f, "0"),
            (c, 0) => write!(f, "{c}"),
            (0, _) => write!(f, "{alpha}"),
            (c, d) if d > 0 => write!(f, "{c}+{alpha}"),
            (c, _) => write!(f, "{c}{alpha}"),
        }
    }
}

/// Accepts `c+d*A`, `c-d*A`, `c`, `d*A`, `A`, and the bare pair `c,d`.
impl FromStr for RODegree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| Error::Syntax {
            column: 1,
            message: format!("{msg} in degree {s:?}"),
        };
        if text.is_empty() {
            return Err(bad("empty"));
        }
        if let Some((c, d)) = text.split_once(',') {
            let c = c.parse().map_err(|_| bad("bad integer"))?;
            let d = d.parse().map_err(|_| bad("bad integer"))?;
            return Ok(RODegree::new(c, d));
        }
        let mut deg = RODegree::ZERO;
        // split into signed summands
        let mut parts = Vec::new();
        let mut start = 0;
        for (i, ch) in text.char_indices() {
            if (ch == '+' || ch == '-') && i > start {
                parts.push(&text[start..i]);
                start = i;
            }
        }
        parts.push(&text[start..]);
        for part in parts {
            let (neg, body) = match part.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, part.strip_prefix('+').unwrap_or(part)),
            };
            let sign = if neg { -1 } else { 1 };
            if let Some(coef) = body.strip_suffix('A') {
                let coef = coef.strip_suffix('*').unwrap_or(coef);
                let n: i64 = if coef.is_empty() {
                    1
                } else {
                    coef.parse().map_err(|_| bad("bad coefficient"))?
                };
                deg.d += sign * n;
            } else {
                let n: i64 = body.parse().map_err(|_| bad("bad integer"))?;
                deg.c += sign * n;
            }
        }
        Ok(deg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dim_examples() {
        assert_eq!(dim(RODegree::new(0, 0)), 0);
        assert_eq!(dim(RODegree::new(1, 1)), 2);
        assert_eq!(dim(RODegree::new(2, -2)), 0);
    }

    #[test]
    fn twist_examples() {
        assert_eq!(twist(RODegree::new(0, 0)), 0);
        assert_eq!(twist(RODegree::new(3, -2)), -2);
        assert_eq!(twist(RODegree::new(1, -1)), -1);
    }

    #[test]
    fn display() {
        assert_eq!(RODegree::new(0, 0).to_string(), "0");
        assert_eq!(RODegree::new(1, 1).to_string(), "1+α");
        assert_eq!(RODegree::new(3, -2).to_string(), "3-2α");
        assert_eq!(RODegree::new(0, -1).to_string(), "-α");
        assert_eq!(RODegree::new(4, 0).to_string(), "4");
    }

    #[test]
    fn parse_forms() {
        assert_eq!("3+2*A".parse::<RODegree>().unwrap(), RODegree::new(3, 2));
        assert_eq!("1-A".parse::<RODegree>().unwrap(), RODegree::new(1, -1));
        assert_eq!("-A".parse::<RODegree>().unwrap(), RODegree::new(0, -1));
        assert_eq!("2,-3".parse::<RODegree>().unwrap(), RODegree::new(2, -3));
        assert_eq!("5".parse::<RODegree>().unwrap(), RODegree::new(5, 0));
        assert!("x".parse::<RODegree>().is_err());
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(RODegree::new(2, -1)).unwrap();
        assert_eq!(v, serde_json::json!({"c": 2, "d": -1}));
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        fn degree() -> impl Strategy<Value = RODegree> {
            (-1000i64..1000, -1000i64..1000).prop_map(|(c, d)| RODegree::new(c, d))
        }

        proptest! {
            #[test]
            fn additive(x in degree(), y in degree()) {
                prop_assert_eq!(dim(x + y), dim(x) + dim(y));
                prop_assert_eq!(twist(x + y), twist(x) + twist(y));
                prop_assert_eq!(x + (-x), RODegree::ZERO);
                prop_assert_eq!(x + RODegree::ZERO, x);
            }

            #[test]
            fn dim_minus_twist(x in degree()) {
                prop_assert_eq!(dim(x) - twist(x), x.c);
            }

            #[test]
            fn display_parse_roundtrip(x in degree()) {
                let text = format!("{}+{}*A", x.c, x.d).replace("+-", "-");
                prop_assert_eq!(text.parse::<RODegree>().unwrap(), x);
            }
        }
    }
}
