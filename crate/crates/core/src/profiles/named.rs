//! The families `E(n)`, `A(n)`, `Ã(n)`, `E(∞)` and the embedding of
//! classical profiles.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::profiles::extnat::{ExtNat, Fin, Inf};
use crate::profiles::profile::{Profile, Sequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    A,
    E,
    ATilde,
    EInf,
}

/// `FullBasis` keeps `τₙ` alive so the quotient has basis `τ₀^ε₀ ⋯ τₙ^εₙ`;
/// `Literal` uses `kₙ = (n, n-1, …, 0)` and `hₙ = (n-1, n-2, …, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub enum Convention {
    #[default]
    FullBasis,
    Literal,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::E => "E",
            Family::ATilde => "Atilde",
            Family::EInf => "Einf",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "A" => Ok(Family::A),
            "E" => Ok(Family::E),
            "Atilde" => Ok(Family::ATilde),
            "Einf" => Ok(Family::EInf),
            _ => Err(Error::Invalid(format!(
                "unknown family {s:?}; expected A, E, Atilde or Einf"
            ))),
        }
    }
}

/// `max(top - i, 0)` for `i` starting at `start`.
fn descending(top: u32, start: u32) -> Sequence {
    let prefix = (start..top).map(|i| Fin(top - i)).collect();
    Sequence::new(prefix, Fin(0)).unwrap()
}

pub fn named_profile(family: Family, n: u32) -> Profile {
    named_profile_with(family, n, Convention::FullBasis)
}

pub fn named_profile_with(family: Family, n: u32, convention: Convention) -> Profile {
    let top = match convention {
        Convention::FullBasis => n + 1,
        Convention::Literal => n,
    };
    let zero = Sequence::constant(Fin(0)).unwrap();
    match family {
        Family::E => Profile {
            h: zero,
            k: descending(top, 0),
        },
        Family::A => Profile {
            h: descending(top, 1),
            k: descending(top, 0),
        },
        Family::ATilde => Profile {
            h: descending(n, 1),
            k: zero,
        },
        Family::EInf => Profile {
            h: zero,
            k: Sequence::constant(Inf).unwrap(),
        },
    }
}

/// `J(h) ↦ I(h, 0)`, for a classical profile `h` indexed from 1.
pub fn embed_classical(h: &Sequence) -> Profile {
    Profile {
        h: h.clone(),
        k: Sequence::constant(ExtNat::ZERO).unwrap(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(named_profile(Family::E, 1).to_string(), "h=[|0] k=[2,1|0]");
        assert_eq!(
            named_profile(Family::A, 2).to_string(),
            "h=[2,1|0] k=[3,2,1|0]"
        );
        assert_eq!(
            named_profile(Family::ATilde, 1).to_string(),
            "h=[|0] k=[|0]"
        );
        assert_eq!(
            named_profile(Family::ATilde, 3).to_string(),
            "h=[2,1|0] k=[|0]"
        );
        assert_eq!(
            named_profile(Family::EInf, 0).to_string(),
            "h=[|0] k=[|inf]"
        );
        assert_eq!(
            named_profile_with(Family::E, 1, Convention::Literal).to_string(),
            "h=[|0] k=[1|0]"
        );
        assert_eq!(
            named_profile_with(Family::A, 2, Convention::Literal).to_string(),
            "h=[1|0] k=[2,1|0]"
        );
    }

    #[test]
    fn embedding_is_monotone() {
        let small = Sequence::new(vec![Fin(1)], Fin(0)).unwrap();
        let big = Sequence::new(vec![Fin(2), Fin(1)], Fin(0)).unwrap();
        assert!(embed_classical(&small).le(&embed_classical(&big)));
        assert_eq!(
            embed_classical(&Sequence::constant(Fin(0)).unwrap()),
            Profile::trivial()
        );
        assert_eq!(
            embed_classical(&named_profile(Family::ATilde, 3).h),
            named_profile(Family::ATilde, 3)
        );
    }
}
