//! Free pairs and the monomial bases of their quotients.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grading::RODegree;
use crate::profiles::extnat::{ExtNat, Fin};
use crate::profiles::profile::Profile;
use crate::steenrod::{DualSteenrod, GenMonomial};
use crate::window::Window;

impl Profile {
    /// For all `i ≥ 0`, `m ≥ k(i)`, `j ≤ m`: `k(i+m) = 0` and `h(i+j) ≤ m-j`
    /// (the latter only when `i+j ≥ 1`).
    pub fn is_free_pair(&self) -> bool {
        let p = self.stable_index();
        let any_finite = (0..=p).any(|i| self.k(i).is_finite());
        if !any_finite {
            return true;
        }
        if self.k.tail != Fin(0) || self.h.tail != Fin(0) {
            return false;
        }
        let top = p + self.max_finite() as usize + 2;
        for i in 0..=top {
            let Some(ki) = self.k(i).finite() else {
                continue;
            };
            let ki = ki as usize;
            if (i + ki..=top + ki).any(|n| self.k(n) != Fin(0)) {
                return false;
            }
            for j in 0..=top + ki {
                if i + j == 0 {
                    continue;
                }
                let bound = ki.saturating_sub(j) as u32;
                if self.h(i + j) > Fin(bound) {
                    return false;
                }
            }
        }
        true
    }
}

/// The monomials `B_(h,k)` of a free quotient inside a window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientBasis {
    pub profile: Profile,
    pub window: Window,
    #[serde(serialize_with = "serialize_monos")]
    pub monomials: Vec<(GenMonomial, RODegree)>,
}

fn serialize_monos<S: serde::Serializer>(
    monos: &[(GenMonomial, RODegree)],
    s: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(monos.len()))?;
    for (m, d) in monos {
        seq.serialize_element(
            &serde_json::json!({ "monomial": m.to_string(), "c": d.c, "d": d.d }),
        )?;
    }
    seq.end()
}

impl QuotientBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, m: &GenMonomial) -> bool {
        self.monomials.iter().any(|(x, _)| x == m)
    }
}

impl DualSteenrod {
    /// Basis monomials in `window` with `ξᵢ`-exponent below `2^h(i)` and
    /// `τᵢ` present only when `k(i) ≥ 1`.
    pub fn quotient_basis(&self, p: &Profile, window: &Window) -> Result<QuotientBasis> {
        if !p.is_free_pair() {
            return Err(Error::Precondition(format!("{p} is not a free pair")));
        }
        let monomials = self
            .monomial_basis(window)?
            .into_iter()
            .filter(|(m, _)| !p.kills_monomial(m))
            .collect();
        Ok(QuotientBasis {
            profile: p.clone(),
            window: *window,
            monomials,
        })
    }
}

/// Whether a free quotient is finite: every `h(i)` and `k(i)` is finite and
/// the tails vanish.
pub fn is_finite_quotient(p: &Profile) -> bool {
    p.h.tail == ExtNat::ZERO
        && p.k.tail == ExtNat::ZERO
        && p.h.prefix.iter().chain(&p.k.prefix).all(|v| v.is_finite())
}
