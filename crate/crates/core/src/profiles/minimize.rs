//! The minimal profile `(h, k̃)` with `k̃(n) = min { l : τₙ^(2^l) ∈ I(h,k) }`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::profiles::extnat::{ExtNat, Fin, Inf};
use crate::profiles::profile::{Profile, Sequence};
use crate::steenrod::monomial::tau_degree;
use crate::steenrod::DualSteenrod;

/// Membership searches stop once `τₙ^(2^l)` has `c`-degree above this.
pub const SEARCH_MAX_C: i64 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Minimized {
    pub profile: Profile,
    /// Indices `n` where `k̃(n) = ∞` was reported without a proof.
    pub unconfirmed: Vec<usize>,
    /// The tail value is unconfirmed as well.
    pub unconfirmed_tail: bool,
}

impl Minimized {
    pub fn is_confirmed(&self) -> bool {
        self.unconfirmed.is_empty() && !self.unconfirmed_tail
    }
}

impl Profile {
    /// The search bound `L`: length of the `k` prefix plus the largest finite
    /// value plus 2.
    pub fn search_bound(&self) -> u32 {
        self.k.prefix.len() as u32 + self.max_finite() + 2
    }

    /// Lower bound for `k̃(n)` from the deformation `A≥ → A_*`: the image of
    /// `τₙ^(2^l)` is `ξₙ₊₁^(2^l)`, which lies in the image ideal only when
    /// `l ≥ h(n+1)+1` or `l ≥ k(n)`.
    pub fn deformation_lower_bound(&self, n: usize) -> ExtNat {
        self.h(n + 1).plus(1).min(self.k(n))
    }
}

impl DualSteenrod {
    /// `k̃(n)` and whether an infinite answer is unconfirmed.
    pub fn minimal_k(&self, p: &Profile, n: usize) -> Result<(ExtNat, bool)> {
        let k = p.k(n);
        let lb = p.deformation_lower_bound(n);
        if lb == k {
            return Ok((k, false));
        }
        let Fin(lb) = lb else {
            unreachable!("lower bound below k is finite")
        };
        if p.is_free_pair() {
            return Ok((free_minimal_k(p, n, lb), false));
        }
        let bound = p.search_bound();
        for l in lb.. {
            if Fin(l) >= k {
                return Ok((k, false));
            }
            let c = (1i64 << l.min(62)) * tau_degree(n).c;
            if l > bound || c > SEARCH_MAX_C {
                return Ok((Inf, true));
            }
            let x = self.tau_power(n, l)?;
            match self.member_window(p, &x) {
                Ok(true) => return Ok((Fin(l), false)),
                Ok(false) => {}
                Err(Error::ResourceLimit(_)) => return Ok((Inf, true)),
                Err(e) => return Err(e),
            }
        }
        unreachable!()
    }

    /// The unique minimal profile with the same ideal.
    pub fn minimize(&self, p: &Profile) -> Result<Minimized> {
        let top = p.stable_index();
        let mut prefix = Vec::with_capacity(top);
        let mut unconfirmed = Vec::new();
        for n in 0..top {
            let (v, u) = self.minimal_k(p, n)?;
            if u {
                unconfirmed.push(n);
            }
            prefix.push(v);
        }
        let (tail, unconfirmed_tail) = self.minimal_k(p, top)?;
        if tail != Fin(0) && tail != Inf {
            return Err(Error::Invalid(format!(
                "the minimal profile of {p} is not representable: k̃({top}) = {tail} while k is constant from there on"
            )));
        }
        let profile = p.with_k(Sequence::new(prefix, tail)?);
        Ok(Minimized {
            profile,
            unconfirmed,
            unconfirmed_tail,
        })
    }

    /// `Some(true)` if `p` is minimal, `Some(false)` if some `k̃(n) < k(n)`,
    /// `None` if every computed value agrees but an infinite one is unconfirmed.
    pub fn minimality(&self, p: &Profile) -> Result<Option<bool>> {
        let mut confirmed = true;
        for n in 0..=p.stable_index() {
            let (v, u) = self.minimal_k(p, n)?;
            if v < p.k(n) {
                return Ok(Some(false));
            }
            confirmed &= !u;
        }
        Ok(confirmed.then_some(true))
    }

    /// Whether `p` equals its minimization. Unconfirmed infinite entries are errors.
    pub fn is_minimal(&self, p: &Profile) -> Result<bool> {
        self.minimality(p)?
            .ok_or_else(|| Error::Unconfirmed(format!("k̃ = inf not certified for {p}")))
    }
}

/// For free pairs: the least `m ≥ lb` with `τₙ₊ₘ ∈ I` and
/// `ξₙ₊ₘ₋ⱼ^(2^j) ∈ I` for `j < m`.
fn free_minimal_k(p: &Profile, n: usize, lb: u32) -> ExtNat {
    let k = p.k(n);
    let top = (p.stable_index() + p.max_finite() as usize + 2) as u32;
    for m in lb..=top.max(lb) {
        if Fin(m) >= k {
            return k;
        }
        let mu = m as usize;
        let tau_killed = p.k(n + mu) == Fin(0);
        let xis_killed = (0..mu).all(|j| p.h(n + mu - j) <= Fin(j as u32));
        if tau_killed && xis_killed {
            return Fin(m);
        }
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prof(s: &str) -> Profile {
        s.parse().unwrap()
    }

    #[test]
    fn example_pair_minimizes() {
        let alg = DualSteenrod::default();
        let k2 = prof("h=[0|inf] k=[inf,0|inf]");
        let k1 = prof("h=[0|inf] k=[1,0|inf]");
        let m = alg.minimize(&k2).unwrap();
        assert!(m.is_confirmed());
        assert_eq!(m.profile, k1);
        assert!(alg.is_minimal(&k1).unwrap());
        assert!(!alg.is_minimal(&k2).unwrap());
    }

    #[test]
    fn free_pairs_minimize_by_the_criterion() {
        let alg = DualSteenrod::default();
        let p = prof("h=[|0] k=[inf,1|0]");
        let m = alg.minimize(&p).unwrap();
        assert_eq!(m.profile, prof("h=[|0] k=[2,1|0]"));
        assert_eq!(alg.minimize(&m.profile).unwrap().profile, m.profile);
    }
}
