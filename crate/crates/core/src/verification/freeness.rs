//! The map `H≥{B_(h,k)} → A≥/I(h,k)` degree by degree.

use rand::Rng;

use crate::error::{Error, Result};
use crate::grading::RODegree;
use crate::profiles::extnat::{ExtNat, Fin, Inf};
use crate::profiles::Profile;
use crate::steenrod::{DualSteenrod, Element};
use crate::window::Window;

impl DualSteenrod {
    /// First degree of `window` where the classes of the `F₂`-basis terms
    /// `h·b`, `b ∈ B_(h,k)`, fail to be a basis of the quotient.
    pub fn quotient_basis_defect(&self, p: &Profile, window: &Window) -> Result<Option<RODegree>> {
        if !p.is_free_pair() {
            return Err(Error::Precondition(format!("{p} is not a free pair")));
        }
        for deg in window.bidegrees() {
            let span = self.ideal_span(p, deg)?;
            if span.space.is_empty() {
                continue;
            }
            let survivors: Vec<Element> = span
                .space
                .basis()
                .iter()
                .filter(|t| !p.kills_monomial(&t.mono))
                .map(|t| Element::from_term(*t))
                .collect();
            if !span.complements(&survivors) {
                return Ok(Some(deg));
            }
        }
        Ok(None)
    }
}

/// A random free pair with `k` prefix of length at most 3 and values up to 3.
pub fn random_free_pair<R: Rng>(rng: &mut R) -> Profile {
    let len = rng.gen_range(0..=3);
    let mut k: Vec<ExtNat> = (0..len)
        .map(|_| {
            if rng.gen_bool(0.2) {
                Inf
            } else {
                Fin(rng.gen_range(0..=3))
            }
        })
        .collect();
    // k(n) = 0 from i + k(i) on
    for i in 0..k.len() {
        if let Fin(ki) = k[i] {
            for v in k.iter_mut().skip(i + ki as usize) {
                *v = Fin(0);
            }
        }
    }
    let top = k.len() + 4;
    let kv = |n: usize| k.get(n).copied().unwrap_or(Fin(0));
    let mut h = Vec::new();
    for n in 1..top {
        let cap = (0..=n)
            .filter_map(|i| {
                kv(i)
                    .finite()
                    .map(|ki| (ki as usize).saturating_sub(n - i) as u32)
            })
            .min();
        h.push(match cap {
            Some(c) => Fin(rng.gen_range(0..=c)),
            None => [Fin(0), Fin(1), Fin(2), Inf][rng.gen_range(0..4)],
        });
    }
    let p = Profile::new(h, Fin(0), k, Fin(0)).expect("tails are 0");
    debug_assert!(p.is_free_pair(), "{p}");
    p
}
