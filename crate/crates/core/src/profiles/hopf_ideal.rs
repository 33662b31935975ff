//! When `I(h,k)` is a Hopf ideal: the numerical conditions and a direct check
//! of `ε(g) = 0`, `Δ(g) ∈ I⊗A + A⊗I` and `c(g) ∈ I` on generators.

use std::fmt;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::Result;
use crate::grading::RODegree;
use crate::hopf::{TensorElement, TensorTerm};
use crate::linalg::{Echelon, Indexer};
use crate::profiles::ideal::{IdealGenerator, IdealSpan};
use crate::profiles::profile::Profile;
use crate::steenrod::{DualSteenrod, Element};
use crate::window::Window;

/// A pair `(i, j)` where both disjuncts of a condition fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NumericViolation {
    /// 1: `h(i) ≤ j + h(i+j)` or `h(j) ≤ h(i+j)`.
    /// 2: `h(i) ≤ j + k(i+j)` or `k(j) ≤ k(i+j)`.
    pub condition: u8,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for NumericViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "condition {} fails at i={}, j={}",
            self.condition, self.i, self.j
        )
    }
}

impl Profile {
    /// First violation of the two inequality families. Beyond
    /// `2·(stable index) + 2` every instance repeats one already checked,
    /// since both `h` and `k` have reached their tails.
    pub fn hopf_numeric_violation(&self) -> Option<NumericViolation> {
        let top = 2 * self.stable_index() + 2;
        for i in 1..=top {
            for j in 1..=top {
                let n = self.h(i + j);
                if !(self.h(i) <= n.plus(j as u32) || self.h(j) <= n) {
                    return Some(NumericViolation { condition: 1, i, j });
                }
            }
        }
        for i in 1..=top {
            for j in 0..=top {
                let n = self.k(i + j);
                if !(self.h(i) <= n.plus(j as u32) || self.k(j) <= n) {
                    return Some(NumericViolation { condition: 2, i, j });
                }
            }
        }
        None
    }

    /// The numerical Hopf-ideal criterion, meaningful for minimal profiles.
    pub fn is_hopf_ideal_numeric(&self) -> bool {
        self.hopf_numeric_violation().is_none()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HopfCondition {
    Counit,
    Coproduct,
    Antipode,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HopfFailure {
    pub generator: String,
    pub condition: HopfCondition,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HopfDirectReport {
    pub passed: bool,
    pub generators_checked: usize,
    pub failure: Option<HopfFailure>,
}

struct SpanCache<'a> {
    alg: &'a DualSteenrod,
    p: &'a Profile,
    spans: FxHashMap<RODegree, IdealSpan>,
}

impl SpanCache<'_> {
    fn get(&mut self, deg: RODegree) -> Result<&IdealSpan> {
        if !self.spans.contains_key(&deg) {
            let span = self.alg.ideal_span(self.p, deg)?;
            self.spans.insert(deg, span);
        }
        Ok(&self.spans[&deg])
    }
}

impl DualSteenrod {
    /// Checks every generator of `I(p)` with degree in `window`.
    pub fn hopf_ideal_direct(&self, p: &Profile, window: &Window) -> Result<HopfDirectReport> {
        let gens = self.ideal_generators(p, window)?;
        let free = p.is_free_pair();
        let mut cache = SpanCache {
            alg: self,
            p,
            spans: FxHashMap::default(),
        };
        for g in &gens {
            if let Some(failure) = self.check_generator(p, g, free, &mut cache)? {
                return Ok(HopfDirectReport {
                    passed: false,
                    generators_checked: gens.len(),
                    failure: Some(failure),
                });
            }
        }
        Ok(HopfDirectReport {
            passed: true,
            generators_checked: gens.len(),
            failure: None,
        })
    }

    pub fn is_hopf_ideal_direct(&self, p: &Profile, window: &Window) -> Result<bool> {
        Ok(self.hopf_ideal_direct(p, window)?.passed)
    }

    fn check_generator(
        &self,
        p: &Profile,
        g: &IdealGenerator,
        free: bool,
        cache: &mut SpanCache<'_>,
    ) -> Result<Option<HopfFailure>> {
        let fail = |condition, witness: String| {
            Some(HopfFailure {
                generator: g.to_string(),
                condition,
                witness,
            })
        };
        let eps = self.counit(&g.element);
        if !eps.is_zero() {
            return Ok(fail(HopfCondition::Counit, eps.to_string()));
        }
        let delta = self.coproduct(&g.element);
        if free {
            let survivor = delta
                .terms()
                .iter()
                .find(|t| !p.kills_monomial(&t.left.mono) && !p.kills_monomial(&t.right));
            if let Some(t) = survivor {
                return Ok(fail(
                    HopfCondition::Coproduct,
                    format!("{} # {}", t.left, t.right),
                ));
            }
        } else if !self.in_tensor_ideal(&delta, g.degree, cache)? {
            return Ok(fail(HopfCondition::Coproduct, delta.to_string()));
        }
        let c = self.antipode(&g.element)?;
        let in_ideal = if free {
            c.terms().iter().all(|t| p.kills_monomial(&t.mono))
        } else {
            c.is_zero() || cache.get(g.degree)?.contains(&c)
        };
        if !in_ideal {
            return Ok(fail(HopfCondition::Antipode, c.to_string()));
        }
        Ok(None)
    }

    /// `x ∈ I⊗A + A⊗I` in degree `deg`, by linear algebra over a spanning set.
    fn in_tensor_ideal(
        &self,
        x: &TensorElement,
        deg: RODegree,
        cache: &mut SpanCache<'_>,
    ) -> Result<bool> {
        if x.is_zero() {
            return Ok(true);
        }
        let mut index: Indexer<TensorTerm> = Indexer::new();
        let mut echelon = Echelon::new();
        let mut add = |t: &TensorElement, index: &mut Indexer<TensorTerm>| {
            echelon.insert(index.vector(t.terms()));
        };
        // I ⊗ A: (basis of I in degree deg - |R|) ⊗ R.
        for r in self.monomials_up_to_c(deg.c)? {
            let span = cache.get(deg - r.degree())?;
            for v in span.basis() {
                let t = TensorElement::from_terms(
                    v.terms().iter().map(|&left| TensorTerm { right: r, left }),
                );
                add(&t, &mut index);
            }
        }
        // A ⊗ I: x ⊗ w with w in a basis of I in degree F and x of degree deg - F.
        for c in 0..=deg.c {
            for d in (deg.d - deg.c + c)..=c {
                let f = RODegree::new(c, d);
                let ws = cache.get(f)?.basis();
                if ws.is_empty() {
                    continue;
                }
                for x in self.f2_basis_of_bidegree(deg - f)? {
                    let x = Element::from_term(x);
                    for w in &ws {
                        add(
                            &self.tensor_normalize(&[(x.clone(), w.clone())]),
                            &mut index,
                        );
                    }
                }
            }
        }
        let target = index.vector(x.terms());
        Ok(echelon.contains(&target))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prof(s: &str) -> Profile {
        s.parse().unwrap()
    }

    #[test]
    fn numeric_examples() {
        assert!(prof("h=[0|inf] k=[1,0|inf]").is_hopf_ideal_numeric());
        let bad = prof("h=[2|0] k=[|0]");
        assert_eq!(
            bad.hopf_numeric_violation(),
            Some(NumericViolation {
                condition: 1,
                i: 1,
                j: 1
            })
        );
        assert!(Profile::trivial().is_hopf_ideal_numeric());
        assert!(Profile::zero_ideal().is_hopf_ideal_numeric());
    }

    #[test]
    fn direct_examples() {
        let alg = DualSteenrod::default();
        let w = Window::up_to_dim(8);
        let bad = alg.hopf_ideal_direct(&prof("h=[2|0] k=[|0]"), &w).unwrap();
        assert!(!bad.passed);
        let f = bad.failure.unwrap();
        assert_eq!(f.condition, HopfCondition::Coproduct);
        assert_eq!(f.generator, "x2");
        assert!(alg
            .is_hopf_ideal_direct(&prof("h=[0|inf] k=[1,0|inf]"), &w)
            .unwrap());
        assert!(alg.is_hopf_ideal_direct(&Profile::trivial(), &w).unwrap());
    }
}
