//! The comodule map `φ = (π_C ⊗ π_G)∘Δ : B → C ⊗_H H{G}` and its bijectivity.

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grading::RODegree;
use crate::linalg::{kernel, BitVec, Indexer};
use crate::profiles::Profile;
use crate::steenrod::{DualSteenrod, Element, GenMonomial, Term};
use crate::window::Window;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub degree: RODegree,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

impl DegreeCheck {
    pub fn bijective(&self) -> bool {
        self.source_dim == self.target_dim && self.rank == self.source_dim
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CofreeReport {
    pub bijective: bool,
    /// Degrees of dimension above `window.dim_hi - margin` are not certified.
    pub margin: i64,
    pub degrees: Vec<DegreeCheck>,
    /// First degree that fails, with an element of the kernel when there is one.
    pub failure: Option<(RODegree, Option<String>)>,
    pub warnings: Vec<String>,
}

impl DualSteenrod {
    /// Checks that `φ` is an `F₂`-isomorphism in every degree of `window`
    /// whose dimension is at most `dim_hi - margin`, where the margin is the
    /// largest dimension in `generators`.
    pub fn comodule_iso_check(
        &self,
        pb: &Profile,
        pc: &Profile,
        generators: &[GenMonomial],
        window: &Window,
    ) -> Result<CofreeReport> {
        if !pc.le(pb) {
            return Err(Error::Precondition(format!(
                "{pc} does not define a further quotient of {pb}"
            )));
        }
        for p in [pb, pc] {
            if !p.is_free_pair() {
                return Err(Error::Precondition(format!("{p} is not a free pair")));
            }
        }
        let margin = generators
            .iter()
            .map(|g| g.degree().dim())
            .max()
            .unwrap_or(0);
        let mut warnings = Vec::new();
        for g in generators {
            if pb.kills_monomial(g) {
                warnings.push(format!("generator {g} is zero in the source quotient"));
            }
        }
        let certified = Window {
            dim_hi: window.dim_hi - margin,
            ..*window
        };
        let mut images: FxHashMap<GenMonomial, Vec<(Term, GenMonomial)>> = FxHashMap::default();
        let mut degrees = Vec::new();
        let mut failure = None;
        for deg in certified.bidegrees() {
            let source: Vec<Term> = self
                .f2_basis_of_bidegree(deg)?
                .into_iter()
                .filter(|t| !pb.kills_monomial(&t.mono))
                .collect();
            let mut target: Indexer<(Term, GenMonomial)> = Indexer::new();
            for g in generators {
                for t in self.f2_basis_of_bidegree(deg - g.degree())? {
                    if !pc.kills_monomial(&t.mono) {
                        target.index(&(t, *g));
                    }
                }
            }
            if source.is_empty() && target.is_empty() {
                continue;
            }
            let target_dim = target.len();
            let mut rows = Vec::with_capacity(source.len());
            for t in &source {
                let phi = images
                    .entry(t.mono)
                    .or_insert_with(|| self.phi_monomial(pc, generators, &t.mono))
                    .clone();
                let scaled: Vec<(Term, GenMonomial)> = phi
                    .into_iter()
                    .filter_map(|(l, r)| {
                        t.coeff
                            .checked_mul(l.coeff)
                            .map(|c| (Term::new(c, l.mono), r))
                    })
                    .collect();
                let mut v = BitVec::new();
                for key in &scaled {
                    v.toggle(target.index(key));
                }
                rows.push(v);
            }
            let ker = kernel(&rows);
            let check = DegreeCheck {
                degree: deg,
                source_dim: source.len(),
                target_dim,
                rank: source.len() - ker.len(),
            };
            if !check.bijective() && failure.is_none() {
                let witness = ker
                    .first()
                    .map(|v| Element::from_terms(v.ones().map(|i| source[i])).to_string());
                failure = Some((deg, witness));
            }
            degrees.push(check);
        }
        degrees.sort_by_key(|c| (c.degree.dim(), c.degree.twist()));
        Ok(CofreeReport {
            bijective: failure.is_none(),
            margin,
            degrees,
            failure,
            warnings,
        })
    }

    /// `φ(m)` as pairs `(coefficient·L, R)` with `L ∉ I_C` and `R ∈ G`.
    fn phi_monomial(
        &self,
        pc: &Profile,
        generators: &[GenMonomial],
        m: &GenMonomial,
    ) -> Vec<(Term, GenMonomial)> {
        self.coproduct_monomial(m)
            .terms()
            .iter()
            .filter(|t| generators.contains(&t.right) && !pc.kills_monomial(&t.left.mono))
            .map(|t| (t.left, t.right))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profiles::{named_profile, Family};

    #[test]
    fn identity_case() {
        let alg = DualSteenrod::default();
        let e = named_profile(Family::E, 1);
        let r = alg
            .comodule_iso_check(&e, &e, &[GenMonomial::ONE], &Window::up_to_dim(8))
            .unwrap();
        assert!(r.bijective, "{:?}", r.failure);
    }

    #[test]
    fn a1_over_e1() {
        let alg = DualSteenrod::default();
        let (a, e) = (named_profile(Family::A, 1), named_profile(Family::E, 1));
        let w = Window::up_to_dim(12);
        let g2 = [GenMonomial::ONE, GenMonomial::xi(1, 1)];
        assert!(alg.comodule_iso_check(&a, &e, &g2, &w).unwrap().bijective);
        let g4: Vec<GenMonomial> = (0..4).map(|n| GenMonomial::xi(1, n)).collect();
        let r = alg.comodule_iso_check(&a, &e, &g4, &w).unwrap();
        assert!(!r.bijective);
        assert_eq!(r.warnings.len(), 2);
    }
}
