//! Primitive elements: solutions of `Δx = x ⊗ 1 + 1 ⊗ x` in one degree.

use crate::error::Result;
use crate::grading::RODegree;
use crate::hopf::tensor::{TensorAcc, TensorElement, TensorTerm};
use crate::linalg::{kernel, BitVec, Indexer};
use crate::steenrod::{DualSteenrod, Element, Term};

impl DualSteenrod {
    /// `Δx - x ⊗ 1 - 1 ⊗ x`.
    pub fn reduced_coproduct(&self, x: &Element) -> TensorElement {
        let mut acc = TensorAcc::new();
        acc.add_tensor(&self.coproduct(x));
        acc.add_left(x, crate::steenrod::GenMonomial::ONE);
        acc.add_tensor(&self.tensor_normalize(&[(Element::one(), x.clone())]));
        acc.into_tensor()
    }

    /// A basis of the primitives in `deg`, in reduced echelon form over the
    /// sorted `F₂`-basis of the degree.
    pub fn primitives_in_bidegree(&self, deg: RODegree) -> Result<Vec<Element>> {
        let basis = self.f2_basis_of_bidegree(deg)?;
        let mut prims = self.primitives_in_span(&basis);
        canonicalize(&basis, &mut prims);
        Ok(prims)
    }

    /// Primitives inside the span of the given terms, as computed from that
    /// enumeration order.
    pub fn primitives_in_span(&self, basis: &[Term]) -> Vec<Element> {
        let mut index: Indexer<TensorTerm> = Indexer::new();
        let images: Vec<BitVec> = basis
            .iter()
            .map(|t| {
                let r = self.reduced_coproduct(&Element::from_term(*t));
                index.vector(r.terms())
            })
            .collect();
        kernel(&images)
            .into_iter()
            .map(|k| Element::from_terms(k.ones().map(|i| basis[i])))
            .collect()
    }
}

/// Rewrites a family of elements in the span of `basis` to reduced row echelon
/// form with respect to the order of `basis`, so equal spans give equal lists.
pub fn canonicalize(basis: &[Term], elems: &mut Vec<Element>) {
    let pos: std::collections::HashMap<Term, usize> =
        basis.iter().enumerate().map(|(i, t)| (*t, i)).collect();
    let mut rows: Vec<BitVec> = elems
        .iter()
        .map(|e| BitVec::from_indices(e.terms().iter().map(|t| pos[t])))
        .collect();
    let mut r = 0;
    for col in 0..basis.len() {
        if let Some(p) = (r..rows.len()).find(|&i| rows[i].get(col)) {
            rows.swap(r, p);
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            r += 1;
        }
    }
    rows.truncate(r);
    *elems = rows
        .iter()
        .map(|v| Element::from_terms(v.ones().map(|i| basis[i])))
        .collect();
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn examples() {
        let a = DualSteenrod::default();
        let p10 = a.primitives_in_bidegree(RODegree::new(1, 0)).unwrap();
        assert_eq!(p10, vec![Element::tau(0), a.parse_element("a*x1").unwrap()]);
        assert!(a.primitives_in_bidegree(RODegree::ZERO).unwrap().is_empty());
        assert_eq!(
            a.primitives_in_bidegree(RODegree::new(1, 1)).unwrap(),
            vec![Element::xi(1)]
        );
        // (2,1) holds τ₁, τ₀ξ₁ and aξ₁²; only the a-multiple is primitive
        assert_eq!(
            a.f2_basis_of_bidegree(RODegree::new(2, 1)).unwrap().len(),
            3
        );
        let p21 = a.primitives_in_bidegree(RODegree::new(2, 1)).unwrap();
        assert_eq!(p21, vec![a.parse_element("a*x1^2").unwrap()]);
    }

    #[test]
    fn order_independent() {
        let a = DualSteenrod::default();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for deg in [
            RODegree::new(3, 0),
            RODegree::new(4, 1),
            RODegree::new(2, -1),
            RODegree::new(4, 3),
        ] {
            let basis = a.f2_basis_of_bidegree(deg).unwrap();
            let reference = a.primitives_in_bidegree(deg).unwrap();
            let mut shuffled = basis.clone();
            shuffled.shuffle(&mut rng);
            let mut prims = a.primitives_in_span(&shuffled);
            canonicalize(&basis, &mut prims);
            assert_eq!(prims, reference, "{deg}");
            for p in &reference {
                assert!(a.reduced_coproduct(p).is_zero());
            }
        }
    }
}
