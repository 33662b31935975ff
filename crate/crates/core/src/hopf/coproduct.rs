//! The coproduct `Δ : A≥ → A≥ ⊗_H A≥`.
//!
//! On generators
//! `Δξₙ = Σ_{i=0}^{n} ξ_{n-i}^{2^i} ⊗ ξᵢ` and `Δτₙ = Σ_{i=0}^{n} ξ_{n-i}^{2^i} ⊗ τᵢ + τₙ ⊗ 1`,
//! extended multiplicatively and by `Δ(η_L(h)x) = (η_L(h) ⊗ 1)Δx`.

use crate::hopf::tensor::{TensorAcc, TensorElement, TensorTerm};
use crate::steenrod::algebra::cached;
use crate::steenrod::{DualSteenrod, Element, GenMonomial, Term};

/// `ξ_{n}^{e}` with `ξ₀ = 1`.
fn xi_pow(n: usize, e: u16) -> GenMonomial {
    if n == 0 {
        GenMonomial::ONE
    } else {
        GenMonomial::xi(n, e)
    }
}

impl DualSteenrod {
    pub fn coproduct_tau(&self, n: usize) -> TensorElement {
        cached(&self.caches.coproduct_gen, (false, n, 0), || {
            let mut acc = TensorAcc::new();
            for i in 0..=n {
                acc.toggle(TensorTerm {
                    left: Term::mono(xi_pow(n - i, 1 << i)),
                    right: GenMonomial::tau(i),
                });
            }
            acc.toggle(TensorTerm {
                left: Term::mono(GenMonomial::tau(n)),
                right: GenMonomial::ONE,
            });
            acc.into_tensor()
        })
    }

    /// `Δ(ξⱼ^{2^e})`.
    pub fn coproduct_xi_power(&self, j: usize, e: u32) -> TensorElement {
        cached(&self.caches.coproduct_gen, (true, j, e), || {
            if e == 0 {
                let mut acc = TensorAcc::new();
                for i in 0..=j {
                    acc.toggle(TensorTerm {
                        left: Term::mono(xi_pow(j - i, 1 << i)),
                        right: xi_pow(i, 1),
                    });
                }
                acc.into_tensor()
            } else {
                self.tensor_square(&self.coproduct_xi_power(j, e - 1))
            }
        })
    }

    /// `Δ` of a coefficient-free basis monomial.
    pub fn coproduct_monomial(&self, m: &GenMonomial) -> TensorElement {
        if m.is_one() {
            return TensorElement::left_only(&Element::one());
        }
        cached(&self.caches.coproduct_mono, *m, || {
            let mut factors: Vec<TensorElement> = Vec::new();
            for i in m.tau_indices() {
                factors.push(self.coproduct_tau(i));
            }
            for (j, n) in m.xi_exps() {
                for e in 0..16 {
                    if (n >> e) & 1 == 1 {
                        factors.push(self.coproduct_xi_power(j, e));
                    }
                }
            }
            let mut it = factors.into_iter();
            let first = it.next().expect("non-unit monomial has a factor");
            it.fold(first, |acc, f| self.tensor_multiply(&acc, &f))
        })
    }

    pub fn coproduct(&self, x: &Element) -> TensorElement {
        let mut acc = TensorAcc::new();
        for t in x.terms() {
            let d = self.coproduct_monomial(&t.mono);
            if t.coeff.is_one() {
                acc.add_tensor(&d);
            } else {
                acc.add_tensor(&d.scaled(t.coeff));
            }
        }
        acc.into_tensor()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{CoeffMonomial, CoeffPoly};

    fn alg() -> DualSteenrod {
        DualSteenrod::default()
    }

    #[test]
    fn generator_examples() {
        let a = alg();
        assert_eq!(
            a.coproduct(&Element::tau(0)).to_string(),
            "(t0) # (1) + (1) # (t0)"
        );
        let expected = a
            .parse_tensor("(x2) # (1) + (x1^2) # (x1) + (1) # (x2)")
            .unwrap();
        assert_eq!(a.coproduct(&Element::xi(2)), expected);
        assert_eq!(
            a.coproduct(&Element::xi(1)).to_string(),
            "(x1) # (1) + (1) # (x1)"
        );
    }

    #[test]
    fn right_unit_route() {
        // Δ(η_R(σ⁻¹)) computed directly equals the normal form of 1 ⊗ η_R(σ⁻¹)
        let a = alg();
        let e = a.eta_r(&CoeffPoly::monomial(CoeffMonomial::S));
        let direct = a.coproduct(&e);
        let via_balance = a.tensor_normalize(&[(Element::one(), e.clone())]);
        assert_eq!(direct, via_balance);
        assert_eq!(
            direct,
            a.parse_tensor("(s + a*t0) # (1) + (a) # (t0)").unwrap()
        );
    }

    #[test]
    fn respects_relation() {
        let a = alg();
        for i in 0..6 {
            let lhs = a.tensor_square(&a.coproduct_tau(i));
            let rhs = a.coproduct(&a.relation_rhs(i));
            assert_eq!(lhs, rhs, "i = {i}");
        }
    }

    #[test]
    fn frobenius_matches_multiplication() {
        let a = alg();
        let d = a.coproduct_xi_power(2, 0);
        assert_eq!(a.coproduct_xi_power(2, 1), a.tensor_multiply(&d, &d));
        let x = a.parse_element("t0*t1*x1^3").unwrap();
        let product = a.tensor_multiply(
            &a.tensor_multiply(&a.coproduct_tau(0), &a.coproduct_tau(1)),
            &a.tensor_multiply(&a.coproduct_xi_power(1, 0), &a.coproduct_xi_power(1, 1)),
        );
        assert_eq!(a.coproduct(&x), product);
    }
}
