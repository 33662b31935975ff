//! The deformation `r: A≥ → A_*` and the restriction `ρ: A≥ → A_*[σ^±1]`.

use serde::Serialize;

use crate::classical::element::{
    classical_coproduct, ClassicalElement, ClassicalMonomial, ClassicalTensor,
    LaurentClassicalElement,
};
use crate::hopf::TensorElement;
use crate::profiles::extnat::{ExtNat, Fin};
use crate::profiles::profile::Sequence;
use crate::steenrod::{Element, GenMonomial, Term};

/// Where `r` sends `τᵢ`: `ξᵢ₊₁` (degree-correct) or `ξᵢ`, with `ξ₀ = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum TauImage {
    #[default]
    Shifted,
    Literal,
}

fn classical_image(m: &GenMonomial, tau: TauImage) -> ClassicalMonomial {
    let mut out = ClassicalMonomial::one();
    for (j, n) in m.xi_exps() {
        out = out.mul(&ClassicalMonomial::xi(j, 2 * u32::from(n)));
    }
    for i in m.tau_indices() {
        let j = match tau {
            TauImage::Shifted => i + 1,
            TauImage::Literal => i,
        };
        out = out.mul(&ClassicalMonomial::xi(j, 1));
    }
    out
}

/// `σ`-exponent of `ρ(m)`: `Σ nⱼ(2ʲ-1) + Σ (2ⁱ-1)`.
fn sigma_weight(m: &GenMonomial) -> i64 {
    let xi: i64 = m
        .xi_exps()
        .map(|(j, n)| i64::from(n) * ((1i64 << j) - 1))
        .sum();
    let tau: i64 = m.tau_indices().map(|i| (1i64 << i) - 1).sum();
    xi + tau
}

/// `a ↦ 0`, `σ⁻¹ ↦ 1`, `ξᵢ ↦ ξᵢ²`, `τᵢ ↦ ξᵢ₊₁`.
pub fn deformation_map(x: &Element) -> ClassicalElement {
    deformation_map_with(x, TauImage::Shifted)
}

pub fn deformation_map_with(x: &Element, tau: TauImage) -> ClassicalElement {
    let mut out = ClassicalElement::zero();
    for t in x.terms() {
        if t.coeff.i == 0 {
            out.toggle(classical_image(&t.mono, tau));
        }
    }
    out
}

fn restrict_term(t: &Term) -> Option<(i64, ClassicalMonomial)> {
    (t.coeff.i == 0).then(|| {
        (
            sigma_weight(&t.mono) - i64::from(t.coeff.j),
            classical_image(&t.mono, TauImage::Shifted),
        )
    })
}

/// `a ↦ 0`, `σ⁻¹ ↦ σ⁻¹`, `ξᵢ ↦ σ^(2ⁱ-1) ξᵢ²`, `τᵢ ↦ σ^(2ⁱ-1) ξᵢ₊₁`.
pub fn restriction_map(x: &Element) -> LaurentClassicalElement {
    let mut out = LaurentClassicalElement::zero();
    for t in x.terms() {
        if let Some((s, m)) = restrict_term(t) {
            out = out.add(&LaurentClassicalElement::monomial(s, m));
        }
    }
    out
}

/// `r ⊗ r` on a normalized tensor.
pub fn deformation_tensor(x: &TensorElement) -> ClassicalTensor {
    let mut out = ClassicalTensor::zero();
    for t in x.terms() {
        if t.left.coeff.i == 0 {
            out.toggle(
                0,
                classical_image(&t.left.mono, TauImage::Shifted),
                classical_image(&t.right, TauImage::Shifted),
            );
        }
    }
    out
}

/// `ρ ⊗ ρ` on a normalized tensor, `σ` collected in front.
pub fn restriction_tensor(x: &TensorElement) -> ClassicalTensor {
    let mut out = ClassicalTensor::zero();
    for t in x.terms() {
        if let Some((s, left)) = restrict_term(&t.left) {
            out.toggle(
                s + sigma_weight(&t.right),
                left,
                classical_image(&t.right, TauImage::Shifted),
            );
        }
    }
    out
}

/// Whether `J(h) = (ξᵢ^(2^h(i)))` is a Hopf ideal of `A_*`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalQuotientReport {
    /// `h(i) ≤ j + h(i+j)` or `h(j) ≤ h(i+j)` for all `i, j ≥ 1`.
    pub numeric: bool,
    /// Every generator of degree at most `bound` has coproduct in `J⊗A + A⊗J`.
    pub direct: bool,
    pub witness: Option<String>,
}

impl ClassicalQuotientReport {
    pub fn agree(&self) -> bool {
        self.numeric == self.direct
    }
}

fn in_classical_ideal(h: &Sequence, m: &ClassicalMonomial) -> bool {
    m.exps().any(|(j, n)| match h.at(j - 1) {
        Fin(e) => e < 32 && n >= 1 << e,
        ExtNat::Inf => false,
    })
}

pub fn classical_quotient_check(h: &Sequence, bound: i64) -> ClassicalQuotientReport {
    let at = |i: usize| h.at(i - 1);
    let top = 2 * h.prefix.len() + 4;
    let numeric = (1..=top)
        .all(|i| (1..=top).all(|j| at(i) <= at(i + j).plus(j as u32) || at(j) <= at(i + j)));
    let mut witness = None;
    'gens: for n in 1.. {
        if (1i64 << n) - 1 > bound {
            break;
        }
        let Fin(e) = at(n) else { continue };
        if e >= 32 || ((1i64 << n) - 1) << e > bound {
            continue;
        }
        let g = ClassicalElement::from_mono(ClassicalMonomial::xi(n, 1 << e));
        for (_, l, r) in classical_coproduct(&g).terms() {
            if !in_classical_ideal(h, l) && !in_classical_ideal(h, r) {
                witness = Some(format!("{g}: ({l}) # ({r})"));
                break 'gens;
            }
        }
    }
    ClassicalQuotientReport {
        numeric,
        direct: witness.is_none(),
        witness,
    }
}
