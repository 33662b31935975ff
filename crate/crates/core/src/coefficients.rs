//! The positive-cone coefficient ring `H≥ = F₂[a, σ⁻¹]` and its restriction to
//! the underlying level `F₂[σ^{±1}]`.
//!
//! In the text grammar `a` is the Euler class (degree `-α`) and `s` stands for
//! `σ⁻¹` (degree `1-α`). There is no `σ` in `H≥`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::grading::RODegree;

/// `aⁱ σ⁻ʲ`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
pub struct CoeffMonomial {
    /// exponent of `a`
    pub i: u32,
    /// exponent of `σ⁻¹`
    pub j: u32,
}

impl CoeffMonomial {
    pub const ONE: CoeffMonomial = CoeffMonomial { i: 0, j: 0 };
    pub const A: CoeffMonomial = CoeffMonomial { i: 1, j: 0 };
    pub const S: CoeffMonomial = CoeffMonomial { i: 0, j: 1 };

    pub const fn new(i: u32, j: u32) -> Self {
        CoeffMonomial { i, j }
    }

    pub fn degree(self) -> RODegree {
        let (i, j) = (self.i as i64, self.j as i64);
        RODegree::new(j, -i - j)
    }

    pub fn is_one(self) -> bool {
        self.i == 0 && self.j == 0
    }

    pub fn checked_mul(self, other: CoeffMonomial) -> Option<CoeffMonomial> {
        Some(CoeffMonomial {
            i: self.i.checked_add(other.i)?,
            j: self.j.checked_add(other.j)?,
        })
    }

    /// Writes the monomial as a list of `*`-factors; empty for 1.
    pub(crate) fn push_factors(self, out: &mut Vec<String>) {
        push_power(out, "a", self.i);
        push_power(out, "s", self.j);
    }
}

pub(crate) fn push_power(out: &mut Vec<String>, name: &str, exp: u32) {
    match exp {
        0 => {}
        1 => out.push(name.to_string()),
        e => out.push(format!("{name}^{e}")),
    }
}

impl Mul for CoeffMonomial {
    type Output = CoeffMonomial;
    fn mul(self, rhs: CoeffMonomial) -> CoeffMonomial {
        self.checked_mul(rhs)
            .expect("coefficient exponent overflow")
    }
}

impl fmt::Display for CoeffMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        self.push_factors(&mut parts);
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// An element of `F₂[a, σ⁻¹]`: a finite set of monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoeffPoly {
    terms: BTreeSet<CoeffMonomial>,
}

impl CoeffPoly {
    pub fn zero() -> Self {
        CoeffPoly::default()
    }

    pub fn one() -> Self {
        CoeffPoly::monomial(CoeffMonomial::ONE)
    }

    pub fn monomial(m: CoeffMonomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        CoeffPoly { terms }
    }

    pub fn from_monomials<I: IntoIterator<Item = CoeffMonomial>>(iter: I) -> Self {
        let mut p = CoeffPoly::zero();
        for m in iter {
            p.toggle(m);
        }
        p
    }

    pub fn toggle(&mut self, m: CoeffMonomial) {
        if !self.terms.insert(m) {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = CoeffMonomial> + '_ {
        self.terms.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degrees of the terms, deduplicated.
    pub fn degrees(&self) -> BTreeSet<RODegree> {
        self.terms.iter().map(|m| m.degree()).collect()
    }
}

pub fn coeff_mul(x: &CoeffPoly, y: &CoeffPoly) -> CoeffPoly {
    let mut out = CoeffPoly::zero();
    for &m in &x.terms {
        for &n in &y.terms {
            out.toggle(m * n);
        }
    }
    out
}

impl Add for &CoeffPoly {
    type Output = CoeffPoly;
    fn add(self, rhs: &CoeffPoly) -> CoeffPoly {
        CoeffPoly {
            terms: self
                .terms
                .symmetric_difference(&rhs.terms)
                .copied()
                .collect(),
        }
    }
}

impl Mul for &CoeffPoly {
    type Output = CoeffPoly;
    fn mul(self, rhs: &CoeffPoly) -> CoeffPoly {
        coeff_mul(self, rhs)
    }
}

impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|m| m.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A Laurent polynomial in `σ` over `F₂`, stored as the set of exponents of `σ`.
/// `σ` has degree `-1+α`, so `σ⁻¹` has degree `1-α`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UnderlyingCoeff {
    sigma_exps: BTreeSet<i64>,
}

impl UnderlyingCoeff {
    pub fn zero() -> Self {
        UnderlyingCoeff::default()
    }

    pub fn one() -> Self {
        Self::sigma_power(0)
    }

    pub fn sigma_power(m: i64) -> Self {
        let mut sigma_exps = BTreeSet::new();
        sigma_exps.insert(m);
        UnderlyingCoeff { sigma_exps }
    }

    pub fn toggle(&mut self, m: i64) {
        if !self.sigma_exps.insert(m) {
            self.sigma_exps.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sigma_exps.is_empty()
    }

    pub fn exponents(&self) -> impl Iterator<Item = i64> + '_ {
        self.sigma_exps.iter().copied()
    }

    pub fn sigma_degree(m: i64) -> RODegree {
        RODegree::new(-m, m)
    }

    pub fn mul(&self, other: &UnderlyingCoeff) -> UnderlyingCoeff {
        let mut out = UnderlyingCoeff::zero();
        for &m in &self.sigma_exps {
            for &n in &other.sigma_exps {
                out.toggle(m + n);
            }
        }
        out
    }
}

impl fmt::Display for UnderlyingCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sigma_exps.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .sigma_exps
            .iter()
            .map(|&m| {
                if m == 0 {
                    "1".to_string()
                } else {
                    format!("S^{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The ring map `a ↦ 0`, `σ⁻¹ ↦ σ⁻¹`.
pub fn restrict_coeff(x: &CoeffPoly) -> UnderlyingCoeff {
    let mut out = UnderlyingCoeff::zero();
    for m in x.terms() {
        if m.i == 0 {
            out.toggle(-(m.j as i64));
        }
    }
    out
}

/// `F₂`-dimension of `H≥` in a degree: one monomial `a^{-(c+d)} σ^{-c}` when
/// `c ≥ 0` and `c + d ≤ 0`, nothing otherwise.
pub fn positive_cone_dimension(deg: RODegree) -> usize {
    usize::from(deg.c >= 0 && deg.dim() <= 0)
}

/// The unique monomial of `H≥` in a degree, if any.
pub fn positive_cone_monomial(deg: RODegree) -> Option<CoeffMonomial> {
    (positive_cone_dimension(deg) == 1)
        .then(|| CoeffMonomial::new((-deg.dim()) as u32, deg.c as u32))
}

/// Mackey-functor cell types of the full coefficient ring, transcribed from the
/// published picture. Only the positive cone carries arithmetic in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CellKind {
    /// the constant Mackey functor, on the anti-diagonal `c ≥ 0, d = -c`
    Constant,
    /// `Z/2` at the fixed level, 0 underlying
    Bullet,
    /// `Z/2` at both levels, restriction 0, transfer the identity
    L,
    /// `F₂` at the underlying level only
    LMinus,
    Zero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub kind: CellKind,
    /// the column `c = -1` could not be confirmed against the original source
    pub unconfirmed: bool,
}

pub fn coefficient_cell(deg: RODegree) -> Cell {
    let (c, d) = (deg.c, deg.d);
    let kind = if c >= 0 {
        match (c + d).cmp(&0) {
            std::cmp::Ordering::Equal => CellKind::Constant,
            std::cmp::Ordering::Less => CellKind::Bullet,
            std::cmp::Ordering::Greater => CellKind::Zero,
        }
    } else if c == -1 {
        if d == 1 {
            CellKind::LMinus
        } else {
            CellKind::Zero
        }
    } else {
        match (c + d).cmp(&0) {
            std::cmp::Ordering::Equal => CellKind::L,
            std::cmp::Ordering::Greater => CellKind::Bullet,
            std::cmp::Ordering::Less => CellKind::Zero,
        }
    };
    Cell {
        kind,
        unconfirmed: c == -1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: CoeffMonomial = CoeffMonomial::A;
    const S: CoeffMonomial = CoeffMonomial::S;

    fn p(ms: &[CoeffMonomial]) -> CoeffPoly {
        CoeffPoly::from_monomials(ms.iter().copied())
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            coeff_mul(&p(&[A]), &p(&[A])),
            p(&[CoeffMonomial::new(2, 0)])
        );
        let x = p(&[A, S]);
        assert_eq!(
            coeff_mul(&x, &x),
            p(&[CoeffMonomial::new(2, 0), CoeffMonomial::new(0, 2)])
        );
        let prod = coeff_mul(&p(&[S]), &p(&[A]));
        assert_eq!(prod, p(&[CoeffMonomial::new(1, 1)]));
        assert_eq!(CoeffMonomial::new(1, 1).degree(), RODegree::new(1, -2));
    }

    #[test]
    fn generator_degrees() {
        assert_eq!(A.degree(), RODegree::new(0, -1));
        assert_eq!(S.degree(), RODegree::new(1, -1));
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(
            restrict_coeff(&p(&[CoeffMonomial::new(0, 2)])),
            UnderlyingCoeff::sigma_power(-2)
        );
        assert!(restrict_coeff(&p(&[A])).is_zero());
        assert_eq!(
            restrict_coeff(&p(&[A, S])),
            UnderlyingCoeff::sigma_power(-1)
        );
    }

    #[test]
    fn add_is_symmetric_difference() {
        let x = p(&[A, S, CoeffMonomial::new(3, 1)]);
        assert!((&x + &x).is_zero());
        assert_eq!(&x + &p(&[A]), p(&[S, CoeffMonomial::new(3, 1)]));
    }

    #[test]
    fn restriction_kernel_is_a_multiples() {
        // per degree H≥ is at most one-dimensional; the monomial restricts to
        // zero exactly when it is divisible by a
        for c in 0..8 {
            for d in -12..2 {
                let deg = RODegree::new(c, d);
                if let Some(m) = positive_cone_monomial(deg) {
                    assert_eq!(m.degree(), deg);
                    let killed = restrict_coeff(&CoeffPoly::monomial(m)).is_zero();
                    assert_eq!(killed, m.i >= 1);
                }
            }
        }
    }

    #[test]
    fn cone_dimension_matches_enumeration() {
        for c in -4..8i64 {
            for d in -12..6i64 {
                let deg = RODegree::new(c, d);
                let mut count = 0;
                for i in 0..20u32 {
                    for j in 0..20u32 {
                        if CoeffMonomial::new(i, j).degree() == deg {
                            count += 1;
                        }
                    }
                }
                assert_eq!(count, positive_cone_dimension(deg), "{deg}");
            }
        }
    }

    #[test]
    fn cell_table() {
        assert_eq!(
            coefficient_cell(RODegree::new(0, 0)).kind,
            CellKind::Constant
        );
        assert_eq!(
            coefficient_cell(RODegree::new(3, -3)).kind,
            CellKind::Constant
        );
        assert_eq!(
            coefficient_cell(RODegree::new(1, -5)).kind,
            CellKind::Bullet
        );
        assert_eq!(coefficient_cell(RODegree::new(-2, 2)).kind, CellKind::L);
        assert_eq!(
            coefficient_cell(RODegree::new(-3, 7)).kind,
            CellKind::Bullet
        );
        assert_eq!(
            coefficient_cell(RODegree::new(-1, 1)).kind,
            CellKind::LMinus
        );
        assert!(coefficient_cell(RODegree::new(-1, 1)).unconfirmed);
        assert_eq!(coefficient_cell(RODegree::new(2, 1)).kind, CellKind::Zero);
        // the positive cone part of the table agrees with the ring
        for c in 0..6 {
            for d in -8..4 {
                let deg = RODegree::new(c, d);
                let nonzero = coefficient_cell(deg).kind != CellKind::Zero;
                assert_eq!(nonzero, positive_cone_dimension(deg) == 1);
            }
        }
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        fn poly() -> impl Strategy<Value = CoeffPoly> {
            proptest::collection::vec((0u32..6, 0u32..6), 0..6).prop_map(|v| {
                CoeffPoly::from_monomials(v.into_iter().map(|(i, j)| CoeffMonomial::new(i, j)))
            })
        }

        proptest! {
            #[test]
            fn restriction_is_ring_map(x in poly(), y in poly()) {
                prop_assert_eq!(restrict_coeff(&coeff_mul(&x, &y)), restrict_coeff(&x).mul(&restrict_coeff(&y)));
                let sum = &x + &y;
                let mut expected = restrict_coeff(&x);
                for m in restrict_coeff(&y).exponents() { expected.toggle(m); }
                prop_assert_eq!(restrict_coeff(&sum), expected);
            }

            #[test]
            fn ring_axioms(x in poly(), y in poly(), z in poly()) {
                prop_assert_eq!(coeff_mul(&x, &y), coeff_mul(&y, &x));
                prop_assert_eq!(coeff_mul(&x, &coeff_mul(&y, &z)), coeff_mul(&coeff_mul(&x, &y), &z));
                prop_assert_eq!(coeff_mul(&x, &(&y + &z)), &coeff_mul(&x, &y) + &coeff_mul(&x, &z));
                prop_assert!((&x + &x).is_zero());
            }
        }
    }
}
