//! The balanced tensor product `A≥ ⊗_H A≥` in canonical form.
//!
//! Every element is written uniquely as `Σ x_b ⊗ b` with `b` running over
//! coefficient-free basis monomials: coefficients on the right factor are moved
//! across as `x ⊗ η_L(h)·b = x·η_R(h) ⊗ b`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::steenrod::parse::ExprParser;
use crate::steenrod::{DualSteenrod, Element, GenMonomial, Term};

/// `left ⊗ right` with all coefficients in `left`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TensorTerm {
    #[serde(with = "mono_json")]
    pub right: GenMonomial,
    pub left: Term,
}

mod mono_json {
    use super::*;
    pub fn serialize<S: serde::Serializer>(
        m: &GenMonomial,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        Term::mono(*m).serialize(s)
    }
    pub fn deserialize<'de, D: serde::Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<GenMonomial, D::Error> {
        use serde::de::Error as _;
        let t = Term::deserialize(d)?;
        if !t.coeff.is_one() {
            return Err(D::Error::custom(
                "right tensor factor must be coefficient-free",
            ));
        }
        Ok(t.mono)
    }
}

#[derive(Debug, Clone, Default)]
pub struct TensorAcc {
    set: FxHashSet<TensorTerm>,
}

impl TensorAcc {
    pub fn new() -> Self {
        TensorAcc::default()
    }

    pub fn toggle(&mut self, t: TensorTerm) {
        if !self.set.insert(t) {
            self.set.remove(&t);
        }
    }

    pub fn add_tensor(&mut self, x: &TensorElement) {
        for &t in x.terms() {
            self.toggle(t);
        }
    }

    pub fn add_left(&mut self, left: &Element, right: GenMonomial) {
        for &t in left.terms() {
            self.toggle(TensorTerm { right, left: t });
        }
    }

    pub fn into_tensor(self) -> TensorElement {
        let mut terms: Vec<TensorTerm> = self.set.into_iter().collect();
        terms.sort_unstable();
        TensorElement { terms }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TensorElement {
    terms: Vec<TensorTerm>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    /// `x ⊗ 1`.
    pub fn left_only(x: &Element) -> Self {
        let mut acc = TensorAcc::new();
        acc.add_left(x, GenMonomial::ONE);
        acc.into_tensor()
    }

    pub fn from_terms<I: IntoIterator<Item = TensorTerm>>(iter: I) -> Self {
        let mut acc = TensorAcc::new();
        for t in iter {
            acc.toggle(t);
        }
        acc.into_tensor()
    }

    pub fn terms(&self) -> &[TensorTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The left factors grouped by right monomial.
    pub fn by_right(&self) -> BTreeMap<GenMonomial, Element> {
        let mut groups: BTreeMap<GenMonomial, Vec<Term>> = BTreeMap::new();
        for t in &self.terms {
            groups.entry(t.right).or_default().push(t.left);
        }
        groups
            .into_iter()
            .map(|(r, ts)| (r, Element::from_terms(ts)))
            .collect()
    }

    pub fn scaled(&self, c: crate::coefficients::CoeffMonomial) -> TensorElement {
        let mut terms: Vec<TensorTerm> = self
            .terms
            .iter()
            .map(|t| TensorTerm {
                right: t.right,
                left: t.left.scaled(c),
            })
            .collect();
        terms.sort_unstable();
        TensorElement { terms }
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        let mut acc = TensorAcc::new();
        acc.add_tensor(self);
        acc.add_tensor(rhs);
        acc.into_tensor()
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (right, left)) in self.by_right().iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({left}) # ({right})")?;
        }
        Ok(())
    }
}

impl DualSteenrod {
    /// Normal form of `Σ xₖ ⊗ yₖ`.
    pub fn tensor_normalize(&self, pairs: &[(Element, Element)]) -> TensorElement {
        let mut acc = TensorAcc::new();
        for (x, y) in pairs {
            for (b, h) in y.by_monomial() {
                let moved = self.multiply(x, &self.eta_r(&h));
                acc.add_left(&moved, b);
            }
        }
        acc.into_tensor()
    }

    /// `(Σ left ⊗ right)·(Σ left' ⊗ right')` computed factorwise.
    pub fn tensor_multiply(&self, x: &TensorElement, y: &TensorElement) -> TensorElement {
        let mut acc = TensorAcc::new();
        for s in x.terms() {
            for t in y.terms() {
                self.tensor_mul_terms_into(s, t, &mut acc);
            }
        }
        acc.into_tensor()
    }

    pub fn tensor_square(&self, x: &TensorElement) -> TensorElement {
        let mut acc = TensorAcc::new();
        for s in x.terms() {
            self.tensor_mul_terms_into(s, s, &mut acc);
        }
        acc.into_tensor()
    }

    fn tensor_mul_terms_into(&self, s: &TensorTerm, t: &TensorTerm, acc: &mut TensorAcc) {
        let left = self.mul_terms(&s.left, &t.left);
        if s.right.tau_mask() & t.right.tau_mask() == 0 {
            let mut right = s.right.times_xi_part(&t.right);
            for i in t.right.tau_indices() {
                right = right.with_tau_toggled(i);
            }
            acc.add_left(&left, right);
            return;
        }
        let right = self.mul_terms(&Term::mono(s.right), &Term::mono(t.right));
        for rt in right.terms() {
            let moved = if rt.coeff.is_one() {
                left.clone()
            } else {
                self.multiply(&left, &self.eta_r_monomial(rt.coeff))
            };
            acc.add_left(&moved, rt.mono);
        }
    }

    /// Parses `(<element>) # (<element>) + ...` and normalizes.
    pub fn parse_tensor(&self, text: &str) -> Result<TensorElement> {
        let mut p = ExprParser::new(self, text);
        let mut pairs = Vec::new();
        if p.at_end() {
            return p.error("empty expression");
        }
        if p.peek() == Some('0') {
            p.bump();
            if p.at_end() {
                return Ok(TensorElement::zero());
            }
            return p.error("expected end of input after 0");
        }
        loop {
            p.expect('(')?;
            let x = p.parse_sum()?;
            p.expect(')')?;
            p.expect('#')?;
            p.expect('(')?;
            let y = p.parse_sum()?;
            p.expect(')')?;
            pairs.push((x, y));
            match p.peek() {
                None => break,
                Some('+') => p.bump(),
                Some(c) => return p.error(format!("unexpected '{c}'")),
            }
        }
        Ok(self.tensor_normalize(&pairs))
    }
}
