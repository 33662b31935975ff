//! Elements of `A≥` in canonical form: sets of `(coefficient monomial, basis monomial)` pairs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::coefficients::{CoeffMonomial, CoeffPoly};
use crate::error::{Error, Result};
use crate::grading::RODegree;
use crate::steenrod::monomial::GenMonomial;

/// `η_L(coeff) · mono`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: CoeffMonomial,
    pub mono: GenMonomial,
}

impl Term {
    pub const ONE: Term = Term {
        coeff: CoeffMonomial::ONE,
        mono: GenMonomial::ONE,
    };

    pub fn new(coeff: CoeffMonomial, mono: GenMonomial) -> Self {
        Term { coeff, mono }
    }

    pub fn mono(mono: GenMonomial) -> Self {
        Term {
            coeff: CoeffMonomial::ONE,
            mono,
        }
    }

    pub fn degree(&self) -> RODegree {
        self.coeff.degree() + self.mono.degree()
    }

    pub fn scaled(&self, c: CoeffMonomial) -> Term {
        Term {
            coeff: self.coeff * c,
            mono: self.mono,
        }
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.mono
            .cmp(&other.mono)
            .then_with(|| self.coeff.cmp(&other.coeff))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        self.coeff.push_factors(&mut parts);
        self.mono.push_factors(&mut parts);
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Accumulates terms over `F₂`: inserting a term twice cancels it.
#[derive(Debug, Clone, Default)]
pub struct TermAcc {
    set: FxHashSet<Term>,
}

impl TermAcc {
    pub fn new() -> Self {
        TermAcc::default()
    }

    pub fn toggle(&mut self, t: Term) {
        if !self.set.insert(t) {
            self.set.remove(&t);
        }
    }

    pub fn add_element(&mut self, x: &Element) {
        for &t in x.terms() {
            self.toggle(t);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn into_element(self) -> Element {
        let mut terms: Vec<Term> = self.set.into_iter().collect();
        terms.sort_unstable();
        Element { terms }
    }
}

/// A canonical element of `A≥`. Terms are sorted and pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Element {
    terms: Vec<Term>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Element::from_term(Term::ONE)
    }

    pub fn from_term(t: Term) -> Self {
        Element { terms: vec![t] }
    }

    pub fn from_mono(m: GenMonomial) -> Self {
        Element::from_term(Term::mono(m))
    }

    pub fn tau(i: usize) -> Self {
        Element::from_mono(GenMonomial::tau(i))
    }

    pub fn xi(j: usize) -> Self {
        Element::from_mono(GenMonomial::xi(j, 1))
    }

    pub fn coeff(c: CoeffMonomial) -> Self {
        Element::from_term(Term::new(c, GenMonomial::ONE))
    }

    /// Collects terms with `F₂` cancellation. The monomials must already be basis monomials.
    pub fn from_terms<I: IntoIterator<Item = Term>>(iter: I) -> Self {
        let mut acc = TermAcc::new();
        for t in iter {
            acc.toggle(t);
        }
        acc.into_element()
    }

    pub fn terms(&self) -> &[Term] {
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

    pub fn contains_term(&self, t: &Term) -> bool {
        self.terms.binary_search(t).is_ok()
    }

    /// Multiplies by a coefficient monomial placed on the left.
    pub fn scaled(&self, c: CoeffMonomial) -> Element {
        // scaling preserves distinctness, only the order may change
        let mut terms: Vec<Term> = self.terms.iter().map(|t| t.scaled(c)).collect();
        terms.sort_unstable();
        Element { terms }
    }

    pub fn scaled_poly(&self, h: &CoeffPoly) -> Element {
        let mut acc = TermAcc::new();
        for c in h.terms() {
            for t in &self.terms {
                acc.toggle(t.scaled(c));
            }
        }
        acc.into_element()
    }

    /// Distinct degrees of the terms.
    pub fn degrees(&self) -> Vec<RODegree> {
        let mut ds: Vec<RODegree> = self.terms.iter().map(|t| t.degree()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// The common degree of all terms.
    pub fn degree_of(&self) -> Result<RODegree> {
        let ds = self.degrees();
        match ds.len() {
            0 => Err(Error::ZeroElement),
            1 => Ok(ds[0]),
            _ => Err(Error::Inhomogeneous(ds)),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    /// Homogeneous component of a given degree.
    pub fn component(&self, deg: RODegree) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .copied()
                .filter(|t| t.degree() == deg)
                .collect(),
        }
    }

    /// Largest generator index appearing.
    pub fn max_index(&self) -> Option<usize> {
        self.terms.iter().filter_map(|t| t.mono.max_index()).max()
    }

    /// Expansion over the basis monomials: `x = Σ η_L(h_m) m`.
    pub fn by_monomial(&self) -> BTreeMap<GenMonomial, CoeffPoly> {
        let mut out: BTreeMap<GenMonomial, CoeffPoly> = BTreeMap::new();
        for t in &self.terms {
            out.entry(t.mono).or_default().toggle(t.coeff);
        }
        out
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let (a, b) = (&self.terms, &rhs.terms);
        let mut terms = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    terms.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    terms.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&a[i..]);
        terms.extend_from_slice(&b[j..]);
        Element { terms }
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: CoeffMonomial,
    taus: Vec<usize>,
    xis: BTreeMap<usize, u16>,
}

impl Serialize for Term {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TermJson {
            coeff: self.coeff,
            taus: self.mono.tau_indices().collect(),
            xis: self.mono.xi_exps().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Term {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = TermJson::deserialize(d)?;
        let mut taus = j.taus.clone();
        taus.sort_unstable();
        if taus.windows(2).any(|w| w[0] == w[1]) {
            return Err(D::Error::custom(
                "repeated tau index; use the element grammar for unreduced input",
            ));
        }
        if taus
            .iter()
            .any(|&i| i >= crate::steenrod::monomial::TAU_CAPACITY)
            || j.xis
                .keys()
                .any(|&k| k == 0 || k > crate::steenrod::monomial::XI_CAPACITY)
        {
            return Err(D::Error::custom("generator index out of range"));
        }
        Ok(Term {
            coeff: j.coeff,
            mono: GenMonomial::from_parts(taus, j.xis),
        })
    }
}

impl Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Element::from_terms(Vec::<Term>::deserialize(d)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_of_examples() {
        assert_eq!(Element::tau(0).degree_of().unwrap(), RODegree::new(1, 0));
        assert_eq!(Element::xi(2).degree_of().unwrap(), RODegree::new(3, 3));
        let x =
            &Element::tau(1).scaled(CoeffMonomial::A) + &Element::xi(1).scaled(CoeffMonomial::S);
        assert_eq!(x.degree_of().unwrap(), RODegree::new(2, 0));
        assert_eq!(Element::zero().degree_of(), Err(Error::ZeroElement));
        let y = &Element::tau(0) + &Element::xi(1);
        assert!(matches!(y.degree_of(), Err(Error::Inhomogeneous(ds)) if ds.len() == 2));
    }

    #[test]
    fn addition_cancels() {
        let x = &Element::tau(0) + &Element::xi(1);
        assert!((&x + &x).is_zero());
        assert_eq!(&x + &Element::tau(0), Element::xi(1));
    }

    #[test]
    fn json_roundtrip() {
        let x = Element::from_terms([
            Term::new(CoeffMonomial::A, GenMonomial::tau(1)),
            Term::new(CoeffMonomial::A, GenMonomial::from_parts([0], [(1, 1)])),
            Term::new(CoeffMonomial::S, GenMonomial::xi(1, 1)),
        ]);
        let js = serde_json::to_string(&x).unwrap();
        assert!(js.contains("\"taus\""));
        let back: Element = serde_json::from_str(&js).unwrap();
        assert_eq!(back, x);
        assert_eq!(x.to_string(), "a*t1 + s*x1 + a*t0*x1");
    }
}
