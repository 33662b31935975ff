//! The classical dual Steenrod algebra `A_* = F₂[ξ₁, ξ₂, …]`, `|ξⱼ| = 2ʲ-1`,
//! and its Laurent extension `A_*[σ^±1]`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::coefficients::push_power;
use crate::grading::RODegree;

/// `Π ξⱼ^nⱼ`; entry `j-1` holds the exponent of `ξⱼ`, no trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ClassicalMonomial(Vec<u32>);

impl Ord for ClassicalMonomial {
    /// By degree, then by exponents read from the highest index down.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.len().cmp(&other.0.len()))
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for ClassicalMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl ClassicalMonomial {
    pub fn one() -> Self {
        ClassicalMonomial(Vec::new())
    }

    /// `ξⱼ^n`; `ξ₀ = 1`.
    pub fn xi(j: usize, n: u32) -> Self {
        let mut m = ClassicalMonomial::one();
        if j > 0 {
            m.set(j, n);
        }
        m
    }

    pub fn exp(&self, j: usize) -> u32 {
        if j == 0 {
            return 0;
        }
        self.0.get(j - 1).copied().unwrap_or(0)
    }

    fn set(&mut self, j: usize, n: u32) {
        if self.0.len() < j {
            self.0.resize(j, 0);
        }
        self.0[j - 1] = n;
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn exps(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &n)| n > 0)
            .map(|(k, &n)| (k + 1, n))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Classical degree `Σ nⱼ(2ʲ-1)`.
    pub fn degree(&self) -> i64 {
        self.exps()
            .map(|(j, n)| i64::from(n) * ((1i64 << j) - 1))
            .sum()
    }

    pub fn mul(&self, other: &ClassicalMonomial) -> ClassicalMonomial {
        let len = self.0.len().max(other.0.len());
        let v = (0..len)
            .map(|k| self.0.get(k).copied().unwrap_or(0) + other.0.get(k).copied().unwrap_or(0))
            .collect();
        ClassicalMonomial(v)
    }

    pub fn divides(&self, other: &ClassicalMonomial) -> bool {
        self.exps().all(|(j, n)| other.exp(j) >= n)
    }
}

impl fmt::Display for ClassicalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (j, n) in self.exps() {
            push_power(&mut parts, &format!("X{j}"), n);
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

fn toggle<T: Ord>(set: &mut BTreeSet<T>, x: T) {
    if !set.remove(&x) {
        set.insert(x);
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ClassicalElement {
    terms: BTreeSet<ClassicalMonomial>,
}

impl ClassicalElement {
    pub fn zero() -> Self {
        ClassicalElement::default()
    }

    pub fn one() -> Self {
        ClassicalElement::from_mono(ClassicalMonomial::one())
    }

    pub fn from_mono(m: ClassicalMonomial) -> Self {
        ClassicalElement {
            terms: BTreeSet::from([m]),
        }
    }

    pub fn xi(j: usize) -> Self {
        ClassicalElement::from_mono(ClassicalMonomial::xi(j, 1))
    }

    pub fn toggle(&mut self, m: ClassicalMonomial) {
        toggle(&mut self.terms, m);
    }

    pub fn terms(&self) -> impl Iterator<Item = &ClassicalMonomial> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &ClassicalElement) -> ClassicalElement {
        let mut out = self.clone();
        for m in &other.terms {
            out.toggle(m.clone());
        }
        out
    }

    pub fn mul(&self, other: &ClassicalElement) -> ClassicalElement {
        let mut out = ClassicalElement::zero();
        for x in &self.terms {
            for y in &other.terms {
                out.toggle(x.mul(y));
            }
        }
        out
    }
}

impl fmt::Display for ClassicalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|m| m.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Serialize for ClassicalElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `σ^m · Π ξⱼ^nⱼ`, of RO-degree `(deg - m, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentMonomial {
    pub sigma: i64,
    pub mono: ClassicalMonomial,
}

impl LaurentMonomial {
    pub fn degree(&self) -> RODegree {
        RODegree::new(self.mono.degree() - self.sigma, self.sigma)
    }

    pub fn mul(&self, other: &LaurentMonomial) -> LaurentMonomial {
        LaurentMonomial {
            sigma: self.sigma + other.sigma,
            mono: self.mono.mul(&other.mono),
        }
    }
}

impl fmt::Display for LaurentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.sigma, self.mono.is_one()) {
            (0, _) => write!(f, "{}", self.mono),
            (1, true) => f.write_str("S"),
            (1, false) => write!(f, "S*{}", self.mono),
            (m, true) => write!(f, "S^{m}"),
            (m, false) => write!(f, "S^{m}*{}", self.mono),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentClassicalElement {
    terms: BTreeSet<LaurentMonomial>,
}

impl LaurentClassicalElement {
    pub fn zero() -> Self {
        LaurentClassicalElement::default()
    }

    pub fn one() -> Self {
        LaurentClassicalElement::monomial(0, ClassicalMonomial::one())
    }

    pub fn monomial(sigma: i64, mono: ClassicalMonomial) -> Self {
        LaurentClassicalElement {
            terms: BTreeSet::from([LaurentMonomial { sigma, mono }]),
        }
    }

    pub fn toggle(&mut self, m: LaurentMonomial) {
        toggle(&mut self.terms, m);
    }

    pub fn terms(&self) -> impl Iterator<Item = &LaurentMonomial> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degrees(&self) -> BTreeSet<RODegree> {
        self.terms.iter().map(|m| m.degree()).collect()
    }

    pub fn add(&self, other: &LaurentClassicalElement) -> LaurentClassicalElement {
        let mut out = self.clone();
        for m in &other.terms {
            out.toggle(m.clone());
        }
        out
    }

    pub fn mul(&self, other: &LaurentClassicalElement) -> LaurentClassicalElement {
        let mut out = LaurentClassicalElement::zero();
        for x in &self.terms {
            for y in &other.terms {
                out.toggle(x.mul(y));
            }
        }
        out
    }

    /// `σ ↦ 1`.
    pub fn at_sigma_one(&self) -> ClassicalElement {
        let mut out = ClassicalElement::zero();
        for m in &self.terms {
            out.toggle(m.mono.clone());
        }
        out
    }
}

impl fmt::Display for LaurentClassicalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|m| m.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Serialize for LaurentClassicalElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `Σ left ⊗ right` over `F₂`, or over `F₂[σ^±1]` with `σ` collected in front.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ClassicalTensor {
    terms: BTreeSet<(i64, ClassicalMonomial, ClassicalMonomial)>,
}

impl ClassicalTensor {
    pub fn zero() -> Self {
        ClassicalTensor::default()
    }

    pub fn toggle(&mut self, sigma: i64, left: ClassicalMonomial, right: ClassicalMonomial) {
        toggle(&mut self.terms, (sigma, left, right));
    }

    pub fn terms(&self) -> impl Iterator<Item = &(i64, ClassicalMonomial, ClassicalMonomial)> {
        self.terms.iter()
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

    pub fn mul(&self, other: &ClassicalTensor) -> ClassicalTensor {
        let mut out = ClassicalTensor::zero();
        for (s1, l1, r1) in &self.terms {
            for (s2, l2, r2) in &other.terms {
                out.toggle(s1 + s2, l1.mul(l2), r1.mul(r2));
            }
        }
        out
    }
}

impl fmt::Display for ClassicalTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, l, r)| {
                let left = LaurentMonomial {
                    sigma: *s,
                    mono: l.clone(),
                };
                format!("({left}) # ({r})")
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `Δξⱼ^(2^e) = Σᵢ ξⱼ₋ᵢ^(2^(i+e)) ⊗ ξᵢ^(2^e)`.
fn coproduct_xi_power(j: usize, e: u32) -> ClassicalTensor {
    let mut out = ClassicalTensor::zero();
    for i in 0..=j {
        out.toggle(
            0,
            ClassicalMonomial::xi(j - i, 1 << (i as u32 + e)),
            ClassicalMonomial::xi(i, 1 << e),
        );
    }
    out
}

/// The Milnor coproduct, extended multiplicatively.
pub fn classical_coproduct(x: &ClassicalElement) -> ClassicalTensor {
    let mut out = ClassicalTensor::zero();
    for m in x.terms() {
        for t in monomial_coproduct(0, m).terms {
            out.toggle(t.0, t.1, t.2);
        }
    }
    out
}

fn monomial_coproduct(sigma: i64, m: &ClassicalMonomial) -> ClassicalTensor {
    let mut acc = ClassicalTensor::zero();
    acc.toggle(sigma, ClassicalMonomial::one(), ClassicalMonomial::one());
    for (j, n) in m.exps() {
        for e in 0..32 {
            if n >> e & 1 == 1 {
                acc = acc.mul(&coproduct_xi_power(j, e));
            }
        }
    }
    acc
}

/// The coproduct on `A_*[σ^±1]`, with `σ` primitive and central.
pub fn laurent_coproduct(x: &LaurentClassicalElement) -> ClassicalTensor {
    let mut out = ClassicalTensor::zero();
    for m in x.terms() {
        for t in monomial_coproduct(m.sigma, &m.mono).terms {
            out.toggle(t.0, t.1, t.2);
        }
    }
    out
}
