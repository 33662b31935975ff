//! The ideals `I(h,k)`: generators, spans in a single degree, membership.

use std::fmt;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grading::RODegree;
use crate::linalg::{BitVec, Echelon};
use crate::profiles::extnat::ExtNat;
use crate::profiles::profile::Profile;
use crate::steenrod::monomial::{tau_degree, xi_degree};
use crate::steenrod::{DualSteenrod, Element, GenMonomial, Term};
use crate::window::Window;

/// Upper bound on the number of products `u·g` formed for one degree.
pub const MAX_SPAN_PRODUCTS: usize = 1 << 21;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorKind {
    Xi,
    Tau,
}

/// `ξᵢ^(2^e)` or `τᵢ^(2^e)`, with its reduced form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealGenerator {
    pub kind: GeneratorKind,
    pub index: usize,
    pub log_exponent: u32,
    pub degree: RODegree,
    pub element: Element,
}

impl fmt::Display for IdealGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            GeneratorKind::Xi => "x",
            GeneratorKind::Tau => "t",
        };
        match self.log_exponent {
            0 => write!(f, "{name}{}", self.index),
            e => write!(f, "{name}{}^{}", self.index, 1u64 << e),
        }
    }
}

impl Profile {
    /// Whether a basis monomial lies in `I(h,k)` when `(h,k)` is free.
    pub fn kills_monomial(&self, m: &GenMonomial) -> bool {
        m.xi_exps().any(|(j, n)| match self.h(j) {
            ExtNat::Fin(e) => e < 16 && u32::from(n) >= 1 << e,
            ExtNat::Inf => false,
        }) || m.tau_indices().any(|i| self.k(i) == ExtNat::Fin(0))
    }
}

impl DualSteenrod {
    /// Generators of `I(p)` with `c`-degree at most `max_c`, ordered by degree.
    pub fn ideal_generators_up_to_c(&self, p: &Profile, max_c: i64) -> Result<Vec<IdealGenerator>> {
        self.ideal_generators_where(p, |d| d.c <= max_c, |d| d.c > max_c)
    }

    /// Generators of `I(p)` whose degree lies in `window`.
    pub fn ideal_generators(&self, p: &Profile, window: &Window) -> Result<Vec<IdealGenerator>> {
        self.ideal_generators_where(p, |d| window.contains(d), |d| d.dim() > window.dim_hi)
    }

    fn ideal_generators_where(
        &self,
        p: &Profile,
        keep: impl Fn(RODegree) -> bool,
        past: impl Fn(RODegree) -> bool,
    ) -> Result<Vec<IdealGenerator>> {
        let mut out = Vec::new();
        for i in 1.. {
            if past(xi_degree(i)) {
                break;
            }
            if let ExtNat::Fin(e) = p.h(i) {
                let deg = (1i64 << e.min(62)) * xi_degree(i);
                if e < 16 && keep(deg) {
                    self.check_index(i)?;
                    let element = Element::from_mono(GenMonomial::xi(i, 1 << e));
                    out.push(IdealGenerator {
                        kind: GeneratorKind::Xi,
                        index: i,
                        log_exponent: e,
                        degree: deg,
                        element,
                    });
                }
            }
        }
        for i in 0.. {
            if past(tau_degree(i)) {
                break;
            }
            if let ExtNat::Fin(e) = p.k(i) {
                let deg = (1i64 << e.min(62)) * tau_degree(i);
                if keep(deg) {
                    let element = self.tau_power(i, e)?;
                    out.push(IdealGenerator {
                        kind: GeneratorKind::Tau,
                        index: i,
                        log_exponent: e,
                        degree: deg,
                        element,
                    });
                }
            }
        }
        out.sort_by(|x, y| {
            (x.degree.dim(), x.degree.twist(), x.kind, x.index).cmp(&(
                y.degree.dim(),
                y.degree.twist(),
                y.kind,
                y.index,
            ))
        });
        Ok(out)
    }

    /// Membership for free pairs: `x ∈ I(p)` iff every monomial of its
    /// reduced form is killed.
    pub fn member_free(&self, p: &Profile, x: &Element) -> Result<bool> {
        if !p.is_free_pair() {
            return Err(Error::Precondition(format!("{p} is not a free pair")));
        }
        self.check_element(x)?;
        Ok(x.terms().iter().all(|t| p.kills_monomial(&t.mono)))
    }

    /// Membership by linear algebra in the degree of `x`.
    pub fn member_window(&self, p: &Profile, x: &Element) -> Result<bool> {
        if x.is_zero() {
            return Ok(true);
        }
        let deg = x.degree_of()?;
        Ok(self.ideal_span(p, deg)?.contains(x))
    }

    /// The `F₂`-span of `I(p)` in one degree.
    pub fn ideal_span(&self, p: &Profile, deg: RODegree) -> Result<IdealSpan> {
        let space = DegreeSpace::new(deg, self.f2_basis_of_bidegree(deg)?);
        let mut echelon = Echelon::new();
        let mut products = 0usize;
        for g in self.ideal_generators_up_to_c(p, deg.c)? {
            let us = self.f2_basis_of_bidegree(deg - g.degree)?;
            products += us.len();
            if products > MAX_SPAN_PRODUCTS {
                return Err(Error::ResourceLimit(format!("ideal span in degree {deg}")));
            }
            for u in us {
                if echelon.rank() == space.len() {
                    break;
                }
                let prod = self.multiply(&Element::from_term(u), &g.element);
                echelon.insert(space.vector(&prod));
            }
        }
        Ok(IdealSpan { space, echelon })
    }

    /// First degree of `window` where `I(p)` and `I(q)` differ.
    pub fn ideal_spans_differ(
        &self,
        p: &Profile,
        q: &Profile,
        window: &Window,
    ) -> Result<Option<RODegree>> {
        for deg in window.bidegrees() {
            let x = self.ideal_span(p, deg)?;
            if x.space.is_empty() {
                continue;
            }
            if !x.same_span(&self.ideal_span(q, deg)?) {
                return Ok(Some(deg));
            }
        }
        Ok(None)
    }
}

/// The `F₂`-basis of `A≥` in one degree with a column index per term.
#[derive(Debug, Clone)]
pub struct DegreeSpace {
    pub degree: RODegree,
    basis: Vec<Term>,
    index: FxHashMap<Term, usize>,
}

impl DegreeSpace {
    pub fn new(degree: RODegree, basis: Vec<Term>) -> Self {
        let index = basis.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        DegreeSpace {
            degree,
            basis,
            index,
        }
    }

    pub fn basis(&self) -> &[Term] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coordinates of a homogeneous element of this degree.
    pub fn vector(&self, x: &Element) -> BitVec {
        BitVec::from_indices(x.terms().iter().map(|t| {
            *self
                .index
                .get(t)
                .unwrap_or_else(|| panic!("term {t} is not in degree {}", self.degree))
        }))
    }

    pub fn element(&self, v: &BitVec) -> Element {
        Element::from_terms(v.ones().map(|i| self.basis[i]))
    }
}

#[derive(Debug, Clone)]
pub struct IdealSpan {
    pub space: DegreeSpace,
    echelon: Echelon,
}

impl IdealSpan {
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// A basis of `I` in this degree.
    pub fn basis(&self) -> Vec<Element> {
        self.echelon
            .rows()
            .iter()
            .map(|v| self.space.element(v))
            .collect()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.echelon.contains(&self.space.vector(x))
    }

    /// Dimension of `(A/I)` in this degree.
    pub fn quotient_dim(&self) -> usize {
        self.space.len() - self.rank()
    }

    /// Whether `elems` project to a basis of `(A/I)` in this degree.
    pub fn complements(&self, elems: &[Element]) -> bool {
        let mut e = self.echelon.clone();
        elems.iter().all(|x| e.insert(self.space.vector(x))) && e.rank() == self.space.len()
    }

    pub fn same_span(&self, other: &IdealSpan) -> bool {
        if self.space.degree != other.space.degree || self.rank() != other.rank() {
            return false;
        }
        (0..self.space.len()).all(|i| {
            let mut v = BitVec::unit(i);
            self.echelon.reduce(&mut v);
            let mut w = BitVec::unit(i);
            other.echelon.reduce(&mut w);
            v.xor_assign(&w);
            v.is_zero()
        })
    }
}
