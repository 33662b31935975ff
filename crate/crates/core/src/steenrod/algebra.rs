//! The algebra context: configuration, multiplication with on-the-fly
//! reduction, units, counit and `τ`-powers.

use std::sync::{OnceLock, RwLock};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::coefficients::{CoeffMonomial, CoeffPoly};
use crate::error::{Error, Result};
use crate::hopf::tensor::TensorElement;
use crate::steenrod::element::{Element, Term, TermAcc};
use crate::steenrod::monomial::{GenMonomial, TAU_CAPACITY};

pub const DEFAULT_INDEX_BOUND: usize = 16;
/// Largest accepted index bound; keeps every reachable generator inside the
/// fixed-width monomial representation.
pub const MAX_INDEX_BOUND: usize = 24;
pub const INDEX_BOUND_ENV: &str = "Z2STEENROD_INDEX_BOUND";

/// Which relation rewrites `τᵢ²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum Relation {
    /// `τᵢ² = aτᵢ₊₁ + η_R(σ⁻¹)ξᵢ₊₁` with `η_R(σ⁻¹) = σ⁻¹ + aτ₀`.
    #[default]
    Standard,
    /// `τᵢ² = aτᵢ₊₁ + σ⁻¹ξᵢ₊₁`: the right unit replaced by the left one.
    /// Not a Hopf algebroid; kept as a negative control for the axiom suite.
    LeftUnitOnly,
}

/// Which counit identity anchors the antipode recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum AntipodeRecursion {
    /// Solve `μ(c ⊗ Id)Δ = η_R ε`.
    #[default]
    LeftFactor,
    /// Solve `μ(Id ⊗ c)Δ = η_L ε`.
    RightFactor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub index_bound: usize,
    pub relation: Relation,
    pub antipode: AntipodeRecursion,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            index_bound: DEFAULT_INDEX_BOUND,
            relation: Relation::Standard,
            antipode: AntipodeRecursion::LeftFactor,
        }
    }
}

impl Config {
    /// Default configuration with the index bound taken from the environment when set.
    pub fn from_env() -> Result<Self> {
        let mut c = Config::default();
        if let Ok(v) = std::env::var(INDEX_BOUND_ENV) {
            let b: usize = v.trim().parse().map_err(|_| {
                Error::Invalid(format!(
                    "{INDEX_BOUND_ENV} must be a nonnegative integer, got {v:?}"
                ))
            })?;
            c.index_bound = b;
        }
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.index_bound > MAX_INDEX_BOUND {
            return Err(Error::BoundExceeded {
                index: self.index_bound,
                bound: MAX_INDEX_BOUND,
            });
        }
        Ok(())
    }
}

#[derive(Default)]
pub(crate) struct Caches {
    pub eta_r: RwLock<FxHashMap<CoeffMonomial, Element>>,
    /// `Δ(τᵢ)` keyed by `(false, i, 0)` and `Δ(ξⱼ^{2^e})` keyed by `(true, j, e)`.
    pub coproduct_gen: RwLock<FxHashMap<(bool, usize, u32), TensorElement>>,
    pub coproduct_mono: RwLock<FxHashMap<GenMonomial, TensorElement>>,
    /// `c(τᵢ)` keyed by `(false, i, 0)` and `c(ξⱼ^{2^e})` keyed by `(true, j, e)`.
    pub antipode_gen: RwLock<FxHashMap<(bool, usize, u32), Element>>,
}

/// `A≥` with a fixed configuration. All operations are pure; the internal
/// memo tables only ever receive values that every writer computes identically.
pub struct DualSteenrod {
    config: Config,
    pub(crate) caches: Caches,
}

impl std::fmt::Debug for DualSteenrod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DualSteenrod")
            .field("config", &self.config)
            .finish()
    }
}

impl Default for DualSteenrod {
    fn default() -> Self {
        DualSteenrod::new(Config::default()).expect("default config is valid")
    }
}

static DEFAULT: OnceLock<DualSteenrod> = OnceLock::new();

/// The process-wide standard algebra. The index bound is read from the
/// environment on first use; an invalid value falls back to the default.
pub fn default_algebra() -> &'static DualSteenrod {
    DEFAULT.get_or_init(|| {
        DualSteenrod::new(Config::from_env().unwrap_or_default()).expect("valid config")
    })
}

pub(crate) fn cached<K, V, F>(lock: &RwLock<FxHashMap<K, V>>, key: K, compute: F) -> V
where
    K: std::hash::Hash + Eq,
    V: Clone,
    F: FnOnce() -> V,
{
    if let Some(v) = lock.read().unwrap().get(&key) {
        return v.clone();
    }
    let v = compute();
    lock.write()
        .unwrap()
        .entry(key)
        .or_insert_with(|| v.clone());
    v
}

impl DualSteenrod {
    pub fn new(config: Config) -> Result<Self> {
        config.validate()?;
        Ok(DualSteenrod {
            config,
            caches: Caches::default(),
        })
    }

    pub fn with_relation(relation: Relation) -> Self {
        DualSteenrod::new(Config {
            relation,
            ..Config::default()
        })
        .expect("valid config")
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn index_bound(&self) -> usize {
        self.config.index_bound
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index > self.config.index_bound {
            Err(Error::BoundExceeded {
                index,
                bound: self.config.index_bound,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_element(&self, x: &Element) -> Result<()> {
        match x.max_index() {
            Some(i) => self.check_index(i),
            None => Ok(()),
        }
    }

    /// Right-hand side of the relation for `τᵢ²`.
    pub fn relation_rhs(&self, i: usize) -> Element {
        let a = CoeffMonomial::A;
        let mut terms = vec![
            Term::new(a, GenMonomial::tau(i + 1)),
            Term::new(CoeffMonomial::S, GenMonomial::xi(i + 1, 1)),
        ];
        if self.config.relation == Relation::Standard {
            terms.push(Term::new(a, GenMonomial::from_parts([0], [(i + 1, 1)])));
        }
        Element::from_terms(terms)
    }

    /// `t · τᵢ`, accumulated.
    fn mul_tau_into(&self, t: Term, i: usize, acc: &mut TermAcc) {
        if !t.mono.has_tau(i) {
            acc.toggle(Term::new(t.coeff, t.mono.with_tau_toggled(i)));
            return;
        }
        assert!(i + 1 < TAU_CAPACITY, "tau index {} beyond capacity", i + 1);
        let base = t.mono.with_tau_toggled(i);
        let a = t.coeff * CoeffMonomial::A;
        self.mul_tau_into(Term::new(a, base), i + 1, acc);
        acc.toggle(Term::new(
            t.coeff * CoeffMonomial::S,
            base.times_xi(i + 1, 1),
        ));
        if self.config.relation == Relation::Standard {
            self.mul_tau_into(Term::new(a, base.times_xi(i + 1, 1)), 0, acc);
        }
    }

    pub(crate) fn mul_terms_into(&self, x: &Term, y: &Term, acc: &mut TermAcc) {
        let overlap = x.mono.tau_mask() & y.mono.tau_mask();
        let mut mono = x.mono.times_xi_part(&y.mono);
        for i in 0..TAU_CAPACITY {
            if (y.mono.tau_mask() & !overlap) >> i & 1 == 1 {
                mono = mono.with_tau_toggled(i);
            }
        }
        let start = Term::new(x.coeff * y.coeff, mono);
        if overlap == 0 {
            acc.toggle(start);
            return;
        }
        let mut cur = vec![start];
        for i in 0..TAU_CAPACITY {
            if (overlap >> i) & 1 == 0 {
                continue;
            }
            let mut next = TermAcc::new();
            for t in cur {
                self.mul_tau_into(t, i, &mut next);
            }
            cur = next.into_element().terms().to_vec();
        }
        for t in cur {
            acc.toggle(t);
        }
    }

    pub fn mul_terms(&self, x: &Term, y: &Term) -> Element {
        let mut acc = TermAcc::new();
        self.mul_terms_into(x, y, &mut acc);
        acc.into_element()
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        let mut acc = TermAcc::new();
        for s in x.terms() {
            for t in y.terms() {
                self.mul_terms_into(s, t, &mut acc);
            }
        }
        acc.into_element()
    }

    /// `x²`, computed termwise (Frobenius).
    pub fn square(&self, x: &Element) -> Element {
        let mut acc = TermAcc::new();
        for t in x.terms() {
            self.mul_terms_into(t, t, &mut acc);
        }
        acc.into_element()
    }

    pub fn pow(&self, x: &Element, mut n: u64) -> Element {
        let mut result = Element::one();
        let mut base = x.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = self.multiply(&result, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.square(&base);
            }
        }
        result
    }

    pub fn eta_l(&self, h: &CoeffPoly) -> Element {
        Element::from_terms(h.terms().map(|c| Term::new(c, GenMonomial::ONE)))
    }

    /// `η_R` on one coefficient monomial: `aⁱ (σ⁻¹ + aτ₀)ʲ`.
    pub fn eta_r_monomial(&self, c: CoeffMonomial) -> Element {
        cached(&self.caches.eta_r, c, || {
            let e = self.eta_r_sigma_inv();
            self.pow(&e, c.j as u64).scaled(CoeffMonomial::new(c.i, 0))
        })
    }

    /// `η_R(σ⁻¹) = σ⁻¹ + aτ₀`.
    pub fn eta_r_sigma_inv(&self) -> Element {
        Element::from_terms([
            Term::new(CoeffMonomial::S, GenMonomial::ONE),
            Term::new(CoeffMonomial::A, GenMonomial::tau(0)),
        ])
    }

    pub fn eta_r(&self, h: &CoeffPoly) -> Element {
        let mut acc = TermAcc::new();
        for c in h.terms() {
            acc.add_element(&self.eta_r_monomial(c));
        }
        acc.into_element()
    }

    /// Keeps the generator-free terms.
    pub fn counit(&self, x: &Element) -> CoeffPoly {
        CoeffPoly::from_monomials(
            x.terms()
                .iter()
                .filter(|t| t.mono.is_one())
                .map(|t| t.coeff),
        )
    }

    /// `τᵢ^{2^m}` from the closed expansion
    /// `a^{2^m-1}τᵢ₊ₘ + Σ_{j=1}^{m} a^{2^m-2^j} η_R(σ⁻¹)^{2^{j-1}} ξ_{i+m-j+1}^{2^{j-1}}`.
    pub fn tau_power(&self, i: usize, m: u32) -> Result<Element> {
        self.tau_power_with(i, m, XiExponent::Corrected)
    }

    /// The closed expansion with a chosen `ξ` exponent convention.
    pub fn tau_power_with(&self, i: usize, m: u32, form: XiExponent) -> Result<Element> {
        self.check_index(i + m as usize)?;
        if m >= 31 {
            return Err(Error::Invalid(format!("exponent 2^{m} is out of range")));
        }
        let p = 1u32 << m;
        let mut acc = TermAcc::new();
        acc.toggle(Term::new(
            CoeffMonomial::new(p - 1, 0),
            GenMonomial::tau(i + m as usize),
        ));
        for j in 1..=m {
            let e = 1u32 << (j - 1);
            let xi_exp = match form {
                XiExponent::Corrected => e,
                XiExponent::AsPrinted => 1 << j,
            };
            let xi_exp = u16::try_from(xi_exp)
                .map_err(|_| Error::Invalid("xi exponent out of range".into()))?;
            let unit = self.eta_r_monomial(CoeffMonomial::new(0, e));
            let xi = Element::from_mono(GenMonomial::xi(i + m as usize - j as usize + 1, xi_exp));
            let part = self
                .multiply(&unit, &xi)
                .scaled(CoeffMonomial::new(p - (1 << j), 0));
            acc.add_element(&part);
        }
        Ok(acc.into_element())
    }

    /// Reduces a product of generators with arbitrary `τ` exponents.
    pub fn reduce(&self, raw: &[RawTerm]) -> Result<Element> {
        let mut acc = TermAcc::new();
        for r in raw {
            acc.add_element(&self.reduce_raw_term(r)?);
        }
        Ok(acc.into_element())
    }

    fn reduce_raw_term(&self, r: &RawTerm) -> Result<Element> {
        let mut mono = GenMonomial::ONE;
        for &(j, n) in &r.xis {
            if j == 0 {
                return Err(Error::Invalid("xi indices start at 1".into()));
            }
            self.check_index(j)?;
            let n = u16::try_from(n).map_err(|_| Error::ExponentOverflow { column: 0 })?;
            mono = mono
                .checked_times_xi_part(&GenMonomial::xi(j, n))
                .ok_or(Error::ExponentOverflow { column: 0 })?;
        }
        let mut x = Element::from_term(Term::new(r.coeff, mono));
        let mut taus = r.taus.clone();
        taus.sort_unstable();
        for (i, e) in taus {
            self.check_index(i)?;
            // lowest index first; τᵢ^{2q+r} = (τᵢ²)^q τᵢ^r
            let t = self.pow(&Element::tau(i), e as u64);
            x = self.multiply(&x, &t);
        }
        Ok(x)
    }
}

/// Exponent convention for the `ξ` factors of the closed `τ`-power expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum XiExponent {
    /// `ξ^{2^{j-1}}`, which agrees with repeated squaring.
    Corrected,
    /// `ξ^{2^j}`, as the formula is usually printed.
    AsPrinted,
}

/// A monomial before reduction: `τ` exponents are unrestricted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RawTerm {
    pub coeff: CoeffMonomial,
    pub taus: Vec<(usize, u32)>,
    pub xis: Vec<(usize, u32)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::RODegree;

    fn alg() -> DualSteenrod {
        DualSteenrod::default()
    }

    fn t(c: (u32, u32), taus: &[usize], xis: &[(usize, u16)]) -> Term {
        Term::new(
            CoeffMonomial::new(c.0, c.1),
            GenMonomial::from_parts(taus.iter().copied(), xis.iter().copied()),
        )
    }

    #[test]
    fn tau0_squared() {
        let a = alg();
        let sq = a.multiply(&Element::tau(0), &Element::tau(0));
        let expected = Element::from_terms([
            t((1, 0), &[1], &[]),
            t((0, 1), &[], &[(1, 1)]),
            t((1, 0), &[0], &[(1, 1)]),
        ]);
        assert_eq!(sq, expected);
        assert_eq!(sq.to_string(), "a*t1 + s*x1 + a*t0*x1");
    }

    #[test]
    fn tau1_squared_is_homogeneous() {
        let a = alg();
        let sq = a.square(&Element::tau(1));
        let expected = Element::from_terms([
            t((1, 0), &[2], &[]),
            t((0, 1), &[], &[(2, 1)]),
            t((1, 0), &[0], &[(2, 1)]),
        ]);
        assert_eq!(sq, expected);
        assert_eq!(sq.degree_of().unwrap(), RODegree::new(4, 2));
    }

    #[test]
    fn relation_homogeneous_up_to_8() {
        let a = alg();
        for i in 0..=8 {
            let lhs = 2 * GenMonomial::tau(i).degree();
            assert_eq!(a.relation_rhs(i).degree_of().unwrap(), lhs, "i = {i}");
        }
    }

    #[test]
    fn introduction_form_is_not_homogeneous() {
        // τᵢ² = aξᵢ₊₁ + (aτ₀ + σ⁻¹)τᵢ₊₁ mixes degrees
        for i in 0..=8 {
            let rhs = Element::from_terms([
                t((1, 0), &[], &[(i + 1, 1)]),
                t((1, 0), &[0, i + 1], &[]),
                t((0, 1), &[i + 1], &[]),
            ]);
            let lhs = 2 * GenMonomial::tau(i).degree();
            assert!(rhs.degree_of().is_err() || rhs.degree_of().unwrap() != lhs);
        }
    }

    #[test]
    fn product_example() {
        let a = alg();
        let x = Element::from_term(t((1, 0), &[0], &[]));
        let y = Element::from_term(t((0, 1), &[], &[(1, 1)]));
        assert_eq!(
            a.multiply(&x, &y),
            Element::from_term(t((1, 1), &[0], &[(1, 1)]))
        );
    }

    #[test]
    fn units_and_counit() {
        let a = alg();
        assert_eq!(
            a.eta_r(&CoeffPoly::monomial(CoeffMonomial::A)),
            Element::coeff(CoeffMonomial::A)
        );
        assert_eq!(
            a.eta_r(&CoeffPoly::monomial(CoeffMonomial::S)).to_string(),
            "s + a*t0"
        );
        // η_R(σ⁻²) = σ⁻² + a²τ₀²
        let s2 = a.eta_r(&CoeffPoly::monomial(CoeffMonomial::new(0, 2)));
        let tau_sq = a.square(&Element::tau(0)).scaled(CoeffMonomial::new(2, 0));
        assert_eq!(s2, &Element::coeff(CoeffMonomial::new(0, 2)) + &tau_sq);
        assert_eq!(
            a.counit(&a.eta_r_sigma_inv()),
            CoeffPoly::monomial(CoeffMonomial::S)
        );
        assert_eq!(a.counit(&Element::one()), CoeffPoly::one());
        assert!(a
            .counit(&Element::from_term(t((0, 0), &[0], &[(1, 1)])))
            .is_zero());
    }

    #[test]
    fn tau_power_small_cases() {
        let a = alg();
        assert_eq!(a.tau_power(0, 0).unwrap(), Element::tau(0));
        assert_eq!(a.tau_power(0, 1).unwrap(), a.square(&Element::tau(0)));
        let by_squaring = a.square(&a.square(&Element::tau(0)));
        assert_eq!(a.tau_power(0, 2).unwrap(), by_squaring);
        assert_ne!(
            a.tau_power_with(0, 1, XiExponent::AsPrinted).unwrap(),
            by_squaring
        );
        assert!(matches!(
            a.tau_power(10, 7),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn reduce_raw() {
        let a = alg();
        let raw = RawTerm {
            coeff: CoeffMonomial::ONE,
            taus: vec![(0, 2)],
            xis: vec![],
        };
        let r = a.reduce(&[raw]).unwrap();
        assert_eq!(r.to_string(), "a*t1 + s*x1 + a*t0*x1");
        let raw3 = RawTerm {
            coeff: CoeffMonomial::S,
            taus: vec![(1, 3), (0, 1)],
            xis: vec![(2, 1)],
        };
        let direct = a.multiply(
            &a.multiply(&a.pow(&Element::tau(1), 3), &Element::tau(0)),
            &Element::from_term(t((0, 1), &[], &[(2, 1)])),
        );
        assert_eq!(a.reduce(&[raw3]).unwrap(), direct);
    }

    #[test]
    fn env_bound_is_validated() {
        let c = Config {
            index_bound: MAX_INDEX_BOUND + 1,
            ..Config::default()
        };
        assert!(DualSteenrod::new(c).is_err());
    }
}
