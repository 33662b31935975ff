//! Coefficient-free monomials `Π τᵢ^{εᵢ} ξⱼ^{n(j)}` of the monomial basis.

use std::cmp::Ordering;
use std::fmt;

use crate::grading::RODegree;

/// Number of `τ` slots (`τ₀ … τ₃₁`).
pub const TAU_CAPACITY: usize = 32;
/// Number of `ξ` slots (`ξ₁ … ξ₃₂`).
pub const XI_CAPACITY: usize = 32;

/// A monomial with square-free `τ` part.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenMonomial {
    tau: u32,
    xi: [u16; XI_CAPACITY],
}

impl Default for GenMonomial {
    fn default() -> Self {
        GenMonomial::ONE
    }
}

pub fn tau_degree(i: usize) -> RODegree {
    let p = 1i64 << i;
    RODegree::new(p, p - 1)
}

pub fn xi_degree(j: usize) -> RODegree {
    let p = (1i64 << j) - 1;
    RODegree::new(p, p)
}

impl GenMonomial {
    pub const ONE: GenMonomial = GenMonomial {
        tau: 0,
        xi: [0; XI_CAPACITY],
    };

    /// `τᵢ`. Panics past the capacity.
    pub fn tau(i: usize) -> Self {
        assert!(i < TAU_CAPACITY, "tau index {i} beyond capacity");
        GenMonomial {
            tau: 1 << i,
            ..GenMonomial::ONE
        }
    }

    /// `ξⱼⁿ` for `j ≥ 1`. Panics past the capacity.
    pub fn xi(j: usize, n: u16) -> Self {
        assert!((1..=XI_CAPACITY).contains(&j), "xi index {j} out of range");
        let mut m = GenMonomial::ONE;
        m.xi[j - 1] = n;
        m
    }

    pub fn from_parts<T, X>(taus: T, xis: X) -> Self
    where
        T: IntoIterator<Item = usize>,
        X: IntoIterator<Item = (usize, u16)>,
    {
        let mut m = GenMonomial::ONE;
        for i in taus {
            assert!(i < TAU_CAPACITY, "tau index {i} beyond capacity");
            m.tau |= 1 << i;
        }
        for (j, n) in xis {
            assert!((1..=XI_CAPACITY).contains(&j), "xi index {j} out of range");
            m.xi[j - 1] = m.xi[j - 1].checked_add(n).expect("xi exponent overflow");
        }
        m
    }

    pub fn is_one(&self) -> bool {
        *self == GenMonomial::ONE
    }

    pub fn tau_mask(&self) -> u32 {
        self.tau
    }

    pub fn has_tau(&self, i: usize) -> bool {
        i < TAU_CAPACITY && (self.tau >> i) & 1 == 1
    }

    pub fn tau_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..TAU_CAPACITY).filter(move |&i| self.has_tau(i))
    }

    pub fn xi_exp(&self, j: usize) -> u16 {
        if (1..=XI_CAPACITY).contains(&j) {
            self.xi[j - 1]
        } else {
            0
        }
    }

    /// Nonzero `(j, n(j))` pairs in increasing `j`.
    pub fn xi_exps(&self) -> impl Iterator<Item = (usize, u16)> + '_ {
        self.xi
            .iter()
            .enumerate()
            .filter(|(_, &n)| n > 0)
            .map(|(j, &n)| (j + 1, n))
    }

    pub fn with_tau_toggled(mut self, i: usize) -> Self {
        assert!(i < TAU_CAPACITY, "tau index {i} beyond capacity");
        self.tau ^= 1 << i;
        self
    }

    pub fn with_xi_exp(mut self, j: usize, n: u16) -> Self {
        assert!((1..=XI_CAPACITY).contains(&j), "xi index {j} out of range");
        self.xi[j - 1] = n;
        self
    }

    /// Multiplies the `ξ` part by `ξⱼⁿ`.
    pub fn times_xi(mut self, j: usize, n: u16) -> Self {
        assert!((1..=XI_CAPACITY).contains(&j), "xi index {j} out of range");
        self.xi[j - 1] = self.xi[j - 1].checked_add(n).expect("xi exponent overflow");
        self
    }

    /// `ξ` parts multiplied, `τ` part taken from `self` only.
    pub fn times_xi_part(mut self, other: &GenMonomial) -> Self {
        for (a, b) in self.xi.iter_mut().zip(&other.xi) {
            *a = a.checked_add(*b).expect("xi exponent overflow");
        }
        self
    }

    pub fn checked_times_xi_part(mut self, other: &GenMonomial) -> Option<Self> {
        for (a, b) in self.xi.iter_mut().zip(&other.xi) {
            *a = a.checked_add(*b)?;
        }
        Some(self)
    }

    pub fn without_taus(mut self) -> Self {
        self.tau = 0;
        self
    }

    pub fn only_taus(&self) -> Self {
        GenMonomial {
            tau: self.tau,
            ..GenMonomial::ONE
        }
    }

    pub fn degree(&self) -> RODegree {
        let mut deg = RODegree::ZERO;
        for i in self.tau_indices() {
            deg += tau_degree(i);
        }
        for (j, n) in self.xi_exps() {
            deg += n as i64 * xi_degree(j);
        }
        deg
    }

    /// Total number of generator factors.
    pub fn weight(&self) -> u32 {
        self.tau.count_ones() + self.xi.iter().map(|&n| n as u32).sum::<u32>()
    }

    /// Largest generator index used (`τᵢ` counts `i`, `ξⱼ` counts `j`).
    pub fn max_index(&self) -> Option<usize> {
        let t = (0..TAU_CAPACITY).rev().find(|&i| self.has_tau(i));
        let x = (1..=XI_CAPACITY).rev().find(|&j| self.xi_exp(j) > 0);
        t.max(x)
    }

    /// Whether `other` divides `self` in the polynomial sense.
    pub fn divides(&self, other: &GenMonomial) -> bool {
        self.tau & !other.tau == 0 && self.xi.iter().zip(&other.xi).all(|(a, b)| a <= b)
    }

    pub(crate) fn push_factors(&self, out: &mut Vec<String>) {
        for i in self.tau_indices() {
            out.push(format!("t{i}"));
        }
        for (j, n) in self.xi_exps() {
            crate::coefficients::push_power(out, &format!("x{j}"), n as u32);
        }
    }
}

impl Ord for GenMonomial {
    /// Fewer factors first; then by `ξ` exponents read from the highest index
    /// down; then by the `τ` mask.
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.xi.iter().rev().cmp(other.xi.iter().rev()))
            .then_with(|| self.tau.cmp(&other.tau))
    }
}

impl PartialOrd for GenMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GenMonomial {
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

impl fmt::Debug for GenMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenMonomial({self})")
    }
}
