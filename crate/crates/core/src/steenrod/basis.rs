//! Enumeration of the monomial basis and of `F₂`-bases of single degrees.

use crate::coefficients::CoeffMonomial;
use crate::error::Result;
use crate::grading::RODegree;
use crate::steenrod::algebra::DualSteenrod;
use crate::steenrod::element::Term;
use crate::steenrod::monomial::{tau_degree, xi_degree, GenMonomial};
use crate::window::Window;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Gen {
    Tau(usize),
    Xi(usize),
}

impl Gen {
    fn degree(self) -> RODegree {
        match self {
            Gen::Tau(i) => tau_degree(i),
            Gen::Xi(j) => xi_degree(j),
        }
    }

    fn index(self) -> usize {
        match self {
            Gen::Tau(i) => i,
            Gen::Xi(j) => j,
        }
    }
}

/// All basis monomials with `weight(m) ≤ bound`, where `weight` is additive
/// and positive on generators.
fn enumerate<W: Fn(RODegree) -> i64>(
    alg: &DualSteenrod,
    bound: i64,
    weight: W,
) -> Result<Vec<GenMonomial>> {
    let mut gens = Vec::new();
    for i in 0.. {
        let w = weight(tau_degree(i));
        if w > bound {
            break;
        }
        gens.push(Gen::Tau(i));
    }
    for j in 1.. {
        let w = weight(xi_degree(j));
        if w > bound {
            break;
        }
        gens.push(Gen::Xi(j));
    }
    if let Some(max) = gens.iter().map(|g| g.index()).max() {
        alg.check_index(max)?;
    }
    let mut out = Vec::new();
    let weights: Vec<i64> = gens.iter().map(|g| weight(g.degree())).collect();
    fn go(
        k: usize,
        gens: &[Gen],
        weights: &[i64],
        budget: i64,
        cur: GenMonomial,
        out: &mut Vec<GenMonomial>,
    ) {
        if k == gens.len() {
            out.push(cur);
            return;
        }
        let w = weights[k];
        match gens[k] {
            Gen::Tau(i) => {
                go(k + 1, gens, weights, budget, cur, out);
                if w <= budget {
                    go(
                        k + 1,
                        gens,
                        weights,
                        budget - w,
                        cur.with_tau_toggled(i),
                        out,
                    );
                }
            }
            Gen::Xi(j) => {
                let mut n = 0u16;
                let mut rem = budget;
                loop {
                    go(k + 1, gens, weights, rem, cur.with_xi_exp(j, n), out);
                    if w > rem {
                        break;
                    }
                    rem -= w;
                    n += 1;
                }
            }
        }
    }
    go(0, &gens, &weights, bound, GenMonomial::ONE, &mut out);
    Ok(out)
}

impl DualSteenrod {
    /// Basis monomials (coefficient-free) whose dimension is at most `max_dim`.
    pub fn monomials_up_to_dim(&self, max_dim: i64) -> Result<Vec<GenMonomial>> {
        if max_dim < 0 {
            return Ok(Vec::new());
        }
        enumerate(self, max_dim, |d| d.dim())
    }

    /// Basis monomials in a window, sorted by `(dim, twist, monomial order)`.
    pub fn monomial_basis(&self, window: &Window) -> Result<Vec<(GenMonomial, RODegree)>> {
        if window.is_empty() {
            return Ok(Vec::new());
        }
        let mut out: Vec<(GenMonomial, RODegree)> = self
            .monomials_up_to_dim(window.dim_hi)?
            .into_iter()
            .map(|m| (m, m.degree()))
            .filter(|(_, d)| window.contains(*d))
            .collect();
        out.sort_by(|(m1, d1), (m2, d2)| {
            (d1.dim(), d1.twist(), m1).cmp(&(d2.dim(), d2.twist(), m2))
        });
        Ok(out)
    }

    /// Basis monomials whose trivial-representation count `c` is at most `max_c`.
    pub fn monomials_up_to_c(&self, max_c: i64) -> Result<Vec<GenMonomial>> {
        if max_c < 0 {
            return Ok(Vec::new());
        }
        enumerate(self, max_c, |d| d.c)
    }

    /// The `F₂`-basis `{η_L(h)·m}` of `A≥` in one degree, sorted.
    ///
    /// A coefficient `aⁱσ⁻ʲ` has degree `(j, -i-j)`, so a monomial of degree
    /// `(c', d')` contributes exactly when `j = c - c' ≥ 0` and `i = d' - d - j ≥ 0`.
    pub fn f2_basis_of_bidegree(&self, deg: RODegree) -> Result<Vec<Term>> {
        let mut out = Vec::new();
        for m in self.monomials_up_to_c(deg.c)? {
            let md = m.degree();
            let j = deg.c - md.c;
            let i = md.d - deg.d - j;
            if j >= 0 && i >= 0 {
                out.push(Term::new(CoeffMonomial::new(i as u32, j as u32), m));
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}
