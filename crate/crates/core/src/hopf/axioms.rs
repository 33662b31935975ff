//! The Hopf-algebroid identities, checked on generators and random samples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::coefficients::{CoeffMonomial, CoeffPoly};
use crate::hopf::tensor::TensorElement;
use crate::steenrod::{DualSteenrod, Element, GenMonomial, Term, TermAcc};

/// `left ⊗ mid ⊗ right` with coefficients on the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleTerm {
    pub left: Term,
    pub mid: GenMonomial,
    pub right: GenMonomial,
}

fn toggle(set: &mut FxHashSet<TripleTerm>, t: TripleTerm) {
    if !set.insert(t) {
        set.remove(&t);
    }
}

fn sorted(set: FxHashSet<TripleTerm>) -> Vec<TripleTerm> {
    let mut v: Vec<TripleTerm> = set.into_iter().collect();
    v.sort_unstable();
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub max_index: usize,
    pub samples: usize,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomOptions {
    pub max_index: usize,
    /// number of random homogeneous elements
    pub samples: usize,
    pub max_dim: i64,
    pub seed: u64,
}

impl Default for AxiomOptions {
    fn default() -> Self {
        AxiomOptions {
            max_index: 4,
            samples: 100,
            max_dim: 10,
            seed: 0x5eed,
        }
    }
}

struct Recorder {
    check: AxiomCheck,
}

impl Recorder {
    fn new(name: &str) -> Self {
        Recorder {
            check: AxiomCheck {
                name: name.to_string(),
                passed: true,
                cases: 0,
                witness: None,
            },
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.check.cases += 1;
        if !ok && self.check.passed {
            self.check.passed = false;
            self.check.witness = Some(witness());
        }
    }
}

impl DualSteenrod {
    /// `(Δ ⊗ Id)Δx`.
    pub fn coproduct_left_iterated(&self, d: &TensorElement) -> Vec<TripleTerm> {
        let mut set = FxHashSet::default();
        for t in d.terms() {
            for u in self.coproduct(&Element::from_term(t.left)).terms() {
                toggle(
                    &mut set,
                    TripleTerm {
                        left: u.left,
                        mid: u.right,
                        right: t.right,
                    },
                );
            }
        }
        sorted(set)
    }

    /// `(Id ⊗ Δ)Δx`.
    pub fn coproduct_right_iterated(&self, d: &TensorElement) -> Vec<TripleTerm> {
        let mut set = FxHashSet::default();
        for t in d.terms() {
            for u in self.coproduct_monomial(&t.right).terms() {
                // left ⊗ η_L(h)·mid = left·η_R(h) ⊗ mid
                let moved = Element::from_term(t.left);
                let moved = if u.left.coeff.is_one() {
                    moved
                } else {
                    self.multiply(&moved, &self.eta_r_monomial(u.left.coeff))
                };
                for &l in moved.terms() {
                    toggle(
                        &mut set,
                        TripleTerm {
                            left: l,
                            mid: u.left.mono,
                            right: u.right,
                        },
                    );
                }
            }
        }
        sorted(set)
    }

    /// `(Id ⊗ ε)` of a tensor.
    pub fn tensor_counit_right(&self, d: &TensorElement) -> Element {
        Element::from_terms(
            d.terms()
                .iter()
                .filter(|t| t.right.is_one())
                .map(|t| t.left),
        )
    }

    /// `(ε ⊗ Id)` of a tensor.
    pub fn tensor_counit_left(&self, d: &TensorElement) -> Element {
        Element::from_terms(
            d.terms()
                .iter()
                .filter(|t| t.left.mono.is_one())
                .map(|t| Term::new(t.left.coeff, t.right)),
        )
    }

    /// `μ(c ⊗ Id)` of a tensor.
    pub fn mu_antipode_left(&self, d: &TensorElement) -> Element {
        let mut acc = TermAcc::new();
        for t in d.terms() {
            let c = self
                .antipode(&Element::from_term(t.left))
                .expect("within bound");
            acc.add_element(&self.multiply(&c, &Element::from_mono(t.right)));
        }
        acc.into_element()
    }

    /// `μ(Id ⊗ c)` of a tensor.
    pub fn mu_antipode_right(&self, d: &TensorElement) -> Element {
        let mut acc = TermAcc::new();
        for t in d.terms() {
            let c = self.antipode_monomial(&t.right);
            acc.add_element(&self.multiply(&Element::from_term(t.left), &c));
        }
        acc.into_element()
    }

    /// A random nonzero homogeneous element with dimension in `0..=max_dim`.
    pub fn random_homogeneous<R: Rng>(&self, rng: &mut R, max_dim: i64) -> Element {
        loop {
            let dim = rng.gen_range(0..=max_dim);
            let twist = rng.gen_range(-3..=dim / 2);
            let deg = crate::grading::RODegree::from_dim_twist(dim, twist);
            let Ok(basis) = self.f2_basis_of_bidegree(deg) else {
                continue;
            };
            if basis.is_empty() {
                continue;
            }
            let x = Element::from_terms(basis.iter().copied().filter(|_| rng.gen_bool(0.5)));
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn axiom_suite(&self, opts: &AxiomOptions) -> AxiomReport {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut elems: Vec<(String, Element)> = Vec::new();
        for i in 0..=opts.max_index {
            elems.push((format!("t{i}"), Element::tau(i)));
            if i >= 1 {
                elems.push((format!("x{i}"), Element::xi(i)));
            }
        }
        elems.push(("s".into(), Element::coeff(CoeffMonomial::S)));
        elems.push(("a".into(), Element::coeff(CoeffMonomial::A)));
        for _ in 0..opts.samples {
            let x = self.random_homogeneous(&mut rng, opts.max_dim);
            elems.push((x.to_string(), x));
        }

        let mut coassoc = Recorder::new("coassociativity");
        let mut counit_r = Recorder::new("counit_right");
        let mut counit_l = Recorder::new("counit_left");
        let mut invol = Recorder::new("antipode_involution");
        let mut c_left = Recorder::new("antipode_left_counit");
        let mut c_right = Recorder::new("antipode_right_counit");
        for (name, x) in &elems {
            let d = self.coproduct(x);
            let l = self.coproduct_left_iterated(&d);
            let r = self.coproduct_right_iterated(&d);
            coassoc.record(l == r, || format!("(Δ⊗1)Δ ≠ (1⊗Δ)Δ on {name}"));
            counit_r.record(self.tensor_counit_right(&d) == *x, || {
                format!("(1⊗ε)Δ ≠ id on {name}")
            });
            counit_l.record(self.tensor_counit_left(&d) == *x, || {
                format!("(ε⊗1)Δ ≠ id on {name}")
            });
            let c = self.antipode(x).expect("within bound");
            invol.record(self.antipode(&c).expect("within bound") == *x, || {
                format!("c∘c ≠ id on {name}")
            });
            let eps = self.counit(x);
            c_left.record(self.mu_antipode_left(&d) == self.eta_r(&eps), || {
                format!("μ(c⊗1)Δ ≠ η_Rε on {name}")
            });
            c_right.record(self.mu_antipode_right(&d) == self.eta_l(&eps), || {
                format!("μ(1⊗c)Δ ≠ η_Lε on {name}")
            });
        }

        let mut units = Recorder::new("antipode_units");
        let mut counit_units = Recorder::new("counit_units");
        let mut coeffs = vec![
            CoeffPoly::monomial(CoeffMonomial::A),
            CoeffPoly::monomial(CoeffMonomial::S),
        ];
        for _ in 0..50 {
            coeffs.push(CoeffPoly::from_monomials((0..rng.gen_range(1..4)).map(
                |_| CoeffMonomial::new(rng.gen_range(0..4), rng.gen_range(0..4)),
            )));
        }
        for h in &coeffs {
            let l = self.eta_l(h);
            let r = self.eta_r(h);
            let ok = self.antipode(&l).ok() == Some(r.clone())
                && self.antipode(&r).ok() == Some(l.clone());
            units.record(ok, || format!("c η_L ≠ η_R or c η_R ≠ η_L at {h}"));
            let ok = self.counit(&l) == *h && self.counit(&r) == *h;
            counit_units.record(ok, || format!("ε η ≠ id at {h}"));
        }

        let mut mult = Recorder::new("coproduct_multiplicative");
        let mut pairs: Vec<(Element, Element)> = Vec::new();
        for i in 0..=opts.max_index {
            pairs.push((Element::tau(i), Element::tau(i)));
            pairs.push((Element::tau(i), Element::tau(0)));
        }
        let k = elems.len();
        for _ in 0..opts.samples {
            let x = elems[rng.gen_range(0..k)].1.clone();
            let y = elems[rng.gen_range(0..k)].1.clone();
            pairs.push((x, y));
        }
        for (x, y) in &pairs {
            let lhs = self.coproduct(&self.multiply(x, y));
            let rhs = self.tensor_multiply(&self.coproduct(x), &self.coproduct(y));
            mult.record(lhs == rhs, || format!("Δ(xy) ≠ ΔxΔy for x = {x}, y = {y}"));
        }

        AxiomReport {
            max_index: opts.max_index,
            samples: opts.samples,
            checks: [
                coassoc,
                counit_r,
                counit_l,
                invol,
                units,
                counit_units,
                c_left,
                c_right,
                mult,
            ]
            .into_iter()
            .map(|r| r.check)
            .collect(),
        }
    }
}
