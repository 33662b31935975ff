//! Canned reference scenarios: the worked examples and the named families.

use serde::Serialize;

use crate::classical::classical_quotient_check;
use crate::error::Result;
use crate::profiles::{named_profile, named_profile_with, Convention, Family, Profile};
use crate::steenrod::{DualSteenrod, GenMonomial};
use crate::verification::series::series_divide;
use crate::window::Window;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Scenario {
    pub name: String,
    pub anchor: &'static str,
    pub convention: Option<Convention>,
    /// Rows for the printed convention are informational.
    pub counted: bool,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScenarioReport {
    pub scenarios: Vec<Scenario>,
}

impl ScenarioReport {
    pub fn all_passed(&self) -> bool {
        self.scenarios
            .iter()
            .filter(|s| s.counted)
            .all(|s| s.passed)
    }
}

struct Builder {
    out: Vec<Scenario>,
}

impl Builder {
    fn push(
        &mut self,
        name: impl Into<String>,
        anchor: &'static str,
        convention: Option<Convention>,
        passed: bool,
        detail: impl Into<String>,
    ) {
        let counted = convention != Some(Convention::Literal);
        self.out.push(Scenario {
            name: name.into(),
            anchor,
            convention,
            counted,
            passed,
            detail: detail.into(),
        });
    }
}

pub fn example_profiles() -> (Profile, Profile) {
    let k1 = "h=[0|inf] k=[1,0|inf]".parse().unwrap();
    let k2 = "h=[0|inf] k=[inf,0|inf]".parse().unwrap();
    (k1, k2)
}

/// Square-free products of `τ₀, …, τₙ`.
fn tau_products(n: usize) -> Vec<GenMonomial> {
    (0u32..1 << (n + 1))
        .map(|mask| GenMonomial::from_parts((0..=n).filter(|i| mask >> i & 1 == 1), []))
        .collect()
}

impl DualSteenrod {
    pub fn reference_scenarios(&self) -> Result<ScenarioReport> {
        let mut b = Builder { out: Vec::new() };

        let t0sq = self.parse_element("t0^2")?;
        let rhs = self.parse_element("a*t1 + s*x1 + a*t0*x1")?;
        b.push(
            "τ₀² = aτ₁ + η_R(σ⁻¹)ξ₁",
            "defining relation at i = 0",
            None,
            t0sq == rhs,
            t0sq.to_string(),
        );

        let (k1, k2) = example_profiles();
        let differ = self.ideal_spans_differ(&k1, &k2, &Window::up_to_dim(8))?;
        b.push(
            "I(h,k₁) = I(h,k₂) in dim ≤ 8",
            "the two example ideals coincide",
            None,
            differ.is_none(),
            match differ {
                None => "spans agree in every degree".to_string(),
                Some(d) => format!("spans differ in degree {d}"),
            },
        );
        let m = self.minimize(&k2)?;
        b.push(
            "minimize(h,k₂) = (h,k₁)",
            "minimal profile of the example",
            None,
            m.profile == k1 && m.is_confirmed(),
            m.profile.to_string(),
        );
        let k1_min = self.minimality(&k1)?;
        b.push(
            "(h,k₁) is minimal",
            "minimal profile of the example",
            None,
            k1_min == Some(true),
            format!("{k1_min:?}"),
        );
        b.push(
            "(h,k₁) is a Hopf ideal",
            "quotient used in the example",
            None,
            k1.is_hopf_ideal_numeric() && self.is_hopf_ideal_direct(&k1, &Window::up_to_dim(16))?,
            String::new(),
        );

        let w16 = Window::up_to_dim(16);
        let full = self.series_of_algebra(&w16)?;
        for convention in [Convention::FullBasis, Convention::Literal] {
            let conv = Some(convention);
            for n in 0..=2u32 {
                let e = named_profile_with(Family::E, n, convention);
                let a = named_profile_with(Family::A, n, convention);
                let free = e.is_free_pair() && a.is_free_pair();
                b.push(
                    format!("E({n}), A({n}) are free pairs"),
                    "freeness of the named quotients",
                    conv,
                    free,
                    format!("E: {e}; A: {a}"),
                );
                if !free {
                    continue;
                }
                let hopf = [&e, &a]
                    .into_iter()
                    .map(|p| Ok(p.is_hopf_ideal_numeric() && self.is_hopf_ideal_direct(p, &w16)?))
                    .collect::<Result<Vec<bool>>>()?;
                b.push(
                    format!("E({n}), A({n}) are Hopf ideals"),
                    "named quotients are Hopf algebroids",
                    conv,
                    hopf.iter().all(|&x| x),
                    format!("{hopf:?}"),
                );

                let basis = self.quotient_basis(&e, &Window::up_to_dim(64))?;
                let mut got: Vec<GenMonomial> = basis.monomials.iter().map(|(m, _)| *m).collect();
                let mut want = tau_products(n as usize);
                got.sort();
                want.sort();
                b.push(
                    format!("E({n}) has basis τ₀^ε₀⋯τ_{n}^ε_{n}"),
                    "basis of E(n) is τ₀^ε₀ ⋯ τₙ^εₙ",
                    conv,
                    got == want,
                    format!("{} monomials", got.len()),
                );

                let se = self.series_of_quotient(&e, &w16)?;
                let sa = self.series_of_quotient(&a, &w16)?;
                for (label, top, bottom) in [
                    ("A≥ over E", &full, &se),
                    ("A≥ over A", &full, &sa),
                    ("A over E", &sa, &se),
                ] {
                    let out = series_divide(top, bottom, &w16);
                    let detail = match (&out.quotient, out.negative_at) {
                        (Some(q), _) => format!("quotient total {}", q.total()),
                        (None, Some((d, v))) => format!("negative value {v} in degree {d}"),
                        (None, None) => String::new(),
                    };
                    b.push(
                        format!("{label}({n}) factors in dim ≤ 16"),
                        "cofree as comodules over the quotients",
                        conv,
                        out.succeeded(),
                        detail,
                    );
                }
            }
        }

        for n in 1..=3u32 {
            let p = named_profile(Family::ATilde, n);
            let classical = classical_quotient_check(&p.h, 64);
            let ok = classical.numeric
                && classical.direct
                && p.is_hopf_ideal_numeric()
                && p.le(&named_profile(Family::ATilde, n + 1));
            b.push(
                format!("Ã({n}) comes from a classical quotient"),
                "classical quotients embed with k = 0",
                None,
                ok,
                p.to_string(),
            );
        }

        let einf = named_profile(Family::EInf, 0);
        let w12 = Window::up_to_dim(12);
        let basis = self.quotient_basis(&einf, &w12)?;
        let all_tau = basis
            .monomials
            .iter()
            .all(|(m, _)| m.without_taus().is_one());
        let count = self
            .monomial_basis(&w12)?
            .iter()
            .filter(|(m, _)| m.without_taus().is_one())
            .count();
        b.push(
            "E(∞) has basis the square-free τ monomials",
            "E(∞) as a free quotient",
            None,
            all_tau && basis.len() == count,
            format!("{} monomials in dim ≤ 12", basis.len()),
        );

        Ok(ScenarioReport { scenarios: b.out })
    }
}
