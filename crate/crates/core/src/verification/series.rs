//! Poincaré series of monomial bases and their division.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::grading::RODegree;
use crate::profiles::Profile;
use crate::steenrod::{DualSteenrod, GenMonomial};
use crate::window::Window;

/// Number of basis monomials per degree, inside a window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoincareSeries {
    pub window: Window,
    #[serde(serialize_with = "serialize_counts")]
    pub counts: BTreeMap<RODegree, u64>,
}

fn serialize_counts<S: serde::Serializer>(
    counts: &BTreeMap<RODegree, u64>,
    s: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(counts.len()))?;
    for (d, n) in counts {
        seq.serialize_element(&serde_json::json!({ "c": d.c, "d": d.d, "count": n }))?;
    }
    seq.end()
}

impl PoincareSeries {
    pub fn from_monomials<'a, I: IntoIterator<Item = &'a GenMonomial>>(
        monos: I,
        window: &Window,
    ) -> Self {
        let mut counts = BTreeMap::new();
        for m in monos {
            let d = m.degree();
            if window.contains(d) {
                *counts.entry(d).or_insert(0) += 1;
            }
        }
        PoincareSeries {
            window: *window,
            counts,
        }
    }

    pub fn get(&self, d: RODegree) -> u64 {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Product of two series, truncated to `self.window`.
    pub fn multiply(&self, other: &PoincareSeries) -> PoincareSeries {
        let mut counts = BTreeMap::new();
        for (d1, n1) in &self.counts {
            for (d2, n2) in &other.counts {
                let d = *d1 + *d2;
                if self.window.contains(d) {
                    *counts.entry(d).or_insert(0) += n1 * n2;
                }
            }
        }
        PoincareSeries {
            window: self.window,
            counts,
        }
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .counts
            .iter()
            .map(|(d, n)| format!("{d}: {n}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `series_divide` either produces `M` or names the first degree where the
/// quotient would be negative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivideOutcome {
    pub quotient: Option<PoincareSeries>,
    pub negative_at: Option<(RODegree, i64)>,
    /// Degrees whose value depends on counts outside the window.
    pub indeterminate: Vec<RODegree>,
}

impl DivideOutcome {
    pub fn succeeded(&self) -> bool {
        self.quotient.is_some()
    }
}

/// Solves `B = C · M` degree by degree: `M(D) = B(D) - Σ_{g ≠ 0} C(g) M(D-g)`.
/// Requires `C(0) = 1` and `C` supported in positive dimension elsewhere.
/// All series here count monomials, so only degrees with `0 ≤ twist ≤ dim`
/// can be nonzero.
pub fn series_divide(b: &PoincareSeries, c: &PoincareSeries, window: &Window) -> DivideOutcome {
    assert_eq!(c.get(RODegree::ZERO), 1, "divisor must be connected");
    let supported = |d: RODegree| d.twist() >= 0 && d.twist() <= d.dim();
    let mut degrees: Vec<RODegree> = window
        .bidegrees()
        .into_iter()
        .filter(|&d| supported(d))
        .collect();
    degrees.sort_by_key(|d| (d.dim(), d.twist()));
    let mut m: BTreeMap<RODegree, u64> = BTreeMap::new();
    let mut indeterminate = Vec::new();
    for d in degrees {
        let mut value = b.get(d) as i64;
        let mut exact = true;
        for (g, n) in &c.counts {
            if *g == RODegree::ZERO {
                continue;
            }
            let e = d - *g;
            if !supported(e) {
                continue;
            }
            if !window.contains(e) {
                exact = false;
                continue;
            }
            value -= (*n * m.get(&e).copied().unwrap_or(0)) as i64;
        }
        if !exact {
            indeterminate.push(d);
            continue;
        }
        if value < 0 {
            return DivideOutcome {
                quotient: None,
                negative_at: Some((d, value)),
                indeterminate,
            };
        }
        if value > 0 {
            m.insert(d, value as u64);
        }
    }
    DivideOutcome {
        quotient: Some(PoincareSeries {
            window: *window,
            counts: m,
        }),
        negative_at: None,
        indeterminate,
    }
}

impl DualSteenrod {
    /// Counts of `B_(h,k)` per degree.
    pub fn series_of_quotient(&self, p: &Profile, window: &Window) -> Result<PoincareSeries> {
        let basis = self.quotient_basis(p, window)?;
        Ok(PoincareSeries::from_monomials(
            basis.monomials.iter().map(|(m, _)| m),
            window,
        ))
    }

    /// Counts of the whole monomial basis `B_m`.
    pub fn series_of_algebra(&self, window: &Window) -> Result<PoincareSeries> {
        let monos = self.monomial_basis(window)?;
        Ok(PoincareSeries::from_monomials(
            monos.iter().map(|(m, _)| m),
            window,
        ))
    }
}
