//! Exhaustive comparison of the numeric and direct Hopf-ideal tests over a
//! family of small profiles.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Result;
use crate::profiles::extnat::{ExtNat, Fin, Inf};
use crate::profiles::Profile;
use crate::steenrod::DualSteenrod;
use crate::window::Window;

pub const ENTRY_VALUES: [ExtNat; 4] = [Fin(0), Fin(1), Fin(2), Inf];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyOptions {
    /// `h(1..=h_len)` are enumerated.
    pub h_len: usize,
    /// `k(0..k_len)` are enumerated.
    pub k_len: usize,
    pub window: i64,
}

impl Default for FamilyOptions {
    fn default() -> Self {
        FamilyOptions {
            h_len: 3,
            k_len: 4,
            window: 12,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub profile: Profile,
    pub numeric: bool,
    pub direct: bool,
    pub confirmed_minimal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub options: FamilyOptions,
    pub distinct: usize,
    pub minimal: usize,
    /// Minimal up to an unconfirmed `∞`.
    pub unconfirmed: usize,
    /// Profiles whose minimal form is not a `{0, ∞}`-tailed profile.
    pub unrepresentable: usize,
    pub disagreements: Vec<Disagreement>,
}

/// Every profile with the given prefix lengths, entries in [`ENTRY_VALUES`]
/// and tails in `{0, ∞}`, without repetitions.
pub fn enumerate_family(h_len: usize, k_len: usize) -> Vec<Profile> {
    let n = h_len + k_len;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for code in 0..4usize.pow(n as u32) * 4 {
        let mut c = code;
        let digits: Vec<ExtNat> = (0..n)
            .map(|_| {
                let v = ENTRY_VALUES[c % 4];
                c /= 4;
                v
            })
            .collect();
        let h_tail = if c & 1 == 0 { Fin(0) } else { Inf };
        let k_tail = if c & 2 == 0 { Fin(0) } else { Inf };
        let p = Profile::new(
            digits[..h_len].to_vec(),
            h_tail,
            digits[h_len..].to_vec(),
            k_tail,
        )
        .expect("valid tails");
        if seen.insert(p.to_string()) {
            out.push(p);
        }
    }
    out
}

impl DualSteenrod {
    pub fn hopf_condition_family(&self, opts: &FamilyOptions) -> Result<FamilyReport> {
        let family = enumerate_family(opts.h_len, opts.k_len);
        let window = Window::up_to_dim(opts.window);
        let mut report = FamilyReport {
            options: *opts,
            distinct: family.len(),
            minimal: 0,
            unconfirmed: 0,
            unrepresentable: 0,
            disagreements: Vec::new(),
        };
        for p in family {
            let minimal = match self.minimality(&p) {
                Ok(Some(false)) => continue,
                Ok(m) => m.is_some(),
                Err(crate::Error::Invalid(_)) => {
                    report.unrepresentable += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            report.minimal += 1;
            if !minimal {
                report.unconfirmed += 1;
            }
            let numeric = p.is_hopf_ideal_numeric();
            let direct = self.is_hopf_ideal_direct(&p, &window)?;
            if numeric != direct {
                report.disagreements.push(Disagreement {
                    profile: p,
                    numeric,
                    direct,
                    confirmed_minimal: minimal,
                });
            }
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_enumeration_is_distinct() {
        let fam = enumerate_family(1, 1);
        assert_eq!(fam.len(), 64);
        assert!(fam.contains(&Profile::trivial()) && fam.contains(&Profile::zero_ideal()));
        let set: BTreeSet<String> = fam.iter().map(|p| p.to_string()).collect();
        assert_eq!(set.len(), fam.len());
    }

    #[test]
    fn small_family_agrees_with_a_large_window() {
        let alg = DualSteenrod::default();
        let opts = FamilyOptions {
            h_len: 1,
            k_len: 1,
            window: 16,
        };
        let r = alg.hopf_condition_family(&opts).unwrap();
        assert!(r.minimal > 0);
        assert!(r.disagreements.is_empty(), "{:?}", r.disagreements);
    }
}
