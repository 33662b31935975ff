//! Finite rectangles of degrees, described by a dimension range and a twist range.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::grading::RODegree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub dim_lo: i64,
    pub dim_hi: i64,
    pub twist_lo: i64,
    pub twist_hi: i64,
}

impl Window {
    /// Dimensions `0..=n`, twists `-n..=n`.
    pub fn up_to_dim(n: i64) -> Self {
        Window::dims(0, n)
    }

    /// Dimensions `lo..=hi` with the twist range `-hi..=hi`.
    pub fn dims(lo: i64, hi: i64) -> Self {
        let t = hi.abs().max(lo.abs());
        Window {
            dim_lo: lo,
            dim_hi: hi,
            twist_lo: -t,
            twist_hi: t,
        }
    }

    pub fn with_twist(mut self, lo: i64, hi: i64) -> Self {
        self.twist_lo = lo;
        self.twist_hi = hi;
        self
    }

    pub fn is_empty(&self) -> bool {
        self.dim_lo > self.dim_hi || self.twist_lo > self.twist_hi
    }

    pub fn contains(&self, deg: RODegree) -> bool {
        (self.dim_lo..=self.dim_hi).contains(&deg.dim())
            && (self.twist_lo..=self.twist_hi).contains(&deg.twist())
    }

    pub fn contains_dim(&self, dim: i64) -> bool {
        (self.dim_lo..=self.dim_hi).contains(&dim)
    }

    /// All degrees of the window, sorted by (dim, twist).
    pub fn bidegrees(&self) -> Vec<RODegree> {
        let mut out = Vec::new();
        for dim in self.dim_lo..=self.dim_hi {
            for t in self.twist_lo..=self.twist_hi {
                out.push(RODegree::from_dim_twist(dim, t));
            }
        }
        out
    }

    /// Shrinks the upper dimension bound by `margin`.
    pub fn shrink_top(&self, margin: i64) -> Window {
        Window {
            dim_hi: self.dim_hi - margin,
            ..*self
        }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}..{}:{}..{}",
            self.dim_lo, self.dim_hi, self.twist_lo, self.twist_hi
        )
    }
}

fn parse_range(s: &str) -> Result<(i64, i64), Error> {
    let bad = || Error::Invalid(format!("bad range {s:?}"));
    match s.split_once("..") {
        Some((lo, hi)) => {
            let lo = lo.trim().parse().map_err(|_| bad())?;
            let hi = hi
                .trim()
                .trim_start_matches('=')
                .parse()
                .map_err(|_| bad())?;
            Ok((lo, hi))
        }
        None => {
            let hi = s.trim().parse().map_err(|_| bad())?;
            Ok((0, hi))
        }
    }
}

impl FromStr for Window {
    type Err = Error;

    /// `12` (dims 0..=12), `lo..hi`, or `lo..hi:tlo..thi`; bounds inclusive.
    fn from_str(s: &str) -> Result<Self, Error> {
        let (dims, twists) = match s.split_once(':') {
            Some((d, t)) => (d, Some(t)),
            None => (s, None),
        };
        let (lo, hi) = parse_range(dims)?;
        let mut w = Window::dims(lo, hi);
        if let Some(t) = twists {
            let (tlo, thi) = match t.split_once("..") {
                Some(_) => parse_range(t)?,
                None => {
                    return Err(Error::Invalid(format!(
                        "twist range needs lo..hi, got {t:?}"
                    )))
                }
            };
            w = w.with_twist(tlo, thi);
        }
        Ok(w)
    }
}
