// Copyright 2026 the Rosettes Authors
// SPDX-License-Identifier: Apache-2.0

//! Curve files.
//!
//! A curve file is a JSON object
//!
//! ```json
//! {"m": 2, "a0": 10, "terms": [{"n": 1, "a": 4, "b": 0}, {"n": 4, "a": 0, "b": 1}]}
//! ```
//!
//! describing `p(θ) = a0 + Σ (a cos(nθ/m) + b sin(nθ/m))`. Unknown fields are
//! rejected; `a` and `b` default to zero.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rosette::{validate_rosette, FourierSupport, ValidationReport};
use crate::trig::HarmonicTerm;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub n: u32,
    #[serde(default)]
    pub a: f64,
    #[serde(default)]
    pub b: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RosetteSpec {
    pub m: u32,
    pub a0: f64,
    #[serde(default)]
    pub terms: Vec<TermSpec>,
}

impl RosetteSpec {
    pub fn from_text(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("spec serializes");
        s.push('\n');
        s
    }

    /// Builds the support function without checking the sign of the radius.
    pub fn to_support(&self) -> Result<FourierSupport> {
        let terms = self.terms.iter().map(|t| HarmonicTerm::new(t.n, t.a, t.b)).collect();
        FourierSupport::new(self.m, self.a0, terms).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl From<&FourierSupport> for RosetteSpec {
    fn from(p: &FourierSupport) -> Self {
        RosetteSpec {
            m: p.m(),
            a0: p.a0(),
            terms: p.terms().iter().map(|t| TermSpec { n: t.n, a: t.a, b: t.b }).collect(),
        }
    }
}

/// Parses a curve file and checks that it describes a rosette.
pub fn parse_spec(text: &str) -> Result<(FourierSupport, ValidationReport)> {
    let p = RosetteSpec::from_text(text)?.to_support()?;
    let report = validate_rosette(&p);
    if !report.is_rosette {
        return Err(Error::NotRosette { min_rho: report.min_rho, theta: report.min_rho_theta });
    }
    Ok((p, report))
}

pub fn print_spec(p: &FourierSupport) -> String {
    RosetteSpec::from(p).to_text()
}
