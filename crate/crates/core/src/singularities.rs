// Copyright 2026 the Rosettes Authors
// SPDX-License-Identifier: Apache-2.0

//! Cusps, antipodal pairs, rotation numbers and branch classification.
//!
//! A front with support `h` has a cusp wherever its radius `h + h''` crosses
//! zero. Cusps of Wigner branches with odd `k` sit at antipodal pairs of the
//! rosette, where `ρ(θ) = ρ(θ + kπ)`.

use serde::Serialize;

use crate::derived::{branch_range, equidistant_branch, CurveSamples, FrontSupport};
use crate::error::{Error, Result};
use crate::rosette::{point_at, FourierSupport, PlanePoint};
use crate::trig::{isolate_zeros, ZeroSet};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CuspReport {
    /// Sorted parameters in `[0, period / multiplicity)`.
    pub locations: Vec<f64>,
    pub count: usize,
    pub parity_even: bool,
    pub warnings: Vec<String>,
    pub is_point: bool,
    /// Sign of the radius when it has no zero, otherwise 0.
    pub radius_sign: i8,
}

fn zero_warnings(label: &str, zs: &ZeroSet) -> Vec<String> {
    let mut w = Vec::new();
    if zs.identically_zero {
        w.push(format!("identically_zero:{label}"));
    }
    w.extend(zs.tangential.iter().map(|t| format!("tangential_zero:{label}@{t:.15e}")));
    w.extend(zs.weak.iter().map(|t| format!("weak_zero:{label}@{t:.15e}")));
    w
}

/// Zeros of the radius of `h` over one covering of the set.
pub fn find_cusps(h: &FrontSupport) -> CuspReport {
    if h.is_point() {
        return CuspReport {
            locations: Vec::new(),
            count: 0,
            parity_even: true,
            warnings: vec!["point_front".into()],
            is_point: true,
            radius_sign: 0,
        };
    }
    let rho = h.radius_series();
    let zs = isolate_zeros(&rho, 0.0, h.covering_period(), h.reference_scale());
    let locations: Vec<f64> = zs.zeros.iter().map(|z| z.theta).collect();
    let radius_sign = if locations.is_empty() && !zs.identically_zero {
        if rho.c0() > 0.0 {
            1
        } else {
            -1
        }
    } else {
        0
    };
    CuspReport {
        count: locations.len(),
        parity_even: locations.len().is_multiple_of(2),
        warnings: zero_warnings("radius", &zs),
        locations,
        is_point: false,
        radius_sign,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AntipodalPair {
    pub theta: f64,
    /// Odd offset in half turns.
    pub k: u32,
    /// `θ + kπ` reduced to `[0, 2mπ)`.
    pub partner_theta: f64,
    pub pair: (PlanePoint, PlanePoint),
    /// True for the representative of the unordered pair `{θ, θ + kπ}`.
    pub canonical: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AntipodalReport {
    /// Solutions `(θ, k)` over every odd `k` in `1..2m`.
    pub pairs: Vec<AntipodalPair>,
    pub warnings: Vec<String>,
    /// Some `ρ(θ) − ρ(θ + kπ)` vanishes identically.
    pub continuum: bool,
}

impl AntipodalReport {
    pub fn count(&self) -> usize {
        self.pairs.len()
    }

    /// Number of unordered parameter pairs.
    pub fn distinct_count(&self) -> usize {
        self.pairs.iter().filter(|p| p.canonical).count()
    }

    pub fn is_generic(&self) -> bool {
        self.warnings.is_empty()
    }
}

/// Parameters where the rosette has equal curvature at both points of a
/// parallel pair with odd offset `kπ`.
pub fn antipodal_pairs(p: &FourierSupport) -> AntipodalReport {
    let m = p.m();
    let rho = p.radius_series();
    let period = rho.period();
    let mut pairs = Vec::new();
    let mut warnings = Vec::new();
    let mut continuum = false;
    for k in (1..2 * m).step_by(2) {
        let diff = rho.plus(&rho.shifted_half_turns(k as i64).scaled(-1.0));
        let zs = isolate_zeros(&diff, 0.0, period, p.scale());
        if zs.identically_zero {
            continuum = true;
        }
        warnings.extend(zero_warnings(&format!("antipodal_k{k}"), &zs));
        for z in &zs.zeros {
            let partner = (z.theta + k as f64 * std::f64::consts::PI).rem_euclid(period);
            let canonical = k < m || (k == m && z.theta < partner);
            pairs.push(AntipodalPair {
                theta: z.theta,
                k,
                partner_theta: partner,
                pair: (point_at(p, z.theta), point_at(p, partner)),
                canonical,
            });
        }
    }
    AntipodalReport { pairs, warnings, continuum }
}

/// Exact rotation number `M / multiplicity` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Rotation {
    pub numerator: u32,
    pub denominator: u32,
}

impl Rotation {
    pub fn new(numerator: u32, denominator: u32) -> Self {
        let g = crate::pair::gcd(numerator, denominator).max(1);
        Rotation { numerator: numerator / g, denominator: denominator / g }
    }

    pub fn value(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

impl std::fmt::Display for Rotation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// Turns of the coorienting normal over one traversal of the set.
pub fn rotation_number(h: &FrontSupport) -> Result<Rotation> {
    if h.is_point() {
        return Err(Error::NonGeneric("rotation number of a point is undefined".into()));
    }
    Ok(Rotation::new(h.period_index(), h.multiplicity() as u32))
}

/// Rotation number read off a sampled polyline by accumulating the turning
/// of segment lines modulo `π`, so that cusps (where the direction of travel
/// reverses) do not contribute.
pub fn sampled_rotation_number(s: &CurveSamples) -> Option<f64> {
    if s.is_point {
        return None;
    }
    let segs: Vec<(f64, f64)> =
        s.points.windows(2).map(|w| (w[1].x - w[0].x, w[1].y - w[0].y)).filter(|d| d.0 != 0.0 || d.1 != 0.0).collect();
    if segs.len() < 3 {
        return None;
    }
    let half = std::f64::consts::FRAC_PI_2;
    let mut total = 0.0;
    for i in 0..segs.len() {
        let (a, b) = (segs[i], segs[(i + 1) % segs.len()]);
        let mut delta = (a.0 * b.1 - a.1 * b.0).atan2(a.0 * b.0 + a.1 * b.1);
        if delta > half {
            delta -= std::f64::consts::PI;
        } else if delta <= -half {
            delta += std::f64::consts::PI;
        }
        total += delta;
    }
    Some(total / std::f64::consts::TAU / s.multiplicity as f64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchClass {
    /// Positive radius everywhere.
    Rosette,
    /// Negative radius everywhere: regular with reversed coorientation.
    ReversedRosette,
    /// The radius vanishes somewhere.
    Singular,
    Point,
}

impl BranchClass {
    pub fn of(report: &CuspReport) -> Self {
        if report.is_point {
            BranchClass::Point
        } else if report.radius_sign > 0 {
            BranchClass::Rosette
        } else if report.radius_sign < 0 {
            BranchClass::ReversedRosette
        } else {
            BranchClass::Singular
        }
    }

    pub fn is_regular(self) -> bool {
        matches!(self, BranchClass::Rosette | BranchClass::ReversedRosette)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BranchClassification {
    pub k: u32,
    pub class: BranchClass,
    pub cusps: CuspReport,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BranchSummary {
    pub lambda: f64,
    pub branches: Vec<BranchClassification>,
    /// Branches with no cusps, of either coorientation.
    pub regular_count: usize,
    pub rosette_count: usize,
    pub total_cusps: usize,
    pub expectation: String,
    pub holds: bool,
    pub warnings: Vec<String>,
}

/// Classifies every branch of the `λ`-equidistant and checks the branch
/// count theorems.
///
/// `λ = 1/2`: exactly `⌊m/2⌋` regular branches, at least two cusps in total,
/// and an even cusp count on every branch except `k = m` for odd `m`, whose
/// radius is antiperiodic and so changes sign an odd number of times per covering.
/// `λ ∈ (0,1)`: at least `m − 1` regular branches. Otherwise at least `m`.
pub fn classify_branches(p: &FourierSupport, lambda: f64) -> Result<BranchSummary> {
    let m = p.m();
    let mut branches = Vec::new();
    let mut warnings = Vec::new();
    for k in branch_range(m, lambda) {
        let h = equidistant_branch(p, lambda, k)?;
        let cusps = find_cusps(&h);
        warnings.extend(cusps.warnings.iter().filter(|w| *w != "point_front").map(|w| format!("k{k}:{w}")));
        branches.push(BranchClassification { k, class: BranchClass::of(&cusps), cusps });
    }
    let regular_count = branches.iter().filter(|b| b.class.is_regular()).count();
    let rosette_count = branches.iter().filter(|b| b.class == BranchClass::Rosette).count();
    let total_cusps = branches.iter().map(|b| b.cusps.count).sum();
    let mf = m as usize;
    let (expectation, holds) = if lambda == 0.5 {
        let parity_ok = branches.iter().all(|b| b.cusps.parity_even != (b.k == m && m % 2 == 1));
        (
            format!(
                "exactly {} regular branches, total cusps >= 2, odd cusp count exactly on the half-integer rotation branch",
                mf / 2
            ),
            regular_count == mf / 2 && total_cusps >= 2 && parity_ok,
        )
    } else if lambda > 0.0 && lambda < 1.0 {
        (format!("at least {} regular branches", mf - 1), regular_count + 1 >= mf)
    } else if lambda == 0.0 || lambda == 1.0 {
        ("no assertion".to_string(), true)
    } else {
        (format!("at least {mf} regular branches"), regular_count >= mf)
    };
    Ok(BranchSummary { lambda, branches, regular_count, rosette_count, total_cusps, expectation, holds, warnings })
}
