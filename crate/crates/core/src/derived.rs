// Copyright 2026 the Rosettes Authors
// SPDX-License-Identifier: Apache-2.0

//! Fronts derived from a rosette, built by exact coefficient arithmetic.
//!
//! A front is given by a generalized support function `h`; it may change
//! sign and its radius `h + h''` may vanish, which is where the front has
//! cusps. All constructions here combine shifted copies of the source
//! support function, so no sampling or refitting is involved.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pair::PairFamily;
use crate::rosette::{FourierSupport, PlanePoint};
use crate::trig::{HarmonicTerm, TrigSeries, VANISHING_TOL};

/// Which derived set a front represents.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BranchKind {
    /// The rosette itself.
    Base,
    /// Branch `k` of the affine `λ`-equidistant of one rosette.
    Equidistant { lambda: f64, k: u32 },
    /// Constant width measure set.
    Cwms,
    /// Spherical measure set.
    Sms,
    /// Parallel curve at signed distance `alpha`.
    Offset { alpha: f64 },
    /// Branch `k` of the equidistant of a pair of rosettes.
    Pair { family: PairFamily, lambda: f64, k: u32 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct BranchDescriptor {
    pub kind: BranchKind,
    pub sources: Vec<FourierSupport>,
}

impl BranchDescriptor {
    /// Coefficient scale of the originating rosettes.
    pub fn source_scale(&self) -> f64 {
        self.sources.iter().map(FourierSupport::scale).fold(0.0, f64::max)
    }
}

/// Generalized support function of a front with period `2πM`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrontSupport {
    series: TrigSeries,
    multiplicity: u8,
    descriptor: BranchDescriptor,
}

impl FrontSupport {
    pub(crate) fn new(series: TrigSeries, multiplicity: u8, descriptor: BranchDescriptor) -> Self {
        debug_assert!(multiplicity == 1 || multiplicity == 2);
        FrontSupport { series, multiplicity, descriptor }
    }

    /// Period index `M`; one traversal of the parameter covers `2πM`.
    pub fn period_index(&self) -> u32 {
        self.series.period_index()
    }

    pub fn c0(&self) -> f64 {
        self.series.c0()
    }

    pub fn terms(&self) -> &[HarmonicTerm] {
        self.series.terms()
    }

    pub fn series(&self) -> &TrigSeries {
        &self.series
    }

    /// How many times the parameter period traces the set.
    pub fn multiplicity(&self) -> u8 {
        self.multiplicity
    }

    pub fn descriptor(&self) -> &BranchDescriptor {
        &self.descriptor
    }

    /// Scale used for every relative tolerance on this front.
    pub fn reference_scale(&self) -> f64 {
        let s = self.descriptor.source_scale();
        if s > 0.0 {
            s
        } else {
            self.series.coefficient_scale()
        }
    }

    /// Parameter length of one covering of the set.
    pub fn covering_period(&self) -> f64 {
        self.series.period() / self.multiplicity as f64
    }

    /// Series of `h + h''`.
    pub fn radius_series(&self) -> TrigSeries {
        self.series.radius()
    }

    /// True when only translation harmonics (`n = M`) survive and `c0 = 0`:
    /// the front is a single point.
    pub fn is_point(&self) -> bool {
        let tol = VANISHING_TOL * self.reference_scale();
        let m = self.period_index();
        self.series.c0().abs() <= tol && self.series.terms().iter().all(|t| t.n == m || t.norm() <= tol)
    }

    pub fn eval(&self, theta: f64, order: u32) -> f64 {
        self.series.eval(theta, order)
    }

    pub fn point_at(&self, theta: f64) -> PlanePoint {
        crate::rosette::series_point(&self.series, theta)
    }
}

/// The rosette itself viewed as a front.
pub fn base_front(p: &FourierSupport) -> FrontSupport {
    FrontSupport::new(p.series().clone(), 1, BranchDescriptor { kind: BranchKind::Base, sources: vec![p.clone()] })
}

/// Coefficients of `θ ↦ p(θ + φ)`.
pub fn shift_support(p: &FourierSupport, phi: f64) -> FourierSupport {
    FourierSupport::from_series(p.series().shifted(phi))
}

/// Valid branch indices of the `λ`-equidistant of an `m`-rosette.
pub fn branch_range(m: u32, lambda: f64) -> std::ops::RangeInclusive<u32> {
    if lambda == 0.5 {
        1..=m
    } else {
        1..=2 * m - 1
    }
}

/// Branch `k` of the affine `λ`-equidistant:
/// `h(θ) = λ p(θ) + (−1)^k (1−λ) p(θ + kπ)`.
pub fn equidistant_branch(p: &FourierSupport, lambda: f64, k: u32) -> Result<FrontSupport> {
    let range = branch_range(p.m(), lambda);
    if !range.contains(&k) {
        return Err(Error::BranchIndex { k: k as i64, lo: *range.start() as i64, hi: *range.end() as i64 });
    }
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let series = p.series().scaled(lambda).plus(&p.series().shifted_half_turns(k as i64).scaled(sign * (1.0 - lambda)));
    let multiplicity = if lambda == 0.5 && k == p.m() { 2 } else { 1 };
    Ok(FrontSupport::new(
        series,
        multiplicity,
        BranchDescriptor { kind: BranchKind::Equidistant { lambda, k }, sources: vec![p.clone()] },
    ))
}

/// Branch `k` of the Wigner caustic (`λ = 1/2`).
pub fn wigner_branch(p: &FourierSupport, k: u32) -> Result<FrontSupport> {
    equidistant_branch(p, 0.5, k)
}

/// Constant width measure set: `p(θ) − (−1)^m p(θ + mπ) − L/(mπ)`.
pub fn cwms_support(p: &FourierSupport) -> FrontSupport {
    let m = p.m();
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let length = p.length();
    let series = p
        .series()
        .plus(&p.series().shifted_half_turns(m as i64).scaled(-sign))
        .minus_constant(length / (m as f64 * std::f64::consts::PI));
    FrontSupport::new(series, 1, BranchDescriptor { kind: BranchKind::Cwms, sources: vec![p.clone()] })
}

/// Spherical measure set: the offset at level `L/(2mπ) = a0`.
pub fn sms_support(p: &FourierSupport) -> FrontSupport {
    let mut front = offset_support(p, p.a0());
    front.descriptor.kind = BranchKind::Sms;
    front
}

/// Offset `{a + α n(a)}` with normal `n(θ) = −(cos θ, sin θ)`: support `p − α`.
pub fn offset_support(p: &FourierSupport, alpha: f64) -> FrontSupport {
    FrontSupport::new(
        p.series().minus_constant(alpha),
        1,
        BranchDescriptor { kind: BranchKind::Offset { alpha }, sources: vec![p.clone()] },
    )
}

/// Uniform samples of a front over one full parameter period.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurveSamples {
    pub thetas: Vec<f64>,
    /// `N + 1` points; the last repeats the first.
    pub points: Vec<PlanePoint>,
    pub multiplicity: u8,
    pub is_point: bool,
}

/// Samples `h` at `N` uniform parameters over `[0, 2πM)` and closes the polyline.
pub fn sample_front(h: &FrontSupport, n: usize) -> Result<CurveSamples> {
    if n < 16 {
        return Err(Error::TooFewSamples(n));
    }
    let period = h.series.period();
    let mut basis = Vec::new();
    let mut thetas = Vec::with_capacity(n + 1);
    let mut points = Vec::with_capacity(n + 1);
    for j in 0..n {
        let theta = period * j as f64 / n as f64;
        let (value, slope) = h.series.eval_value_slope(theta, &mut basis);
        let (s, c) = theta.sin_cos();
        thetas.push(theta);
        points.push(PlanePoint::new(value * c - slope * s, value * s + slope * c));
    }
    thetas.push(period);
    points.push(points[0]);
    Ok(CurveSamples { thetas, points, multiplicity: h.multiplicity, is_point: h.is_point() })
}
