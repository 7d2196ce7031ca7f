// Copyright 2026 the Rosettes Authors
// SPDX-License-Identifier: Apache-2.0

//! Finite trigonometric series on a period of `2πM` and zero isolation.
//!
//! Every curve in this crate is described by a function of the form
//!
//! ```text
//! h(θ) = c0 + Σ (a_n cos(nθ/M) + b_n sin(nθ/M))
//! ```
//!
//! and every question about cusps, antipodal pairs or minimum curvature
//! reduces to locating the zeros of another series of the same shape.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One harmonic `a cos(nθ/M) + b sin(nθ/M)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HarmonicTerm {
    pub n: u32,
    pub a: f64,
    pub b: f64,
}

impl HarmonicTerm {
    pub fn new(n: u32, a: f64, b: f64) -> Self {
        HarmonicTerm { n, a, b }
    }

    pub fn cos(n: u32, a: f64) -> Self {
        HarmonicTerm { n, a, b: 0.0 }
    }

    pub fn sin(n: u32, b: f64) -> Self {
        HarmonicTerm { n, a: 0.0, b }
    }

    pub fn norm(&self) -> f64 {
        self.a.hypot(self.b)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a * self.a + self.b * self.b
    }

    /// Coefficients of `θ ↦ term(θ + φ)` where the term has angular
    /// frequency `ω`, i.e. a rotation of `(a, b)` by `ωφ`.
    fn rotated(&self, (cos, sin): (f64, f64)) -> Self {
        HarmonicTerm { n: self.n, a: self.a * cos + self.b * sin, b: self.b * cos - self.a * sin }
    }
}

/// A trigonometric polynomial with period `2π·period_index`.
///
/// Terms are kept sorted by `n` with at most one term per index.
#[derive(Clone, Debug, PartialEq)]
pub struct TrigSeries {
    period_index: u32,
    c0: f64,
    terms: Vec<HarmonicTerm>,
}

impl TrigSeries {
    /// Builds a series, rejecting `n = 0`, repeated indices and non-finite values.
    pub fn new(period_index: u32, c0: f64, mut terms: Vec<HarmonicTerm>) -> Result<Self> {
        if period_index == 0 {
            return Err(Error::ZeroRotationNumber);
        }
        if !c0.is_finite() || terms.iter().any(|t| !t.a.is_finite() || !t.b.is_finite()) {
            return Err(Error::NonFinite);
        }
        if terms.iter().any(|t| t.n == 0) {
            return Err(Error::ZeroHarmonic);
        }
        terms.sort_by_key(|t| t.n);
        if let Some(w) = terms.windows(2).find(|w| w[0].n == w[1].n) {
            return Err(Error::DuplicateHarmonic(w[0].n));
        }
        Ok(TrigSeries { period_index, c0, terms })
    }

    /// Builds a series by summing terms that share an index.
    pub(crate) fn from_parts(period_index: u32, c0: f64, terms: Vec<HarmonicTerm>) -> Self {
        debug_assert!(period_index > 0);
        let mut merged: Vec<HarmonicTerm> = Vec::with_capacity(terms.len());
        let mut sorted = terms;
        sorted.sort_by_key(|t| t.n);
        for t in sorted {
            match merged.last_mut() {
                Some(last) if last.n == t.n => {
                    last.a += t.a;
                    last.b += t.b;
                }
                _ => merged.push(t),
            }
        }
        TrigSeries { period_index, c0, terms: merged }
    }

    pub fn constant(period_index: u32, c0: f64) -> Self {
        TrigSeries { period_index, c0, terms: Vec::new() }
    }

    pub fn period_index(&self) -> u32 {
        self.period_index
    }

    /// Length of one period, `2πM`.
    pub fn period(&self) -> f64 {
        2.0 * PI * self.period_index as f64
    }

    pub fn c0(&self) -> f64 {
        self.c0
    }

    pub fn terms(&self) -> &[HarmonicTerm] {
        &self.terms
    }

    pub fn n_max(&self) -> u32 {
        self.terms.last().map_or(0, |t| t.n)
    }

    /// `max(|c0|, max_n |(a_n, b_n)|)`.
    pub fn coefficient_scale(&self) -> f64 {
        self.terms.iter().map(HarmonicTerm::norm).fold(self.c0.abs(), f64::max)
    }

    fn omega(&self, n: u32) -> f64 {
        n as f64 / self.period_index as f64
    }

    /// Value of the `order`-th derivative at `θ`.
    pub fn eval(&self, theta: f64, order: u32) -> f64 {
        let mut acc = if order == 0 { self.c0 } else { 0.0 };
        for t in &self.terms {
            let w = self.omega(t.n);
            let (s, c) = (w * theta).sin_cos();
            // d^k/dθ^k of (a cos + b sin) cycles with period 4.
            let v = match order % 4 {
                0 => t.a * c + t.b * s,
                1 => t.b * c - t.a * s,
                2 => -t.a * c - t.b * s,
                _ => t.a * s - t.b * c,
            };
            acc += w.powi(order as i32) * v;
        }
        acc
    }

    /// Value and first derivative together, using a rotation recurrence
    /// for the harmonics. Intended for dense sampling.
    pub(crate) fn eval_value_slope(&self, theta: f64, basis: &mut Vec<(f64, f64)>) -> (f64, f64) {
        let n_max = self.n_max() as usize;
        basis.clear();
        basis.push((1.0, 0.0));
        if n_max > 0 {
            let (s1, c1) = (theta / self.period_index as f64).sin_cos();
            for i in 1..=n_max {
                let (c, s) = basis[i - 1];
                basis.push((c * c1 - s * s1, s * c1 + c * s1));
            }
        }
        let mut value = self.c0;
        let mut slope = 0.0;
        for t in &self.terms {
            let (c, s) = basis[t.n as usize];
            let w = self.omega(t.n);
            value += t.a * c + t.b * s;
            slope += w * (t.b * c - t.a * s);
        }
        (value, slope)
    }

    pub fn derivative(&self) -> TrigSeries {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let w = self.omega(t.n);
                HarmonicTerm { n: t.n, a: w * t.b, b: -w * t.a }
            })
            .collect();
        TrigSeries { period_index: self.period_index, c0: 0.0, terms }
    }

    /// `h + h''`: harmonic `n` is scaled by `1 − n²/M²`.
    pub fn radius(&self) -> TrigSeries {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let f = 1.0 - self.omega(t.n).powi(2);
                HarmonicTerm { n: t.n, a: f * t.a, b: f * t.b }
            })
            .collect();
        TrigSeries { period_index: self.period_index, c0: self.c0, terms }
    }

    pub fn scaled(&self, factor: f64) -> TrigSeries {
        TrigSeries {
            period_index: self.period_index,
            c0: factor * self.c0,
            terms: self.terms.iter().map(|t| HarmonicTerm { n: t.n, a: factor * t.a, b: factor * t.b }).collect(),
        }
    }

    /// Sum of two series on the same period.
    pub fn plus(&self, other: &TrigSeries) -> TrigSeries {
        assert_eq!(self.period_index, other.period_index, "series on different periods");
        let terms = self.terms.iter().chain(other.terms.iter()).copied().collect();
        TrigSeries::from_parts(self.period_index, self.c0 + other.c0, terms)
    }

    pub fn minus_constant(&self, value: f64) -> TrigSeries {
        TrigSeries { c0: self.c0 - value, ..self.clone() }
    }

    /// Coefficients of `θ ↦ h(θ + φ)`.
    pub fn shifted(&self, phi: f64) -> TrigSeries {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let (s, c) = (self.omega(t.n) * phi).sin_cos();
                t.rotated((c, s))
            })
            .collect();
        TrigSeries { period_index: self.period_index, c0: self.c0, terms }
    }

    /// Coefficients of `θ ↦ h(θ + kπ)`, exact whenever `nkπ/M` is a
    /// multiple of `π/2`.
    pub fn shifted_half_turns(&self, k: i64) -> TrigSeries {
        let m2 = 2 * self.period_index as i64;
        let terms = self
            .terms
            .iter()
            .map(|t| {
                // angle = r·π/M with r taken mod 2M
                let r = (t.n as i64 * k).rem_euclid(m2);
                let cs = if (2 * r) % (self.period_index as i64) == 0 {
                    match (2 * r) / self.period_index as i64 {
                        0 => (1.0, 0.0),
                        1 => (0.0, 1.0),
                        2 => (-1.0, 0.0),
                        _ => (0.0, -1.0),
                    }
                } else {
                    let (s, c) = (r as f64 * PI / self.period_index as f64).sin_cos();
                    (c, s)
                };
                t.rotated(cs)
            })
            .collect();
        TrigSeries { period_index: self.period_index, c0: self.c0, terms }
    }

    /// The same function viewed on the period `2π·M·factor`.
    pub fn lifted(&self, factor: u32) -> TrigSeries {
        assert!(factor > 0);
        TrigSeries {
            period_index: self.period_index * factor,
            c0: self.c0,
            terms: self.terms.iter().map(|t| HarmonicTerm { n: t.n * factor, ..*t }).collect(),
        }
    }

    /// Drops terms whose magnitude is at most `tol`.
    pub fn pruned(&self, tol: f64) -> TrigSeries {
        TrigSeries {
            period_index: self.period_index,
            c0: if self.c0.abs() <= tol { 0.0 } else { self.c0 },
            terms: self.terms.iter().copied().filter(|t| t.norm() > tol).collect(),
        }
    }

    /// Exact `∫_{θ0}^{θ1} h(θ) dθ`.
    pub fn integral(&self, theta0: f64, theta1: f64) -> f64 {
        let mut acc = self.c0 * (theta1 - theta0);
        for t in &self.terms {
            let w = self.omega(t.n);
            let (s1, c1) = (w * theta1).sin_cos();
            let (s0, c0) = (w * theta0).sin_cos();
            acc += (t.a * (s1 - s0) - t.b * (c1 - c0)) / w;
        }
        acc
    }

    /// `∫ h² dθ` over one period, by Parseval.
    pub fn mean_square_integral(&self) -> f64 {
        let period = self.period();
        period * self.c0 * self.c0 + 0.5 * period * self.terms.iter().map(HarmonicTerm::norm_sqr).sum::<f64>()
    }

    /// Whether every coefficient is at most `tol` in magnitude.
    pub fn is_zero(&self, tol: f64) -> bool {
        self.coefficient_scale() <= tol
    }

    /// Maximum absolute coefficient difference to `other` on the same period.
    pub fn distance(&self, other: &TrigSeries) -> f64 {
        let diff = self.plus(&other.scaled(-1.0));
        diff.coefficient_scale()
    }
}

/// A transverse zero of a series.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Zero {
    pub theta: f64,
    /// Derivative of the series at the zero.
    pub slope: f64,
}

/// Zeros of a series in a window together with genericity diagnostics.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ZeroSet {
    pub zeros: Vec<Zero>,
    /// Critical points where the series nearly touches zero.
    pub tangential: Vec<f64>,
    /// Zeros whose slope is below the genericity threshold.
    pub weak: Vec<f64>,
    /// The series vanishes identically (a continuum of zeros).
    pub identically_zero: bool,
}

impl ZeroSet {
    pub fn is_generic(&self) -> bool {
        self.tangential.is_empty() && self.weak.is_empty() && !self.identically_zero
    }
}

/// Relative thresholds shared by every zero search.
pub const BISECTION_TOL: f64 = 1e-12;
pub const TANGENCY_TOL: f64 = 1e-8;
pub const VANISHING_TOL: f64 = 1e-12;

/// Number of uniform samples used to bracket zeros over a full period.
pub fn sample_count(series: &TrigSeries) -> usize {
    let n_max = series.n_max().max(1) as usize;
    (64 * n_max * series.period_index() as usize).max(4096)
}

/// Locates the zeros of `f` in `[lo, hi)`.
///
/// `scale` is the coefficient scale of whatever `f` was derived from; it
/// fixes the meaning of "identically zero" and of the tangency threshold.
/// Sign changes are bracketed on a uniform grid and refined by bisection.
pub fn isolate_zeros(f: &TrigSeries, lo: f64, hi: f64, scale: f64) -> ZeroSet {
    let scale = if scale > 0.0 { scale } else { f.coefficient_scale().max(f64::MIN_POSITIVE) };
    if f.is_zero(VANISHING_TOL * scale) {
        return ZeroSet { identically_zero: true, ..Default::default() };
    }
    let df = f.derivative();
    let zeros = bracket_and_bisect(f, lo, hi);
    let mut set = ZeroSet::default();
    for theta in zeros {
        let slope = df.eval(theta, 0);
        if slope.abs() < TANGENCY_TOL * scale {
            set.weak.push(theta);
        }
        set.zeros.push(Zero { theta, slope });
    }
    if !df.is_zero(VANISHING_TOL * scale) {
        for crit in bracket_and_bisect(&df, lo, hi) {
            if f.eval(crit, 0).abs() <= TANGENCY_TOL * scale && !set.weak.iter().any(|w| (w - crit).abs() < 1e-6) {
                set.tangential.push(crit);
            }
        }
    }
    set
}

/// Minimum of `f` over one full period and where it is attained.
pub fn minimum(f: &TrigSeries) -> (f64, f64) {
    let mut best = (f.eval(0.0, 0), 0.0);
    let df = f.derivative();
    if !df.is_zero(0.0) {
        for crit in bracket_and_bisect(&df, 0.0, f.period()) {
            let v = f.eval(crit, 0);
            if v < best.0 {
                best = (v, crit);
            }
        }
    }
    best
}

fn bracket_and_bisect(f: &TrigSeries, lo: f64, hi: f64) -> Vec<f64> {
    let full = sample_count(f) as f64;
    let count = ((full * (hi - lo) / f.period()).ceil() as usize).max(64);
    let step = (hi - lo) / count as f64;
    let mut basis = Vec::new();
    let values: Vec<f64> = (0..=count)
        .map(|i| {
            let theta = if i == count { hi } else { lo + i as f64 * step };
            f.eval_value_slope(theta, &mut basis).0
        })
        .collect();
    let mut roots = Vec::new();
    for i in 0..count {
        let (v0, v1) = (values[i], values[i + 1]);
        let t0 = lo + i as f64 * step;
        if v0 == 0.0 {
            roots.push(t0);
        } else if v0 * v1 < 0.0 {
            let t1 = if i + 1 == count { hi } else { t0 + step };
            roots.push(bisect(f, t0, t1, v0));
        }
    }
    roots
}

fn bisect(f: &TrigSeries, mut a: f64, mut b: f64, mut fa: f64) -> f64 {
    for _ in 0..200 {
        if b - a <= BISECTION_TOL {
            break;
        }
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f.eval(mid, 0);
        if fm == 0.0 {
            return mid;
        }
        if fa * fm < 0.0 {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    0.5 * (a + b)
}
