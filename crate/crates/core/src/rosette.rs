// Copyright 2026 the Rosettes Authors
// SPDX-License-Identifier: Apache-2.0

//! Rosettes described by Fourier-series support functions.
//!
//! An `m`-rosette is a closed regular curve with non-vanishing curvature
//! whose tangent turns `m` times. Its support function
//!
//! ```text
//! p(θ) = a0 + Σ (a_n cos(nθ/m) + b_n sin(nθ/m))
//! ```
//!
//! is `2mπ`-periodic, and the curve is recovered from `p` and `p'`.
//! The curve is a rosette exactly when `ρ = p + p'' > 0` everywhere.

use serde::Serialize;

use crate::error::Result;
use crate::trig::{self, HarmonicTerm, TrigSeries};

/// A point of the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
}

impl PlanePoint {
    pub fn new(x: f64, y: f64) -> Self {
        PlanePoint { x, y }
    }

    pub fn distance(&self, other: &PlanePoint) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn cross(&self, other: &PlanePoint) -> f64 {
        self.x * other.y - self.y * other.x
    }
}

/// Support function of an `m`-rosette.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierSupport {
    series: TrigSeries,
}

impl FourierSupport {
    pub fn new(m: u32, a0: f64, terms: Vec<HarmonicTerm>) -> Result<Self> {
        Ok(FourierSupport { series: TrigSeries::new(m, a0, terms)? })
    }

    /// Circle of radius `r` centred at the origin.
    pub fn circle(r: f64) -> Self {
        FourierSupport { series: TrigSeries::constant(1, r) }
    }

    pub(crate) fn from_series(series: TrigSeries) -> Self {
        FourierSupport { series }
    }

    pub fn m(&self) -> u32 {
        self.series.period_index()
    }

    pub fn a0(&self) -> f64 {
        self.series.c0()
    }

    pub fn terms(&self) -> &[HarmonicTerm] {
        self.series.terms()
    }

    pub fn series(&self) -> &TrigSeries {
        &self.series
    }

    /// `max(|a0|, max_n √(a_n² + b_n²))`.
    pub fn scale(&self) -> f64 {
        self.series.coefficient_scale()
    }

    /// Series of `ρ = p + p''`.
    pub fn radius_series(&self) -> TrigSeries {
        self.series.radius()
    }

    /// Multiplies every coefficient by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        FourierSupport { series: self.series.scaled(factor) }
    }

    /// Length `2πm·a0` (valid for rosettes, where `ρ > 0`).
    pub fn length(&self) -> f64 {
        std::f64::consts::TAU * self.m() as f64 * self.a0()
    }
}

/// Value of `p`, `p'` or `p''` at `θ`.
pub fn eval_support(p: &FourierSupport, theta: f64, order: u32) -> f64 {
    p.series.eval(theta, order)
}

/// Radius of curvature `p(θ) + p''(θ)`.
pub fn radius_of_curvature(p: &FourierSupport, theta: f64) -> f64 {
    p.series.eval(theta, 0) + p.series.eval(theta, 2)
}

/// Point of the curve with normal angle `θ`.
pub fn point_at(p: &FourierSupport, theta: f64) -> PlanePoint {
    series_point(&p.series, theta)
}

/// `(h cos θ − h' sin θ, h sin θ + h' cos θ)` for any support-like series.
pub(crate) fn series_point(h: &TrigSeries, theta: f64) -> PlanePoint {
    let value = h.eval(theta, 0);
    let slope = h.eval(theta, 1);
    let (s, c) = theta.sin_cos();
    PlanePoint::new(value * c - slope * s, value * s + slope * c)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationReport {
    pub is_rosette: bool,
    pub min_rho: f64,
    pub min_rho_theta: f64,
    /// Positivity proved by `a0 − Σ |n²−m²|/m²·|(a_n, b_n)| > 0`.
    pub bound_proves_rosette: bool,
    pub genericity_warnings: Vec<String>,
}

/// Lower bound on `ρ` from the triangle inequality.
pub fn curvature_bound(p: &FourierSupport) -> f64 {
    let m2 = (p.m() as f64).powi(2);
    p.a0() - p.terms().iter().map(|t| ((t.n as f64).powi(2) - m2).abs() / m2 * t.norm()).sum::<f64>()
}

/// Decides whether `p` is the support function of a rosette and flags
/// non-transverse zeros of the auxiliary functions used by cusp and
/// antipodal-pair searches.
pub fn validate_rosette(p: &FourierSupport) -> ValidationReport {
    let rho = p.radius_series();
    let (min_rho, min_rho_theta) = trig::minimum(&rho);
    let bound = curvature_bound(p);
    let scale = p.scale();
    let tol = trig::TANGENCY_TOL * scale;
    let is_rosette = bound > 0.0 || min_rho > 0.0;

    let mut warnings = Vec::new();
    if min_rho.abs() <= tol {
        warnings.push("tangential_zero:rho".to_string());
    }
    let period = rho.period();
    let mut check = |label: String, f: &TrigSeries| {
        let zs = trig::isolate_zeros(f, 0.0, period, scale);
        if zs.identically_zero {
            warnings.push(format!("identically_zero:{label}"));
        } else if !zs.is_generic() {
            warnings.push(format!("tangential_zero:{label}"));
        }
    };
    if is_rosette {
        check("sms".into(), &rho.minus_constant(p.a0()));
        let m = p.m() as i64;
        for k in (1..=m).filter(|k| k % 2 == 1) {
            let diff = rho.plus(&rho.shifted_half_turns(k).scaled(-1.0));
            check(format!("antipodal_k{k}"), &diff);
        }
        if m % 2 == 1 {
            let cwms = rho.plus(&rho.shifted_half_turns(m)).minus_constant(2.0 * p.a0());
            check("cwms".into(), &cwms);
        }
    }
    ValidationReport {
        is_rosette,
        min_rho,
        min_rho_theta,
        bound_proves_rosette: bound > 0.0,
        genericity_warnings: warnings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    pub(crate) fn rosette_m2() -> FourierSupport {
        FourierSupport::new(2, 10.0, vec![HarmonicTerm::cos(1, 4.0), HarmonicTerm::sin(4, 1.0)]).unwrap()
    }

    #[test]
    fn circle_support_is_constant() {
        let c = FourierSupport::circle(1.0);
        for theta in [0.0, 1.0, 5.0] {
            assert_eq!(eval_support(&c, theta, 0), 1.0);
            assert_eq!(eval_support(&c, theta, 2), 0.0);
            assert_eq!(radius_of_curvature(&c, theta), 1.0);
        }
        let q = point_at(&c, 0.0);
        assert!((q.x - 1.0).abs() < 1e-15 && q.y.abs() < 1e-15);
        let q = point_at(&c, FRAC_PI_2);
        assert!(q.x.abs() < 1e-15 && (q.y - 1.0).abs() < 1e-15);
    }

    #[test]
    fn two_rosette_spot_values() {
        let p = rosette_m2();
        assert!((eval_support(&p, 0.0, 0) - 14.0).abs() < 1e-12);
        assert!((eval_support(&p, 0.0, 2) + 1.0).abs() < 1e-12);
        let fd = (eval_support(&p, 1e-5, 1) - eval_support(&p, -1e-5, 1)) / 2e-5;
        assert!((fd + 1.0).abs() < 1e-6);
        assert!((radius_of_curvature(&p, 0.0) - 13.0).abs() < 1e-12);
        // ρ = 10 + 3cos(θ/2) − 3 sin 2θ
        for theta in [0.4f64, 2.0, 7.0] {
            let expect = 10.0 + 3.0 * (theta / 2.0).cos() - 3.0 * (2.0 * theta).sin();
            assert!((radius_of_curvature(&p, theta) - expect).abs() < 1e-12);
        }
        let q = point_at(&p, 0.0);
        assert!((q.x - 14.0).abs() < 1e-12 && (q.y - 2.0).abs() < 1e-12);
    }

    #[test]
    fn translation_harmonic_has_no_curvature() {
        let p = FourierSupport::new(3, 2.0, vec![HarmonicTerm::new(3, 0.7, -0.4)]).unwrap();
        for theta in [0.0, 1.0, 4.0] {
            assert!((radius_of_curvature(&p, theta) - 2.0).abs() < 1e-14);
        }
    }

    #[test]
    fn validation_verdicts() {
        let r = validate_rosette(&FourierSupport::circle(1.0));
        assert!(r.is_rosette);
        assert_eq!(r.min_rho, 1.0);

        let r = validate_rosette(&rosette_m2());
        assert!(r.is_rosette && r.bound_proves_rosette);
        assert!(r.min_rho > 0.0 && r.min_rho < 13.0);
        assert!(r.genericity_warnings.is_empty(), "{:?}", r.genericity_warnings);

        let bad = FourierSupport::new(1, 0.0, vec![HarmonicTerm::cos(2, 1.0)]).unwrap();
        let r = validate_rosette(&bad);
        assert!(!r.is_rosette);
        assert!((r.min_rho + 3.0).abs() < 1e-12);

        let empty = FourierSupport::new(1, -1.0, vec![]).unwrap();
        assert!(!validate_rosette(&empty).is_rosette);
        assert!(!validate_rosette(&FourierSupport::circle(0.0)).is_rosette);
    }

    #[test]
    fn circle_is_flagged_non_generic() {
        let r = validate_rosette(&FourierSupport::circle(2.0));
        assert!(r.genericity_warnings.iter().any(|w| w.starts_with("identically_zero")));
    }

    #[test]
    fn min_rho_location() {
        let p = FourierSupport::new(1, 1.0, vec![HarmonicTerm::cos(2, 0.1)]).unwrap();
        let r = validate_rosette(&p);
        // ρ = 1 − 0.3 cos 2θ, minimum 0.7 at θ = 0 or π
        assert!((r.min_rho - 0.7).abs() < 1e-12);
        let t = r.min_rho_theta.rem_euclid(PI);
        assert!(t < 1e-6 || (PI - t) < 1e-6);
    }
}
