// Copyright 2026 the Rosettes Authors
// SPDX-License-Identifier: Apache-2.0

//! Lengths and oriented areas of rosettes and fronts.
//!
//! Every measure is available twice: in closed form from the Fourier
//! coefficients, and from a sampled polyline. The second route shares no
//! code with the first beyond point evaluation and is used as the referee
//! when verifying the length and isoperimetric identities.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::Serialize;

use crate::derived::{
    base_front, cwms_support, equidistant_branch, sample_front, sms_support, wigner_branch, CurveSamples, FrontSupport,
};
use crate::error::{Error, Result};
use crate::rosette::{FourierSupport, PlanePoint};
use crate::trig::{isolate_zeros, TrigSeries, VANISHING_TOL};

/// Samples used by the oracle unless a caller asks otherwise.
pub const ORACLE_SAMPLES: usize = 1 << 15;
/// Acceptance bar for closed-form identities.
pub const IDENTITY_TOL: f64 = 1e-9;
/// Acceptance bar for oracle agreement and for "clearly fails".
pub const ORACLE_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasureMethod {
    ClosedForm,
    Oracle,
}

/// Length and signed area of a set, corrected for covering multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Measure {
    pub length: f64,
    pub oriented_area: f64,
    pub method: MeasureMethod,
}

/// `∫|h + h''|` over one period divided by the multiplicity.
///
/// The radius is integrated exactly between consecutive zeros.
pub fn length_closed(h: &FrontSupport) -> f64 {
    if h.is_point() {
        return 0.0;
    }
    let rho = h.radius_series();
    let period = rho.period();
    let zs = isolate_zeros(&rho, 0.0, period, h.reference_scale());
    if zs.identically_zero {
        return 0.0;
    }
    let total = if zs.zeros.is_empty() {
        rho.c0().abs() * period
    } else {
        let thetas: Vec<f64> = zs.zeros.iter().map(|z| z.theta).collect();
        let mut sum = 0.0;
        for w in thetas.windows(2) {
            sum += rho.integral(w[0], w[1]).abs();
        }
        sum + rho.integral(thetas[thetas.len() - 1], thetas[0] + period).abs()
    };
    total / h.multiplicity() as f64
}

/// Parseval form of `½∫(h² − h'²)` over one full period.
pub fn series_area(s: &TrigSeries) -> f64 {
    let big_m = s.period_index() as f64;
    let mut area = PI * big_m * s.c0() * s.c0();
    for t in s.terms() {
        let ratio = t.n as f64 / big_m;
        area += 0.5 * PI * big_m * (1.0 - ratio * ratio) * t.norm_sqr();
    }
    area
}

/// Signed area of the set, divided by the multiplicity.
pub fn area_closed(h: &FrontSupport) -> f64 {
    if h.is_point() {
        return 0.0;
    }
    series_area(h.series()) / h.multiplicity() as f64
}

pub fn closed_measures(h: &FrontSupport) -> Measure {
    Measure { length: length_closed(h), oriented_area: area_closed(h), method: MeasureMethod::ClosedForm }
}

/// Sum of segment lengths of an open or closed polyline.
pub fn polyline_length(points: &[PlanePoint]) -> f64 {
    points.windows(2).map(|w| w[0].distance(&w[1])).sum()
}

/// `½ Σ x_j y_{j+1} − x_{j+1} y_j` over a closed polyline (last point equals first).
pub fn shoelace_area(points: &[PlanePoint]) -> f64 {
    0.5 * points.windows(2).map(|w| w[0].cross(&w[1])).sum::<f64>()
}

fn strided(points: &[PlanePoint], stride: usize) -> Vec<PlanePoint> {
    points.iter().step_by(stride).copied().collect()
}

/// Shoelace area with two Richardson steps over the nested subsamples
/// `N`, `N/2`, `N/4`. The shoelace error of a trigonometric curve is an
/// even power series in `1/N`, so the steps remove the `N⁻²` and `N⁻⁴` terms.
pub fn extrapolated_shoelace_area(points: &[PlanePoint]) -> f64 {
    let n = points.len().saturating_sub(1);
    let a1 = shoelace_area(points);
    if !n.is_multiple_of(4) || n < 64 {
        return a1;
    }
    let a2 = shoelace_area(&strided(points, 2));
    let a4 = shoelace_area(&strided(points, 4));
    let r1 = (4.0 * a1 - a2) / 3.0;
    let r2 = (4.0 * a2 - a4) / 3.0;
    (16.0 * r1 - r2) / 15.0
}

/// Sampling oracle: polyline length and extrapolated shoelace area.
pub fn oracle_measures(s: &CurveSamples) -> Measure {
    if s.is_point {
        return Measure { length: 0.0, oriented_area: 0.0, method: MeasureMethod::Oracle };
    }
    let mult = s.multiplicity as f64;
    Measure {
        length: polyline_length(&s.points) / mult,
        oriented_area: extrapolated_shoelace_area(&s.points) / mult,
        method: MeasureMethod::Oracle,
    }
}

/// Oracle measures of a front at `n` samples.
pub fn sampled_measures(h: &FrontSupport, n: usize) -> Result<Measure> {
    Ok(oracle_measures(&sample_front(h, n)?))
}

/// Hausdorff distance between two finite point sets.
///
/// Points of `b` are bucketed on a square grid; each query searches rings of
/// cells outward until the ring can no longer contain a closer point.
pub fn hausdorff_distance(a: &[PlanePoint], b: &[PlanePoint]) -> f64 {
    directed_hausdorff(a, b).max(directed_hausdorff(b, a))
}

fn directed_hausdorff(a: &[PlanePoint], b: &[PlanePoint]) -> f64 {
    if a.is_empty() {
        return 0.0;
    }
    if b.is_empty() {
        return f64::INFINITY;
    }
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for q in b {
        x0 = x0.min(q.x);
        x1 = x1.max(q.x);
        y0 = y0.min(q.y);
        y1 = y1.max(q.y);
    }
    let extent = (x1 - x0).max(y1 - y0);
    let cell = if extent > 0.0 { extent / (b.len() as f64).sqrt().max(1.0) } else { 1.0 };
    let key = |q: &PlanePoint| (((q.x - x0) / cell).floor() as i64, ((q.y - y0) / cell).floor() as i64);
    let mut grid: std::collections::HashMap<(i64, i64), Vec<PlanePoint>> = std::collections::HashMap::new();
    for q in b {
        grid.entry(key(q)).or_default().push(*q);
    }
    let (nx, ny) = key(&PlanePoint::new(x1, y1));
    let mut worst: f64 = 0.0;
    for q in a {
        let (cx, cy) = key(q);
        let mut best = f64::INFINITY;
        let mut r = [0, -cx, cx - nx, -cy, cy - ny].into_iter().max().unwrap_or(0);
        let covering = [cx, nx - cx, cy, ny - cy].into_iter().map(i64::abs).max().unwrap_or(0);
        loop {
            for dx in -r..=r {
                for dy in -r..=r {
                    if dx.abs() != r && dy.abs() != r {
                        continue;
                    }
                    if let Some(pts) = grid.get(&(cx + dx, cy + dy)) {
                        for p in pts {
                            best = best.min(p.distance(q));
                        }
                    }
                }
            }
            if best <= r as f64 * cell || r >= covering {
                break;
            }
            r += 1;
        }
        worst = worst.max(best);
    }
    worst
}

/// `mπa0² − (π/2m) Σ (n²−m²) cos(nkπ/m) (a_n² + b_n²)`.
pub fn shift_correlation(p: &FourierSupport, k: u32) -> f64 {
    let m = p.m() as f64;
    let mut psi = m * PI * p.a0() * p.a0();
    for t in p.terms() {
        let n = t.n as f64;
        psi -= PI / (2.0 * m) * (n * n - m * m) * (n * k as f64 * PI / m).cos() * t.norm_sqr();
    }
    psi
}

/// Area of Wigner branch `k` evaluated directly from the rosette's
/// coefficients, without building the branch support.
pub fn wigner_branch_area_formula(p: &FourierSupport, k: u32) -> Result<f64> {
    let m = p.m();
    if k == 0 || k > m {
        return Err(Error::BranchIndex { k: k as i64, lo: 1, hi: m as i64 });
    }
    let mf = m as f64;
    let a0sq = p.a0() * p.a0();
    if k < m {
        let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
        let mut area = (1.0 + sign) / 2.0 * mf * PI * a0sq;
        for t in p.terms() {
            let n = t.n as f64;
            let c = (n * k as f64 * PI / mf).cos();
            area -= PI / (4.0 * mf) * (n * n - mf * mf) * (1.0 + sign * c) * t.norm_sqr();
        }
        Ok(area)
    } else {
        let sign_m = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
        let mut area = (1.0 + sign_m) / 4.0 * mf * PI * a0sq;
        for t in p.terms() {
            let n = t.n as f64;
            let factor = if (t.n + m).is_multiple_of(2) { 2.0 } else { 0.0 };
            area -= PI / (8.0 * mf) * (n * n - mf * mf) * factor * t.norm_sqr();
        }
        Ok(area)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `lhs = rhs`.
    Equal,
    /// `lhs ≤ rhs`.
    AtMost,
}

/// Which right-hand side a report evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Constants as published.
    Printed,
    /// Constants recomputed from the Fourier area and length formulas.
    Recomputed,
    /// Published form specialized to ovals (`m = 1`).
    Oval,
}

/// One side-by-side evaluation of an identity.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub variant: Variant,
    pub relation: Relation,
    pub method: MeasureMethod,
    pub lhs: f64,
    pub rhs: f64,
    /// `|lhs − rhs| / max(1, |lhs|)`.
    pub residual: f64,
    /// `(rhs − lhs) / max(1, |lhs|)`.
    pub slack: f64,
    pub tolerance: f64,
    pub terms: BTreeMap<String, f64>,
    pub verdict: bool,
}

impl IdentityReport {
    pub fn new(
        identity_id: impl Into<String>,
        variant: Variant,
        relation: Relation,
        method: MeasureMethod,
        lhs: f64,
        rhs: f64,
        terms: BTreeMap<String, f64>,
    ) -> Self {
        let denom = lhs.abs().max(1.0);
        let residual = (lhs - rhs).abs() / denom;
        let slack = (rhs - lhs) / denom;
        let tolerance = match method {
            MeasureMethod::ClosedForm => IDENTITY_TOL,
            MeasureMethod::Oracle => ORACLE_TOL,
        };
        let verdict = match relation {
            Relation::Equal => residual <= tolerance,
            Relation::AtMost => slack >= -tolerance,
        };
        IdentityReport {
            identity_id: identity_id.into(),
            variant,
            relation,
            method,
            lhs,
            rhs,
            residual,
            slack,
            tolerance,
            terms,
            verdict,
        }
    }

    /// Fails by more than the oracle tolerance.
    pub fn clearly_fails(&self) -> bool {
        match self.relation {
            Relation::Equal => self.residual > ORACLE_TOL,
            Relation::AtMost => self.slack < -ORACLE_TOL,
        }
    }
}

/// Outcome of comparing the printed and recomputed forms of an identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Adjudication {
    /// Only one form exists.
    SingleForm,
    PrintedConfirmed,
    RecomputedConfirmed,
    /// Both forms balance on this input.
    Ambiguous,
    /// Neither form balances on this input.
    NeitherHolds,
}

/// All evaluated variants of one identity, in closed form and by the
/// sampling oracle, with the variant the oracle confirms.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub identity_id: String,
    pub variants: Vec<IdentityReport>,
    /// Same variants re-evaluated with oracle measures, in the same order.
    pub oracle: Vec<IdentityReport>,
    /// Index into `variants` of the single form confirmed by both routes.
    pub selected: Option<usize>,
    pub adjudication: Adjudication,
    /// Reports that take no part in adjudication.
    pub supplements: Vec<IdentityReport>,
}

impl IdentityCheck {
    fn assemble(identity_id: &str, variants: Vec<IdentityReport>, oracle: Vec<IdentityReport>) -> Self {
        let confirmed: Vec<usize> = (0..variants.len()).filter(|&i| variants[i].verdict && oracle[i].verdict).collect();
        let selected = if confirmed.len() == 1 { Some(confirmed[0]) } else { None };
        let adjudication = if variants.len() == 1 {
            if selected.is_some() {
                Adjudication::SingleForm
            } else {
                Adjudication::NeitherHolds
            }
        } else {
            match confirmed.len() {
                0 => Adjudication::NeitherHolds,
                1 => match variants[confirmed[0]].variant {
                    Variant::Printed => Adjudication::PrintedConfirmed,
                    _ => Adjudication::RecomputedConfirmed,
                },
                _ => Adjudication::Ambiguous,
            }
        };
        IdentityCheck {
            identity_id: identity_id.to_string(),
            variants,
            oracle,
            selected,
            adjudication,
            supplements: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.selected.is_some()
    }

    pub fn variant(&self, which: Variant) -> Option<&IdentityReport> {
        self.variants.iter().find(|r| r.variant == which)
    }

    pub fn oracle_variant(&self, which: Variant) -> Option<&IdentityReport> {
        self.oracle.iter().find(|r| r.variant == which)
    }

    /// True when exactly one of two variants holds and the other clearly fails,
    /// with the oracle agreeing on both.
    pub fn separates_variants(&self) -> bool {
        if self.variants.len() != 2 {
            return false;
        }
        let (a, b) = (&self.variants[0], &self.variants[1]);
        let (oa, ob) = (&self.oracle[0], &self.oracle[1]);
        (a.verdict && oa.verdict && b.clearly_fails() && !ob.verdict)
            || (b.verdict && ob.verdict && a.clearly_fails() && !oa.verdict)
    }
}

type FormEval = dyn Fn(&BTreeMap<String, f64>) -> (f64, f64);

/// One variant of an identity as a function of the measured quantities.
struct Form {
    variant: Variant,
    relation: Relation,
    eval: Box<FormEval>,
}

fn run_forms(
    identity_id: &str,
    closed: BTreeMap<String, f64>,
    oracle: BTreeMap<String, f64>,
    forms: &[Form],
) -> IdentityCheck {
    let make = |terms: &BTreeMap<String, f64>, method| {
        forms
            .iter()
            .map(|f| {
                let (lhs, rhs) = (f.eval)(terms);
                IdentityReport::new(identity_id, f.variant, f.relation, method, lhs, rhs, terms.clone())
            })
            .collect::<Vec<_>>()
    };
    let variants = make(&closed, MeasureMethod::ClosedForm);
    let oracle_reports = make(&oracle, MeasureMethod::Oracle);
    IdentityCheck::assemble(identity_id, variants, oracle_reports)
}

/// Named quantities measured in closed form and by the oracle.
struct Quantities {
    closed: BTreeMap<String, f64>,
    oracle: BTreeMap<String, f64>,
}

impl Quantities {
    fn new() -> Self {
        Quantities { closed: BTreeMap::new(), oracle: BTreeMap::new() }
    }

    fn front(&mut self, prefix: &str, h: &FrontSupport, want_length: bool, samples: usize) -> Result<()> {
        let c = closed_measures(h);
        let o = sampled_measures(h, samples)?;
        self.closed.insert(format!("A_{prefix}"), c.oriented_area);
        self.oracle.insert(format!("A_{prefix}"), o.oriented_area);
        if want_length {
            self.closed.insert(format!("L_{prefix}"), c.length);
            self.oracle.insert(format!("L_{prefix}"), o.length);
        }
        Ok(())
    }
}

fn get(t: &BTreeMap<String, f64>, key: &str) -> f64 {
    t[key]
}

fn form(variant: Variant, relation: Relation, eval: impl Fn(&BTreeMap<String, f64>) -> (f64, f64) + 'static) -> Form {
    Form { variant, relation, eval: Box::new(eval) }
}

/// Isoperimetric equality relating a rosette, its double-covered Wigner
/// branch and its CWMS.
///
/// Odd `m`: `L² = 4πmÃ − 8πmÃ_W − πmÃ_CWMS`. Even `m` evaluates the printed
/// constants `(−2πm, 4πm, πm/2)` and the recomputed `(−4πm, 8πm, πm)`.
pub fn verify_identity_i(p: &FourierSupport) -> Result<IdentityCheck> {
    verify_identity_i_with(p, ORACLE_SAMPLES)
}

pub fn verify_identity_i_with(p: &FourierSupport, samples: usize) -> Result<IdentityCheck> {
    let m = p.m();
    let mf = m as f64;
    let mut q = Quantities::new();
    q.front("R", &base_front(p), true, samples)?;
    q.front("W", &wigner_branch(p, m)?, false, samples)?;
    q.front("CWMS", &cwms_support(p), false, samples)?;
    let id = "isoperimetric_wigner_cwms";
    let with = move |cr: f64, cw: f64, cc: f64| {
        move |t: &BTreeMap<String, f64>| {
            let l = get(t, "L_R");
            (l * l, cr * PI * mf * get(t, "A_R") + cw * PI * mf * get(t, "A_W") + cc * PI * mf * get(t, "A_CWMS"))
        }
    };
    let forms = if m % 2 == 1 {
        vec![form(Variant::Printed, Relation::Equal, with(4.0, -8.0, -1.0))]
    } else {
        vec![
            form(Variant::Printed, Relation::Equal, with(-2.0, 4.0, 0.5)),
            form(Variant::Recomputed, Relation::Equal, with(-4.0, 8.0, 1.0)),
        ]
    };
    Ok(run_forms(id, q.closed, q.oracle, &forms))
}

/// True when every even-index harmonic other than the translation harmonic
/// `n = m` vanishes relative to the scale.
pub fn is_constant_width(p: &FourierSupport) -> bool {
    let tol = VANISHING_TOL * p.scale();
    p.terms().iter().all(|t| t.n % 2 == 1 || t.n == p.m() || t.norm() <= tol)
}

/// Constant-width verdict plus the area identity that characterizes it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstantWidthReport {
    pub is_constant_width: bool,
    /// Residual of the form the oracle confirms on constant-width input
    /// (the recomputed form; identical to the printed one for even `m`).
    pub residual: f64,
    /// True when the residual vanishes exactly when the verdict is true.
    pub consistent: bool,
    pub check: IdentityCheck,
}

/// Constant-width test with the area identity
/// `L² = ±8πmÃ_W + 2πm(1 − (−1)^m)Ã`, where the printed form has `+` and the
/// recomputed form carries the sign `(−1)^m`.
pub fn constant_width_test(p: &FourierSupport) -> Result<ConstantWidthReport> {
    constant_width_test_with(p, ORACLE_SAMPLES)
}

pub fn constant_width_test_with(p: &FourierSupport, samples: usize) -> Result<ConstantWidthReport> {
    let m = p.m();
    let mf = m as f64;
    let sign_m = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut q = Quantities::new();
    q.front("R", &base_front(p), true, samples)?;
    q.front("W", &wigner_branch(p, m)?, false, samples)?;
    let with = move |cw: f64| {
        move |t: &BTreeMap<String, f64>| {
            let l = get(t, "L_R");
            (l * l, cw * 8.0 * PI * mf * get(t, "A_W") + 2.0 * PI * mf * (1.0 - sign_m) * get(t, "A_R"))
        }
    };
    let forms = if m.is_multiple_of(2) {
        vec![form(Variant::Printed, Relation::Equal, with(1.0))]
    } else {
        vec![
            form(Variant::Printed, Relation::Equal, with(1.0)),
            form(Variant::Recomputed, Relation::Equal, with(sign_m)),
        ]
    };
    let check = run_forms("constant_width_area", q.closed, q.oracle, &forms);
    let residual = check.variants.last().map(|r| r.residual).unwrap_or(f64::NAN);
    let is_cw = is_constant_width(p);
    let consistent = if is_cw { residual <= IDENTITY_TOL } else { residual > IDENTITY_TOL };
    Ok(ConstantWidthReport { is_constant_width: is_cw, residual, consistent, check })
}

/// Isoperimetric equality relating a rosette of odd rotation number to its SMS.
///
/// Evaluates the printed `L² = 4πmÃ + 4πmÃ_SMS` and the recomputed
/// `L² = 4πmÃ − 4πmÃ_SMS`; for ovals also the form with `|Ã_SMS|`.
pub fn verify_identity_ii(p: &FourierSupport) -> Result<IdentityCheck> {
    verify_identity_ii_with(p, ORACLE_SAMPLES)
}

pub fn verify_identity_ii_with(p: &FourierSupport, samples: usize) -> Result<IdentityCheck> {
    let m = p.m();
    if m.is_multiple_of(2) {
        return Err(Error::Hypothesis(format!("rotation number {m} is even")));
    }
    if is_constant_width(p) {
        return Err(Error::Hypothesis("rosette has constant width".into()));
    }
    let mf = m as f64;
    let mut q = Quantities::new();
    q.front("R", &base_front(p), true, samples)?;
    q.front("SMS", &sms_support(p), false, samples)?;
    let with = move |cs: f64| {
        move |t: &BTreeMap<String, f64>| {
            let l = get(t, "L_R");
            (l * l, 4.0 * PI * mf * get(t, "A_R") + cs * 4.0 * PI * mf * get(t, "A_SMS"))
        }
    };
    let forms =
        [form(Variant::Printed, Relation::Equal, with(1.0)), form(Variant::Recomputed, Relation::Equal, with(-1.0))];
    let id = "isoperimetric_sms";
    let closed = q.closed.clone();
    let mut check = run_forms(id, q.closed, q.oracle, &forms);
    if m == 1 {
        let l = closed["L_R"];
        let rhs = 4.0 * PI * closed["A_R"] + 4.0 * PI * closed["A_SMS"].abs();
        check.supplements.push(IdentityReport::new(
            "isoperimetric_sms_oval",
            Variant::Oval,
            Relation::Equal,
            MeasureMethod::ClosedForm,
            l * l,
            rhs,
            closed,
        ));
    }
    Ok(check)
}

/// `L² − 4πÃ` for ovals.
pub fn isoperimetric_defect(p: &FourierSupport) -> Result<f64> {
    if p.m() != 1 {
        return Err(Error::Hypothesis(format!("rotation number {} is not 1", p.m())));
    }
    let h = base_front(p);
    let l = length_closed(&h);
    Ok(l * l - 4.0 * PI * area_closed(&h))
}

/// Case of the branch length theorem that applies to `(λ, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LengthCase {
    /// `λ ∈ {0, 1}`: the branch is the curve itself.
    Endpoint,
    WignerEvenSimple,
    WignerEvenDouble,
    WignerOddSimple,
    WignerOddDouble,
    InnerEven,
    InnerOdd,
    OuterOdd,
    OuterEven,
}

impl LengthCase {
    pub fn classify(m: u32, lambda: f64, k: u32) -> Self {
        let even = k.is_multiple_of(2);
        if lambda == 0.0 || lambda == 1.0 {
            LengthCase::Endpoint
        } else if lambda == 0.5 {
            match (even, k == m) {
                (true, false) => LengthCase::WignerEvenSimple,
                (true, true) => LengthCase::WignerEvenDouble,
                (false, false) => LengthCase::WignerOddSimple,
                (false, true) => LengthCase::WignerOddDouble,
            }
        } else if lambda > 0.0 && lambda < 1.0 {
            if even {
                LengthCase::InnerEven
            } else {
                LengthCase::InnerOdd
            }
        } else if even {
            LengthCase::OuterEven
        } else {
            LengthCase::OuterOdd
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            LengthCase::Endpoint => "branch_length_endpoint",
            LengthCase::WignerEvenSimple => "branch_length_wigner_even",
            LengthCase::WignerEvenDouble => "branch_length_wigner_even_double",
            LengthCase::WignerOddSimple => "branch_length_wigner_odd",
            LengthCase::WignerOddDouble => "branch_length_wigner_odd_double",
            LengthCase::InnerEven => "branch_length_inner_even",
            LengthCase::InnerOdd => "branch_length_inner_odd",
            LengthCase::OuterOdd => "branch_length_outer_odd",
            LengthCase::OuterEven => "branch_length_outer_even",
        }
    }
}

/// Branch length against the length of the rosette.
///
/// Wigner cases compare `L_b` (or `2L_b` for the double covering) with `L`;
/// the outer odd case evaluates both the printed right side `L` and the
/// recomputed `(|λ| + |1−λ|)·L`.
pub fn branch_length_theorem(p: &FourierSupport, lambda: f64, k: u32) -> Result<IdentityCheck> {
    branch_length_theorem_with(p, lambda, k, ORACLE_SAMPLES)
}

pub fn branch_length_theorem_with(p: &FourierSupport, lambda: f64, k: u32, samples: usize) -> Result<IdentityCheck> {
    let branch = equidistant_branch(p, lambda, k)?;
    let case = LengthCase::classify(p.m(), lambda, k);
    let mut q = Quantities::new();
    q.front("R", &base_front(p), true, samples)?;
    q.front("branch", &branch, true, samples)?;
    let factor = lambda.abs() + (1.0 - lambda).abs();
    let doubled = matches!(case, LengthCase::WignerEvenDouble | LengthCase::WignerOddDouble);
    let lhs_factor = if doubled { 2.0 } else { 1.0 };
    let with = move |rhs_factor: f64| {
        move |t: &BTreeMap<String, f64>| (lhs_factor * get(t, "L_branch"), rhs_factor * get(t, "L_R"))
    };
    let forms = match case {
        LengthCase::Endpoint | LengthCase::WignerEvenSimple | LengthCase::WignerEvenDouble | LengthCase::InnerEven => {
            vec![form(Variant::Printed, Relation::Equal, with(1.0))]
        }
        LengthCase::WignerOddSimple | LengthCase::WignerOddDouble | LengthCase::InnerOdd => {
            vec![form(Variant::Printed, Relation::AtMost, with(1.0))]
        }
        LengthCase::OuterOdd => vec![
            form(Variant::Printed, Relation::Equal, with(1.0)),
            form(Variant::Recomputed, Relation::Equal, with(factor)),
        ],
        LengthCase::OuterEven => vec![form(Variant::Printed, Relation::AtMost, with(factor))],
    };
    Ok(run_forms(case.id(), q.closed, q.oracle, &forms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derived::{offset_support, sample_front};
    use crate::trig::HarmonicTerm;

    fn rosette_m2() -> FourierSupport {
        FourierSupport::new(2, 10.0, vec![HarmonicTerm::cos(1, 4.0), HarmonicTerm::sin(4, 1.0)]).unwrap()
    }

    fn rosette_m3() -> FourierSupport {
        FourierSupport::new(
            3,
            12.0,
            vec![HarmonicTerm::cos(2, 1.0), HarmonicTerm::cos(5, 4.0), HarmonicTerm::sin(6, -1.0)],
        )
        .unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn circle_measures() {
        let h = base_front(&FourierSupport::circle(1.0));
        assert!(close(length_closed(&h), 2.0 * PI, 1e-15));
        assert!(close(area_closed(&h), PI, 1e-15));
        let o = oracle_measures(&sample_front(&h, ORACLE_SAMPLES).unwrap());
        assert!(close(o.length, 2.0 * PI, 1e-6));
        assert!(close(o.oriented_area, PI, 1e-12));
    }

    #[test]
    fn two_rosette_measures() {
        let p = rosette_m2();
        let h = base_front(&p);
        assert!(close(length_closed(&h), 40.0 * PI, 1e-13));
        assert!(close(area_closed(&h), 209.0 * PI, 1e-13));
        let o = sampled_measures(&h, ORACLE_SAMPLES).unwrap();
        assert!(close(o.length, 40.0 * PI, 1e-6));
        assert!(close(o.oriented_area, 209.0 * PI, 1e-9));

        let w = wigner_branch(&p, 2).unwrap();
        assert!(close(length_closed(&w), 20.0 * PI, 1e-13));
        assert!(close(sampled_measures(&w, ORACLE_SAMPLES).unwrap().length, 20.0 * PI, 1e-6));
    }

    #[test]
    fn cusped_branch_length_is_piecewise_exact() {
        // ρ_h = (3/2)(cos(θ/2) + sin(θ/2)) on [0, 4π): ∫|ρ_h| = 3·(2√2)·2 = 12√2
        let w = wigner_branch(&rosette_m2(), 1).unwrap();
        let exact = 12.0 * 2f64.sqrt();
        assert!(close(length_closed(&w), exact, 1e-12));
        assert!(close(sampled_measures(&w, ORACLE_SAMPLES).unwrap().length, exact, 1e-6));
    }

    #[test]
    fn point_front_measures_vanish() {
        let h = offset_support(&FourierSupport::circle(1.0), 1.0);
        assert_eq!(closed_measures(&h).length, 0.0);
        assert_eq!(closed_measures(&h).oriented_area, 0.0);
        let o = oracle_measures(&sample_front(&h, 64).unwrap());
        assert_eq!((o.length, o.oriented_area), (0.0, 0.0));
    }

    #[test]
    fn wigner_areas_match_coefficient_formula() {
        for p in [rosette_m2(), rosette_m3()] {
            for k in 1..=p.m() {
                let w = wigner_branch(&p, k).unwrap();
                let direct = wigner_branch_area_formula(&p, k).unwrap();
                assert!(close(area_closed(&w), direct, 1e-13), "k={k}");
                if k < p.m() {
                    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                    let via_psi = 0.5 * area_closed(&base_front(&p)) + 0.5 * sign * shift_correlation(&p, k);
                    assert!(close(via_psi, direct, 1e-13));
                }
            }
        }
    }

    #[test]
    fn identity_i_odd_and_even() {
        let c = verify_identity_i(&rosette_m3()).unwrap();
        assert_eq!(c.adjudication, Adjudication::SingleForm);
        assert!(c.variants[0].residual <= IDENTITY_TOL);

        let c = verify_identity_i(&FourierSupport::circle(1.0)).unwrap();
        assert!(c.holds());
        assert!(close(c.variants[0].lhs, 4.0 * PI * PI, 1e-14));

        let c = verify_identity_i(&rosette_m2()).unwrap();
        assert_eq!(c.adjudication, Adjudication::RecomputedConfirmed);
        assert!(c.separates_variants());
    }

    #[test]
    fn constant_width_examples() {
        let cw = FourierSupport::new(3, 2.0, vec![HarmonicTerm::cos(1, 1.0)]).unwrap();
        let r = constant_width_test(&cw).unwrap();
        assert!(r.is_constant_width && r.consistent);
        assert!(r.residual <= IDENTITY_TOL);
        assert_eq!(r.check.adjudication, Adjudication::RecomputedConfirmed);

        let r = constant_width_test(&FourierSupport::circle(1.0)).unwrap();
        assert!(r.is_constant_width && r.residual <= IDENTITY_TOL);

        let r = constant_width_test(&rosette_m2()).unwrap();
        assert!(!r.is_constant_width && r.consistent);
        assert!(r.residual > ORACLE_TOL);
    }

    #[test]
    fn translation_harmonic_keeps_constant_width() {
        let shifted =
            FourierSupport::new(2, 5.0, vec![HarmonicTerm::cos(1, 1.0), HarmonicTerm::new(2, 0.7, -0.4)]).unwrap();
        let r = constant_width_test(&shifted).unwrap();
        assert!(r.is_constant_width && r.consistent);
    }

    #[test]
    fn balanced_even_harmonics_cancel_the_area_identity() {
        // (9 − 4)·c2² = (16 − 9)·c4² for m = 3.
        let c4 = (5.0f64 / 7.0).sqrt();
        let p = FourierSupport::new(3, 10.0, vec![HarmonicTerm::cos(2, 1.0), HarmonicTerm::cos(4, c4)]).unwrap();
        let r = constant_width_test(&p).unwrap();
        assert!(!r.is_constant_width);
        assert!(r.residual <= IDENTITY_TOL);
        assert!(!r.consistent);
        let oracle = r.check.oracle.last().unwrap();
        assert!(oracle.residual <= ORACLE_TOL);
    }

    #[test]
    fn identity_ii_examples() {
        let oval = FourierSupport::new(1, 2.0, vec![HarmonicTerm::cos(2, 0.3)]).unwrap();
        let c = verify_identity_ii(&oval).unwrap();
        assert_eq!(c.adjudication, Adjudication::RecomputedConfirmed);
        assert!(c.supplements[0].residual <= IDENTITY_TOL);

        let two_harmonic_m3 =
            FourierSupport::new(3, 4.0, vec![HarmonicTerm::cos(2, 1.0), HarmonicTerm::sin(6, -0.5)]).unwrap();
        assert!(verify_identity_ii(&two_harmonic_m3).unwrap().separates_variants());

        assert!(matches!(verify_identity_ii(&FourierSupport::circle(1.0)), Err(Error::Hypothesis(_))));
        assert!(matches!(verify_identity_ii(&rosette_m2()), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn defect_examples() {
        assert!(isoperimetric_defect(&FourierSupport::circle(1.0)).unwrap().abs() < 1e-12);
        let p = FourierSupport::new(1, 1.0, vec![HarmonicTerm::cos(3, 0.05)]).unwrap();
        assert!(close(isoperimetric_defect(&p).unwrap(), 0.04 * PI * PI, 1e-12));
        assert!(isoperimetric_defect(&rosette_m2()).is_err());
    }

    #[test]
    fn branch_length_cases() {
        let p = rosette_m2();
        let c = branch_length_theorem(&p, 0.5, 2).unwrap();
        assert_eq!(c.identity_id, "branch_length_wigner_even_double");
        assert!(c.holds() && c.variants[0].residual < 1e-14);

        let c = branch_length_theorem(&p, 0.5, 1).unwrap();
        assert_eq!(c.variants[0].relation, Relation::AtMost);
        assert!(c.holds() && c.variants[0].slack > 0.0);

        let c = branch_length_theorem(&p, 1.7, 1).unwrap();
        assert_eq!(c.adjudication, Adjudication::RecomputedConfirmed);

        assert!(branch_length_theorem(&p, 0.5, 3).is_err());
    }

    #[test]
    fn hausdorff_of_shifted_sets() {
        let a: Vec<PlanePoint> = (0..100).map(|i| PlanePoint::new(i as f64, 0.0)).collect();
        let b: Vec<PlanePoint> = (0..100).map(|i| PlanePoint::new(i as f64, 0.5)).collect();
        assert!((hausdorff_distance(&a, &b) - 0.5).abs() < 1e-15);
        let c: Vec<PlanePoint> = a.iter().rev().copied().collect();
        assert_eq!(hausdorff_distance(&a, &c), 0.0);
        let far = [PlanePoint::new(1000.0, 1000.0)];
        let d = hausdorff_distance(&a, &far);
        assert!((d - PlanePoint::new(0.0, 0.0).distance(&far[0])).abs() < 1e-9);
    }

    #[test]
    fn report_residual_is_recomputable() {
        let r = IdentityReport::new(
            "x",
            Variant::Printed,
            Relation::Equal,
            MeasureMethod::ClosedForm,
            4.0,
            3.0,
            BTreeMap::new(),
        );
        assert_eq!(r.residual, 0.25);
        assert!(!r.verdict && r.clearly_fails());
        let r = IdentityReport::new(
            "x",
            Variant::Printed,
            Relation::AtMost,
            MeasureMethod::Oracle,
            0.5,
            3.0,
            BTreeMap::new(),
        );
        assert!(r.verdict && r.slack > 0.0);
    }
}
