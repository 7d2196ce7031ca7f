// Copyright 2026 the Rosettes Authors
// SPDX-License-Identifier: Apache-2.0

//! Affine equidistants of a pair of rosettes.
//!
//! Both parameter circles are cut at multiples of `π` into arcs. A branch of
//! `E_λ(R_{m1}, R_{m2})` glues arcs of the first rosette to parallel arcs of
//! the second, offset by `kπ`; its support function has period
//! `2π·lcm(m1, m2)`.

use serde::Serialize;

use crate::derived::{BranchDescriptor, BranchKind, FrontSupport};
use crate::error::{Error, Result};
use crate::measures::{length_closed, IdentityReport, MeasureMethod, Relation, Variant};
use crate::rosette::FourierSupport;
use crate::singularities::{find_cusps, rotation_number, BranchClass, CuspReport, Rotation};
use crate::trig::{TrigSeries, VANISHING_TOL};

pub fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

/// Which family of glueing schemes a pair branch belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairFamily {
    /// `λ = 1/2`: `h = ½(p1(θ) + (−1)^k p2(θ + kπ))`.
    WignerPair,
    /// `h = λ p1(θ) + (−1)^k (1−λ) p2(θ + kπ)`.
    LambdaFirst,
    /// `h = (1−λ) p1(θ) + (−1)^k λ p2(θ + (k − 2gcd)π)`.
    LambdaSecond,
}

/// Arcs `(i, i+1 mod 2m)` of both rosettes; indices of the second rosette
/// are offset by `2m1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParallelArcSet {
    pub m1: u32,
    pub m2: u32,
    pub entries: Vec<(u32, u32)>,
}

pub fn parallel_arc_set(m1: u32, m2: u32) -> Result<ParallelArcSet> {
    if m1 == 0 || m2 == 0 {
        return Err(Error::ZeroRotationNumber);
    }
    let mut entries = Vec::with_capacity((2 * m1 + 2 * m2) as usize);
    entries.extend((0..2 * m1).map(|i| (i, (i + 1) % (2 * m1))));
    entries.extend((0..2 * m2).map(|i| (2 * m1 + i, 2 * m1 + (i + 1) % (2 * m2))));
    Ok(ParallelArcSet { m1, m2, entries })
}

/// Two rows of arc start indices; column `j` glues arc `upper[j]` to arc
/// `lower[j]`, and the last column repeats the first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlueingScheme {
    pub upper: Vec<u32>,
    pub lower: Vec<u32>,
    pub family: PairFamily,
    pub k: u32,
}

impl GlueingScheme {
    /// Number of glued arc pairs (columns minus the closing one).
    pub fn arc_count(&self) -> usize {
        self.upper.len() - 1
    }

    pub fn closes(&self) -> bool {
        self.upper.len() == self.lower.len()
            && self.upper.first() == self.upper.last()
            && self.lower.first() == self.lower.last()
    }
}

/// Valid pair branch indices for `λ`.
pub fn pair_branch_count(m1: u32, m2: u32, lambda: f64) -> u32 {
    let g = gcd(m1, m2);
    if lambda == 0.5 {
        2 * g
    } else {
        4 * g
    }
}

fn family_of(m1: u32, m2: u32, lambda: f64, k: u32) -> PairFamily {
    if lambda == 0.5 {
        PairFamily::WignerPair
    } else if k < 2 * gcd(m1, m2) {
        PairFamily::LambdaFirst
    } else {
        PairFamily::LambdaSecond
    }
}

/// One scheme per branch: `2gcd` at `λ = 1/2`, `4gcd` otherwise.
pub fn maximal_glueing_schemes(m1: u32, m2: u32, lambda: f64) -> Result<Vec<GlueingScheme>> {
    if m1 == 0 || m2 == 0 {
        return Err(Error::ZeroRotationNumber);
    }
    if lambda == 0.0 || lambda == 1.0 {
        return Err(Error::Hypothesis(format!("lambda = {lambda} gives the curves themselves")));
    }
    let g = gcd(m1, m2);
    let columns = 2 * lcm(m1, m2) + 1;
    let (n1, n2) = (2 * m1, 2 * m2);
    let schemes = (0..pair_branch_count(m1, m2, lambda))
        .map(|k| {
            let family = family_of(m1, m2, lambda, k);
            let offset = if family == PairFamily::LambdaSecond { k - 2 * g } else { k };
            let first: Vec<u32> = (0..columns).map(|i| i % n1).collect();
            let second: Vec<u32> = (0..columns).map(|i| (offset + i) % n2 + n1).collect();
            let (upper, lower) = if family == PairFamily::LambdaSecond { (second, first) } else { (first, second) };
            GlueingScheme { upper, lower, family, k }
        })
        .collect();
    Ok(schemes)
}

/// Branch `k` of `E_λ(R_{m1}, R_{m2})`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairBranch {
    pub support: FrontSupport,
    pub family: PairFamily,
    pub k: u32,
    pub lambda: f64,
    /// Weights `(w1, w2)` with `ρ_h(θ) = w1 ρ1(θ) + w2 ρ2(θ + shift)`.
    pub weights: (f64, f64),
}

pub fn pair_branch(p1: &FourierSupport, p2: &FourierSupport, lambda: f64, k: u32) -> Result<PairBranch> {
    let (m1, m2) = (p1.m(), p2.m());
    let count = pair_branch_count(m1, m2, lambda);
    if k >= count {
        return Err(Error::BranchIndex { k: k as i64, lo: 0, hi: count as i64 - 1 });
    }
    let big_m = lcm(m1, m2);
    let g = gcd(m1, m2);
    let s1 = p1.series().lifted(big_m / m1);
    let s2 = p2.series().lifted(big_m / m2);
    let family = family_of(m1, m2, lambda, k);
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let (w1, w2, shift) = match family {
        PairFamily::WignerPair => (0.5, 0.5 * sign, k as i64),
        PairFamily::LambdaFirst => (lambda, sign * (1.0 - lambda), k as i64),
        PairFamily::LambdaSecond => (1.0 - lambda, sign * lambda, k as i64 - 2 * g as i64),
    };
    let series: TrigSeries = s1.scaled(w1).plus(&s2.shifted_half_turns(shift).scaled(w2));
    let descriptor =
        BranchDescriptor { kind: BranchKind::Pair { family, lambda, k }, sources: vec![p1.clone(), p2.clone()] };
    Ok(PairBranch { support: FrontSupport::new(series, 1, descriptor), family, k, lambda, weights: (w1, w2) })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairBranchReport {
    pub k: u32,
    pub family: PairFamily,
    pub length: f64,
    /// Length against `|w1|·(lcm/m1)·L1 + |w2|·(lcm/m2)·L2`: equality when
    /// the weights share a sign, upper bound otherwise.
    pub length_check: IdentityReport,
    /// Whether the published case for this `(λ, k)` has the same relation and weights.
    pub printed_case_matches: bool,
    pub rotation: Option<Rotation>,
    pub cusps: CuspReport,
    pub class: BranchClass,
    /// Both radius terms enter with the same sign.
    pub curved_same_side: bool,
    /// Regularity predicted by the same-side criterion.
    pub predicted_regular: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairInventory {
    pub m1: u32,
    pub m2: u32,
    pub lambda: f64,
    pub gcd: u32,
    pub lcm: u32,
    pub branches: Vec<PairBranchReport>,
    pub branch_count: usize,
    pub distinct_count: usize,
    pub regular_count: usize,
    pub expected_min_regular: usize,
    pub holds: bool,
    pub warnings: Vec<String>,
}

/// Relation and weights published for this `(λ, k)`: equality for even `k`
/// inside `(0,1)` and odd `k` outside; the first family weighs `L̂1` by `λ`,
/// the second by `1 − λ`.
fn printed_case(family: PairFamily, lambda: f64, k: u32) -> (Relation, f64, f64) {
    let even = k.is_multiple_of(2);
    let inner = lambda > 0.0 && lambda < 1.0;
    let relation = if even == inner { Relation::Equal } else { Relation::AtMost };
    let (a, b) = match family {
        PairFamily::WignerPair | PairFamily::LambdaFirst => (lambda, 1.0 - lambda),
        PairFamily::LambdaSecond => (1.0 - lambda, lambda),
    };
    (relation, a.abs(), b.abs())
}

/// Builds and checks every branch of `E_λ(R_{m1}, R_{m2})`.
pub fn pair_inventory(p1: &FourierSupport, p2: &FourierSupport, lambda: f64) -> Result<PairInventory> {
    if lambda == 0.0 || lambda == 1.0 {
        return Err(Error::Hypothesis(format!("lambda = {lambda} gives the curves themselves")));
    }
    let (m1, m2) = (p1.m(), p2.m());
    let g = gcd(m1, m2);
    let big_m = lcm(m1, m2);
    let l1 = (big_m / m1) as f64 * p1.length();
    let l2 = (big_m / m2) as f64 * p2.length();
    let mut branches = Vec::new();
    let mut supports: Vec<TrigSeries> = Vec::new();
    let mut warnings = Vec::new();
    for k in 0..pair_branch_count(m1, m2, lambda) {
        let b = pair_branch(p1, p2, lambda, k)?;
        let (w1, w2) = b.weights;
        let length = length_closed(&b.support);
        let same_sign = w1 * w2 > 0.0;
        let relation = if same_sign { Relation::Equal } else { Relation::AtMost };
        let rhs = w1.abs() * l1 + w2.abs() * l2;
        let mut terms = std::collections::BTreeMap::new();
        terms.insert("L_branch".to_string(), length);
        terms.insert("L1_lifted".to_string(), l1);
        terms.insert("L2_lifted".to_string(), l2);
        terms.insert("w1".to_string(), w1);
        terms.insert("w2".to_string(), w2);
        let family_label = match b.family {
            PairFamily::WignerPair => "wigner",
            PairFamily::LambdaFirst => "first",
            PairFamily::LambdaSecond => "second",
        };
        let parity = if k % 2 == 0 { "even" } else { "odd" };
        let length_check = IdentityReport::new(
            format!("pair_length_{family_label}_{parity}"),
            Variant::Recomputed,
            relation,
            MeasureMethod::ClosedForm,
            length,
            rhs,
            terms,
        );
        let (pr, pa, pb) = printed_case(b.family, lambda, k);
        let tol = 1e-15;
        let printed_case_matches = pr == relation && (pa - w1.abs()).abs() < tol && (pb - w2.abs()).abs() < tol;
        let cusps = find_cusps(&b.support);
        warnings.extend(cusps.warnings.iter().map(|w| format!("k{k}:{w}")));
        let class = BranchClass::of(&cusps);
        let curved_same_side = k % 2 == 0;
        let inner = lambda > 0.0 && lambda < 1.0;
        let predicted_regular = curved_same_side == inner;
        let scale = b.support.reference_scale();
        if supports.iter().any(|s| s.distance(b.support.series()) <= VANISHING_TOL * scale) {
            warnings.push(format!("k{k}:coincident_branch"));
        }
        supports.push(b.support.series().clone());
        branches.push(PairBranchReport {
            k,
            family: b.family,
            length,
            length_check,
            printed_case_matches,
            rotation: rotation_number(&b.support).ok(),
            cusps,
            class,
            curved_same_side,
            predicted_regular,
        });
    }
    let distinct_count = {
        let scale = p1.scale().max(p2.scale());
        let mut distinct: Vec<&TrigSeries> = Vec::new();
        for s in &supports {
            if !distinct.iter().any(|d| d.distance(s) <= VANISHING_TOL * scale) {
                distinct.push(s);
            }
        }
        distinct.len()
    };
    let regular_count = branches.iter().filter(|b| b.class.is_regular()).count();
    let expected_min_regular = if lambda == 0.5 { g as usize } else { 2 * g as usize };
    Ok(PairInventory {
        m1,
        m2,
        lambda,
        gcd: g,
        lcm: big_m,
        branch_count: branches.len(),
        distinct_count,
        regular_count,
        expected_min_regular,
        holds: regular_count >= expected_min_regular,
        branches,
        warnings,
    })
}
