// Copyright 2026 the Rosettes Authors
// SPDX-License-Identifier: Apache-2.0

//! Reproducible random rosettes for property checks.
//!
//! Every harmonic up to `n_max` gets a nonzero coefficient of amplitude
//! about `1/n`, and `a0` is chosen above the curvature bound so positivity
//! of the radius is proved without sampling.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::rosette::{validate_rosette, FourierSupport};
use crate::trig::HarmonicTerm;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_term<R: Rng + ?Sized>(rng: &mut R, n: u32) -> HarmonicTerm {
    let amplitude = rng.gen_range(0.2..1.0) / n as f64;
    let phase: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    HarmonicTerm::new(n, amplitude * phase.cos(), amplitude * phase.sin())
}

fn assemble<R: Rng + ?Sized>(rng: &mut R, m: u32, terms: Vec<HarmonicTerm>) -> FourierSupport {
    let m2 = (m as f64).powi(2);
    let bound: f64 = terms.iter().map(|t| ((t.n as f64).powi(2) - m2).abs() / m2 * t.norm()).sum();
    let a0 = (bound * rng.gen_range(1.05..2.0)).max(rng.gen_range(0.5..1.5));
    FourierSupport::new(m, a0, terms).expect("generated terms are valid")
}

/// Rosette of rotation number `m` with harmonics `1..=n_max`.
pub fn random_rosette<R: Rng + ?Sized>(rng: &mut R, m: u32, n_max: u32) -> FourierSupport {
    let terms = (1..=n_max).map(|n| random_term(rng, n)).collect();
    assemble(rng, m, terms)
}

/// Constant-width rosette: odd harmonics only.
pub fn random_constant_width<R: Rng + ?Sized>(rng: &mut R, m: u32, n_max: u32) -> FourierSupport {
    let terms = (1..=n_max).filter(|n| n % 2 == 1).map(|n| random_term(rng, n)).collect();
    assemble(rng, m, terms)
}

/// Centrally symmetric oval: even harmonics only, `m = 1`.
pub fn random_symmetric_oval<R: Rng + ?Sized>(rng: &mut R, n_max: u32) -> FourierSupport {
    let terms = (2..=n_max.max(2)).filter(|n| n % 2 == 0).map(|n| random_term(rng, n)).collect();
    assemble(rng, 1, terms)
}

/// Draws from `random_rosette` until validation reports no genericity
/// warning. Low harmonic counts can be degenerate for every draw (a single
/// harmonic `n = m` only translates a circle), so `n_max` grows by one after
/// every eight rejected draws.
pub fn random_generic_rosette<R: Rng + ?Sized>(rng: &mut R, m: u32, n_max: u32) -> FourierSupport {
    let mut n_max = n_max.max(1);
    for attempt in 1.. {
        let p = random_rosette(rng, m, n_max);
        if validate_rosette(&p).genericity_warnings.is_empty() {
            return p;
        }
        if attempt % 8 == 0 {
            n_max += 1;
        }
    }
    unreachable!()
}

/// A generic rosette with `m` and `n_max` drawn from the given ranges.
pub fn random_generic_in<R: Rng + ?Sized>(
    rng: &mut R,
    m_range: std::ops::RangeInclusive<u32>,
    n_range: std::ops::RangeInclusive<u32>,
) -> FourierSupport {
    let m = rng.gen_range(m_range);
    let n_max = rng.gen_range(n_range);
    random_generic_rosette(rng, m, n_max)
}
