// Copyright 2026 the Rosettes Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("rotation number must be at least 1")]
    ZeroRotationNumber,
    #[error("harmonic index must be at least 1")]
    ZeroHarmonic,
    #[error("harmonic index {0} appears more than once")]
    DuplicateHarmonic(u32),
    #[error("non-finite coefficient")]
    NonFinite,
    #[error("branch index {k} outside {lo}..={hi}")]
    BranchIndex { k: i64, lo: i64, hi: i64 },
    #[error("sample count {0} is below the minimum of 16")]
    TooFewSamples(usize),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a rosette: minimum radius of curvature {min_rho} at theta = {theta}")]
    NotRosette { min_rho: f64, theta: f64 },
    #[error("non-generic input: {0}")]
    NonGeneric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
