// Copyright 2026 the Rosettes Authors
// SPDX-License-Identifier: Apache-2.0

//! Rosettes described by Fourier-series support functions.
//!
//! The crate builds equidistants, Wigner caustic branches, constant width and
//! spherical measure sets, and offsets of rosettes in coefficient space, and
//! measures them both in closed form and with an independent sampling oracle.

pub mod cli;
pub mod derived;
pub mod error;
pub mod measures;
pub mod pair;
pub mod random;
pub mod render;
pub mod report;
pub mod rosette;
pub mod singularities;
pub mod spec;
pub mod trig;

pub use derived::{
    base_front, cwms_support, equidistant_branch, offset_support, sample_front, shift_support, sms_support,
    wigner_branch, BranchDescriptor, BranchKind, CurveSamples, FrontSupport,
};
pub use error::{Error, Result};
pub use measures::{
    area_closed, branch_length_theorem, constant_width_test, isoperimetric_defect, length_closed, oracle_measures,
    verify_identity_i, verify_identity_ii, IdentityCheck, IdentityReport, Measure, MeasureMethod,
};
pub use pair::{maximal_glueing_schemes, pair_branch, pair_inventory, parallel_arc_set, PairFamily};
pub use rosette::{
    eval_support, point_at, radius_of_curvature, validate_rosette, FourierSupport, PlanePoint, ValidationReport,
};
pub use singularities::{antipodal_pairs, classify_branches, find_cusps, rotation_number, CuspReport};
pub use trig::{HarmonicTerm, TrigSeries};
