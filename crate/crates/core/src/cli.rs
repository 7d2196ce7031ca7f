// Copyright 2026 the Rosettes Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 the curve is not a
//! rosette, 3 a non-generic degeneracy prevented a requested count.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::derived::{
    base_front, branch_range, cwms_support, equidistant_branch, offset_support, sample_front, sms_support,
    wigner_branch, BranchKind, FrontSupport,
};
use crate::error::Error;
use crate::measures::{
    branch_length_theorem_with, closed_measures, constant_width_test_with, isoperimetric_defect, oracle_measures,
    verify_identity_i_with, verify_identity_ii_with, Measure, ORACLE_SAMPLES,
};
use crate::pair::{maximal_glueing_schemes, pair_branch, pair_inventory, parallel_arc_set};
use crate::render::{render_svg, Layer, Scene, SceneSpec, RENDER_SAMPLES};
use crate::report::to_report;
use crate::rosette::{FourierSupport, ValidationReport};
use crate::singularities::{
    antipodal_pairs, classify_branches, find_cusps, rotation_number, sampled_rotation_number, BranchClass, CuspReport,
};
use crate::spec::parse_spec;
use crate::trig::HarmonicTerm;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_ROSETTE: i32 = 2;
pub const EXIT_NON_GENERIC: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "rosettes", version, about = "Equidistants, caustics and measure sets of rosettes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a curve file describes a rosette.
    Validate { spec: PathBuf },
    /// Length and oriented area, closed form and sampled.
    Measure {
        spec: PathBuf,
        #[arg(long, default_value_t = ORACLE_SAMPLES)]
        samples: usize,
    },
    /// One branch of the affine equidistant.
    Branch {
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = ORACLE_SAMPLES)]
        samples: usize,
    },
    /// Wigner caustic branches (all of them unless --k is given).
    Wigner {
        spec: PathBuf,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value_t = ORACLE_SAMPLES)]
        samples: usize,
    },
    /// Constant width measure set.
    Cwms {
        spec: PathBuf,
        #[arg(long, default_value_t = ORACLE_SAMPLES)]
        samples: usize,
    },
    /// Spherical measure set.
    Sms {
        spec: PathBuf,
        #[arg(long, default_value_t = ORACLE_SAMPLES)]
        samples: usize,
    },
    /// Parallel curve at signed distance alpha.
    Offset {
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = ORACLE_SAMPLES)]
        samples: usize,
    },
    /// Length, constant-width and isoperimetric identities.
    Identities {
        spec: PathBuf,
        #[arg(long, default_value_t = ORACLE_SAMPLES)]
        samples: usize,
    },
    /// Antipodal pairs.
    Antipodal { spec: PathBuf },
    /// Branches of the equidistant of two rosettes.
    Pair {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Draw curves and fronts as SVG.
    Render {
        /// Curve files; the second one is used by pair layers.
        specs: Vec<PathBuf>,
        /// Comma-separated layers: base, wigner:K, equidistant:L:K, cwms, sms, offset:A, pair:L:K.
        #[arg(long, default_value = "base", allow_hyphen_values = true)]
        layers: String,
        /// Scene file; replaces the curve arguments and --layers.
        #[arg(long)]
        scene: Option<PathBuf>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        mark_cusps: bool,
        /// Output path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotRosette { .. } => EXIT_NOT_ROSETTE,
            Error::NonGeneric(_) => EXIT_NON_GENERIC,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: String) -> Failure {
    Failure { code: EXIT_USAGE, message }
}

fn load(path: &Path) -> Result<(FourierSupport, ValidationReport), Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_spec(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

#[derive(Serialize)]
struct FrontReport {
    kind: BranchKind,
    period_index: u32,
    multiplicity: u8,
    c0: f64,
    terms: Vec<HarmonicTerm>,
    is_point: bool,
    closed_form: Measure,
    oracle: Measure,
    samples: usize,
    cusps: CuspReport,
    class: BranchClass,
    rotation_number: Option<String>,
    sampled_rotation_number: Option<f64>,
}

fn front_report(h: &FrontSupport, samples: usize) -> Result<FrontReport, Failure> {
    let s = sample_front(h, samples)?;
    let cusps = find_cusps(h);
    Ok(FrontReport {
        kind: h.descriptor().kind,
        period_index: h.period_index(),
        multiplicity: h.multiplicity(),
        c0: h.c0(),
        terms: h.terms().to_vec(),
        is_point: h.is_point(),
        closed_form: closed_measures(h),
        oracle: oracle_measures(&s),
        samples,
        class: BranchClass::of(&cusps),
        cusps,
        rotation_number: rotation_number(h).ok().map(|r| r.to_string()),
        sampled_rotation_number: sampled_rotation_number(&s),
    })
}

#[derive(Serialize)]
struct MeasureReport {
    validation: ValidationReport,
    base: FrontReport,
    isoperimetric_defect: Option<f64>,
}

#[derive(Serialize)]
struct HypothesisViolation {
    hypothesis_violation: String,
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let emit = |out: &mut dyn Write, text: String| -> Result<(), Failure> {
        out.write_all(text.as_bytes()).map_err(|e| usage(e.to_string()))
    };
    match cli.command {
        Command::Validate { spec } => {
            let text = std::fs::read_to_string(&spec).map_err(|e| usage(format!("{}: {e}", spec.display())))?;
            let p = crate::spec::RosetteSpec::from_text(&text)?.to_support()?;
            let report = crate::rosette::validate_rosette(&p);
            emit(out, to_report(&report))?;
            Ok(if report.is_rosette { EXIT_OK } else { EXIT_NOT_ROSETTE })
        }
        Command::Measure { spec, samples } => {
            let (p, validation) = load(&spec)?;
            let report = MeasureReport {
                validation,
                base: front_report(&base_front(&p), samples)?,
                isoperimetric_defect: isoperimetric_defect(&p).ok(),
            };
            emit(out, to_report(&report))?;
            Ok(EXIT_OK)
        }
        Command::Branch { spec, lambda, k, samples } => {
            let (p, _) = load(&spec)?;
            emit(out, to_report(&front_report(&equidistant_branch(&p, lambda, k)?, samples)?))?;
            Ok(EXIT_OK)
        }
        Command::Wigner { spec, k, samples } => {
            let (p, _) = load(&spec)?;
            match k {
                Some(k) => {
                    emit(out, to_report(&front_report(&wigner_branch(&p, k)?, samples)?))?;
                    Ok(EXIT_OK)
                }
                None => {
                    #[derive(Serialize)]
                    struct WignerReport {
                        branches: Vec<FrontReport>,
                        classification: crate::singularities::BranchSummary,
                    }
                    let branches = branch_range(p.m(), 0.5)
                        .map(|k| front_report(&wigner_branch(&p, k)?, samples))
                        .collect::<Result<Vec<_>, _>>()?;
                    let classification = classify_branches(&p, 0.5)?;
                    let code = if classification.warnings.is_empty() { EXIT_OK } else { EXIT_NON_GENERIC };
                    emit(out, to_report(&WignerReport { branches, classification }))?;
                    Ok(code)
                }
            }
        }
        Command::Cwms { spec, samples } => {
            let (p, _) = load(&spec)?;
            emit(out, to_report(&front_report(&cwms_support(&p), samples)?))?;
            Ok(EXIT_OK)
        }
        Command::Sms { spec, samples } => {
            let (p, _) = load(&spec)?;
            emit(out, to_report(&front_report(&sms_support(&p), samples)?))?;
            Ok(EXIT_OK)
        }
        Command::Offset { spec, alpha, samples } => {
            let (p, _) = load(&spec)?;
            emit(out, to_report(&front_report(&offset_support(&p, alpha), samples)?))?;
            Ok(EXIT_OK)
        }
        Command::Identities { spec, samples } => {
            let (p, _) = load(&spec)?;
            let mut report = serde_json::Map::new();
            let put = |map: &mut serde_json::Map<String, serde_json::Value>, key: &str, v: serde_json::Value| {
                map.insert(key.to_string(), v);
            };
            put(&mut report, "isoperimetric_wigner_cwms", value(&verify_identity_i_with(&p, samples)?));
            put(&mut report, "constant_width", value(&constant_width_test_with(&p, samples)?));
            match verify_identity_ii_with(&p, samples) {
                Ok(c) => put(&mut report, "isoperimetric_sms", value(&c)),
                Err(Error::Hypothesis(msg)) => {
                    put(&mut report, "isoperimetric_sms", value(&HypothesisViolation { hypothesis_violation: msg }))
                }
                Err(e) => return Err(e.into()),
            }
            if let Ok(d) = isoperimetric_defect(&p) {
                put(&mut report, "isoperimetric_defect", value(&d));
            }
            let mut lengths = Vec::new();
            for lambda in [0.5, 0.3, 1.7] {
                for k in branch_range(p.m(), lambda) {
                    lengths.push(branch_length_theorem_with(&p, lambda, k, samples)?);
                }
            }
            put(&mut report, "branch_lengths", value(&lengths));
            emit(out, to_report(&report))?;
            Ok(EXIT_OK)
        }
        Command::Antipodal { spec } => {
            let (p, _) = load(&spec)?;
            #[derive(Serialize)]
            struct AntipodalOut {
                count: usize,
                distinct_count: usize,
                lower_bound: u32,
                report: crate::singularities::AntipodalReport,
            }
            let report = antipodal_pairs(&p);
            let code = if report.is_generic() { EXIT_OK } else { EXIT_NON_GENERIC };
            let m = p.m();
            emit(
                out,
                to_report(&AntipodalOut {
                    count: report.count(),
                    distinct_count: report.distinct_count(),
                    lower_bound: 2 * m.div_ceil(2),
                    report,
                }),
            )?;
            Ok(code)
        }
        Command::Pair { first, second, lambda, k } => {
            let (p1, _) = load(&first)?;
            let (p2, _) = load(&second)?;
            match k {
                Some(k) => {
                    let b = pair_branch(&p1, &p2, lambda, k)?;
                    emit(out, to_report(&front_report(&b.support, ORACLE_SAMPLES)?))?;
                    Ok(EXIT_OK)
                }
                None => {
                    #[derive(Serialize)]
                    struct PairOut {
                        arcs: crate::pair::ParallelArcSet,
                        schemes: Vec<crate::pair::GlueingScheme>,
                        inventory: crate::pair::PairInventory,
                    }
                    let inventory = pair_inventory(&p1, &p2, lambda)?;
                    let code = if inventory.warnings.is_empty() { EXIT_OK } else { EXIT_NON_GENERIC };
                    let report = PairOut {
                        arcs: parallel_arc_set(p1.m(), p2.m())?,
                        schemes: maximal_glueing_schemes(p1.m(), p2.m(), lambda)?,
                        inventory,
                    };
                    emit(out, to_report(&report))?;
                    Ok(code)
                }
            }
        }
        Command::Render { specs, layers, scene, samples, mark_cusps, out: path } => {
            let mut resolved = match scene {
                Some(scene_path) => {
                    let text = std::fs::read_to_string(&scene_path)
                        .map_err(|e| usage(format!("{}: {e}", scene_path.display())))?;
                    let spec: SceneSpec = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
                    let dir = scene_path.parent().unwrap_or(Path::new("."));
                    let curves = spec
                        .curves
                        .iter()
                        .map(|c| load(&dir.join(c)).map(|(p, _)| p))
                        .collect::<Result<Vec<_>, _>>()?;
                    let layers = spec.layers.iter().map(|l| l.parse()).collect::<Result<Vec<Layer>, _>>()?;
                    Scene {
                        curves,
                        layers,
                        samples: spec.samples.unwrap_or(RENDER_SAMPLES),
                        stroke_width: spec.stroke_width.unwrap_or(1.0),
                        mark_cusps: spec.mark_cusps,
                    }
                }
                None => {
                    if specs.is_empty() {
                        return Err(usage("render needs a curve file or --scene".into()));
                    }
                    let curves = specs.iter().map(|s| load(s).map(|(p, _)| p)).collect::<Result<Vec<_>, _>>()?;
                    let layers = layers.split(',').map(str::parse).collect::<Result<Vec<Layer>, _>>()?;
                    Scene::new(curves, layers)
                }
            };
            if let Some(n) = samples {
                resolved.samples = n;
            }
            resolved.mark_cusps |= mark_cusps;
            let svg = render_svg(&resolved)?;
            match path {
                Some(p) => std::fs::write(&p, svg).map_err(|e| usage(format!("{}: {e}", p.display())))?,
                None => emit(out, svg)?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn value<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("report serializes")
}

/// Parses `argv` (including the program name), runs the command and
/// returns the exit code.
pub fn run_command<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match run(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
