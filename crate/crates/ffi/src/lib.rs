// Copyright 2026 the Rosettes Authors
// SPDX-License-Identifier: Apache-2.0

//! C ABI for the rosettes library.
//!
//! Curves and fronts are opaque heap handles released with the matching
//! `_free` function. Every fallible call returns a [`RosettesStatus`]; on
//! failure a message is kept per thread and read back with
//! [`rosettes_last_error_message`]. Strings returned by the library are
//! released with [`rosettes_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rosettes::measures::{
    closed_measures, constant_width_test_with, sampled_measures, verify_identity_i_with, verify_identity_ii_with,
    Adjudication, IdentityCheck,
};
use rosettes::render::{render_svg, Layer, Scene};
use rosettes::singularities::{antipodal_pairs, find_cusps, rotation_number};
use rosettes::spec::{parse_spec, print_spec};
use rosettes::{
    base_front, cwms_support, equidistant_branch, offset_support, pair_branch, sample_front, sms_support,
    validate_rosette, wigner_branch, Error, FourierSupport, FrontSupport, HarmonicTerm,
};

/// A rosette given by its support function.
pub struct RosettesRosette(FourierSupport);

/// A front derived from one or two rosettes.
pub struct RosettesFront(FrontSupport);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RosettesStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    NotRosette = 4,
    NonGeneric = 5,
    Hypothesis = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RosettesIdentity {
    /// Length against the areas of the curve, its double Wigner branch and its CWMS.
    WignerCwms = 0,
    /// Length against the areas of the curve and its SMS; odd rotation numbers only.
    Sms = 1,
    /// Area identity that vanishes on constant-width rosettes.
    ConstantWidth = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RosettesAdjudication {
    SingleForm = 0,
    PrintedConfirmed = 1,
    RecomputedConfirmed = 2,
    Ambiguous = 3,
    NeitherHolds = 4,
}

/// Closed-form residuals of an identity. `recomputed_residual` is NaN when
/// the identity has a single form.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RosettesIdentityResult {
    pub printed_residual: f64,
    pub recomputed_residual: f64,
    pub adjudication: RosettesAdjudication,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn fail(status: RosettesStatus, message: &str) -> RosettesStatus {
    set_error(message);
    status
}

fn status_of(e: &Error) -> RosettesStatus {
    match e {
        Error::Parse(_) => RosettesStatus::Parse,
        Error::NotRosette { .. } => RosettesStatus::NotRosette,
        Error::NonGeneric(_) => RosettesStatus::NonGeneric,
        Error::Hypothesis(_) => RosettesStatus::Hypothesis,
        _ => RosettesStatus::InvalidArgument,
    }
}

/// Runs `f`, converting library errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), RosettesStatus>) -> RosettesStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RosettesStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(RosettesStatus::Internal, "internal panic"),
    }
}

fn lib<T>(r: rosettes::Result<T>) -> Result<T, RosettesStatus> {
    r.map_err(|e| fail(status_of(&e), &e.to_string()))
}

unsafe fn get<'a, T>(p: *const T, what: &str) -> Result<&'a T, RosettesStatus> {
    p.as_ref().ok_or_else(|| fail(RosettesStatus::NullPointer, &format!("{what} is null")))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), RosettesStatus> {
    if out.is_null() {
        return Err(fail(RosettesStatus::NullPointer, &format!("{what} is null")));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_front(out: *mut *mut RosettesFront, front: FrontSupport) -> Result<(), RosettesStatus> {
    put(out, Box::into_raw(Box::new(RosettesFront(front))), "out")
}

fn owned_string(text: String) -> Result<*mut c_char, RosettesStatus> {
    CString::new(text).map(CString::into_raw).map_err(|_| fail(RosettesStatus::Internal, "string contains NUL"))
}

unsafe fn str_arg<'a>(text: *const c_char, what: &str) -> Result<&'a str, RosettesStatus> {
    if text.is_null() {
        return Err(fail(RosettesStatus::NullPointer, &format!("{what} is null")));
    }
    CStr::from_ptr(text).to_str().map_err(|_| fail(RosettesStatus::Parse, &format!("{what} is not UTF-8")))
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn rosettes_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds `p(θ) = a0 + Σ a[i] cos(n[i]θ/m) + b[i] sin(n[i]θ/m)` without a
/// sign check on the radius of curvature.
///
/// # Safety
/// `n`, `a` and `b` point to `len` readable values (or may be null when
/// `len` is 0); `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rosettes_rosette_new(
    m: u32,
    a0: f64,
    n: *const u32,
    a: *const f64,
    b: *const f64,
    len: usize,
    out: *mut *mut RosettesRosette,
) -> RosettesStatus {
    guard(|| {
        let terms = if len == 0 {
            Vec::new()
        } else {
            if n.is_null() || a.is_null() || b.is_null() {
                return Err(fail(RosettesStatus::NullPointer, "coefficient array is null"));
            }
            let (n, a, b) = (
                std::slice::from_raw_parts(n, len),
                std::slice::from_raw_parts(a, len),
                std::slice::from_raw_parts(b, len),
            );
            (0..len).map(|i| HarmonicTerm::new(n[i], a[i], b[i])).collect()
        };
        let p = lib(FourierSupport::new(m, a0, terms))?;
        put(out, Box::into_raw(Box::new(RosettesRosette(p))), "out")
    })
}

/// Parses a JSON curve file and checks that it is a rosette.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rosettes_rosette_from_json(
    text: *const c_char,
    out: *mut *mut RosettesRosette,
) -> RosettesStatus {
    guard(|| {
        let (p, _) = lib(parse_spec(str_arg(text, "text")?))?;
        put(out, Box::into_raw(Box::new(RosettesRosette(p))), "out")
    })
}

/// Writes the rosette as a JSON curve file. Release with `rosettes_string_free`.
///
/// # Safety
/// `rosette` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rosettes_rosette_to_json(
    rosette: *const RosettesRosette,
    out: *mut *mut c_char,
) -> RosettesStatus {
    guard(|| {
        let p = get(rosette, "rosette")?;
        put(out, owned_string(print_spec(&p.0))?, "out")
    })
}

/// # Safety
/// `rosette` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rosettes_rosette_free(rosette: *mut RosettesRosette) {
    if !rosette.is_null() {
        drop(Box::from_raw(rosette));
    }
}

/// Rotation number `m` of the rosette, or 0 for a null handle.
///
/// # Safety
/// `rosette` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rosettes_rosette_rotation_number(rosette: *const RosettesRosette) -> u32 {
    rosette.as_ref().map_or(0, |p| p.0.m())
}

/// Whether the radius of curvature is positive, with its minimum.
///
/// # Safety
/// `rosette` is a live handle; both outputs are writable.
#[no_mangle]
pub unsafe extern "C" fn rosettes_rosette_validate(
    rosette: *const RosettesRosette,
    is_rosette: *mut bool,
    min_rho: *mut f64,
) -> RosettesStatus {
    guard(|| {
        let report = validate_rosette(&get(rosette, "rosette")?.0);
        put(is_rosette, report.is_rosette, "is_rosette")?;
        put(min_rho, report.min_rho, "min_rho")
    })
}

/// Ordered and unordered counts of antipodal parameter pairs.
///
/// # Safety
/// `rosette` is a live handle; both outputs are writable.
#[no_mangle]
pub unsafe extern "C" fn rosettes_rosette_antipodal_count(
    rosette: *const RosettesRosette,
    ordered: *mut usize,
    distinct: *mut usize,
) -> RosettesStatus {
    guard(|| {
        let report = antipodal_pairs(&get(rosette, "rosette")?.0);
        if !report.is_generic() {
            return Err(fail(RosettesStatus::NonGeneric, &report.warnings.join(", ")));
        }
        put(ordered, report.count(), "ordered")?;
        put(distinct, report.distinct_count(), "distinct")
    })
}

fn adjudication(a: Adjudication) -> RosettesAdjudication {
    match a {
        Adjudication::SingleForm => RosettesAdjudication::SingleForm,
        Adjudication::PrintedConfirmed => RosettesAdjudication::PrintedConfirmed,
        Adjudication::RecomputedConfirmed => RosettesAdjudication::RecomputedConfirmed,
        Adjudication::Ambiguous => RosettesAdjudication::Ambiguous,
        Adjudication::NeitherHolds => RosettesAdjudication::NeitherHolds,
    }
}

/// Evaluates an identity in closed form and with an oracle at `samples` points.
///
/// # Safety
/// `rosette` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rosettes_rosette_identity(
    rosette: *const RosettesRosette,
    identity: RosettesIdentity,
    samples: usize,
    out: *mut RosettesIdentityResult,
) -> RosettesStatus {
    guard(|| {
        let p = &get(rosette, "rosette")?.0;
        let check: IdentityCheck = match identity {
            RosettesIdentity::WignerCwms => lib(verify_identity_i_with(p, samples))?,
            RosettesIdentity::Sms => lib(verify_identity_ii_with(p, samples))?,
            RosettesIdentity::ConstantWidth => lib(constant_width_test_with(p, samples))?.check,
        };
        let residual = |i: usize| check.variants.get(i).map_or(f64::NAN, |r| r.residual);
        put(
            out,
            RosettesIdentityResult {
                printed_residual: residual(0),
                recomputed_residual: residual(1),
                adjudication: adjudication(check.adjudication),
            },
            "out",
        )
    })
}

/// The rosette itself as a front.
///
/// # Safety
/// `rosette` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rosettes_front_base(
    rosette: *const RosettesRosette,
    out: *mut *mut RosettesFront,
) -> RosettesStatus {
    guard(|| put_front(out, base_front(&get(rosette, "rosette")?.0)))
}

/// Branch `k` of the Wigner caustic, `1 <= k <= m`.
///
/// # Safety
/// `rosette` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rosettes_front_wigner(
    rosette: *const RosettesRosette,
    k: u32,
    out: *mut *mut RosettesFront,
) -> RosettesStatus {
    guard(|| put_front(out, lib(wigner_branch(&get(rosette, "rosette")?.0, k))?))
}

/// Branch `k` of the affine `λ`-equidistant.
///
/// # Safety
/// `rosette` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rosettes_front_equidistant(
    rosette: *const RosettesRosette,
    lambda: f64,
    k: u32,
    out: *mut *mut RosettesFront,
) -> RosettesStatus {
    guard(|| put_front(out, lib(equidistant_branch(&get(rosette, "rosette")?.0, lambda, k))?))
}

/// # Safety
/// `rosette` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rosettes_front_cwms(
    rosette: *const RosettesRosette,
    out: *mut *mut RosettesFront,
) -> RosettesStatus {
    guard(|| put_front(out, cwms_support(&get(rosette, "rosette")?.0)))
}

/// # Safety
/// `rosette` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rosettes_front_sms(
    rosette: *const RosettesRosette,
    out: *mut *mut RosettesFront,
) -> RosettesStatus {
    guard(|| put_front(out, sms_support(&get(rosette, "rosette")?.0)))
}

/// Offset with support `p − alpha`.
///
/// # Safety
/// `rosette` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rosettes_front_offset(
    rosette: *const RosettesRosette,
    alpha: f64,
    out: *mut *mut RosettesFront,
) -> RosettesStatus {
    guard(|| put_front(out, offset_support(&get(rosette, "rosette")?.0, alpha)))
}

/// Branch `k` of the `λ`-equidistant of a pair of rosettes.
///
/// # Safety
/// `first` and `second` are live handles; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rosettes_front_pair(
    first: *const RosettesRosette,
    second: *const RosettesRosette,
    lambda: f64,
    k: u32,
    out: *mut *mut RosettesFront,
) -> RosettesStatus {
    guard(|| {
        let branch = lib(pair_branch(&get(first, "first")?.0, &get(second, "second")?.0, lambda, k))?;
        put_front(out, branch.support)
    })
}

/// # Safety
/// `front` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rosettes_front_free(front: *mut RosettesFront) {
    if !front.is_null() {
        drop(Box::from_raw(front));
    }
}

/// Closed-form length and oriented area, corrected for multiplicity.
///
/// # Safety
/// `front` is a live handle; both outputs are writable.
#[no_mangle]
pub unsafe extern "C" fn rosettes_front_measures(
    front: *const RosettesFront,
    length: *mut f64,
    area: *mut f64,
) -> RosettesStatus {
    guard(|| {
        let m = closed_measures(&get(front, "front")?.0);
        put(length, m.length, "length")?;
        put(area, m.oriented_area, "area")
    })
}

/// Polyline length and extrapolated shoelace area from `samples` points.
///
/// # Safety
/// `front` is a live handle; both outputs are writable.
#[no_mangle]
pub unsafe extern "C" fn rosettes_front_oracle_measures(
    front: *const RosettesFront,
    samples: usize,
    length: *mut f64,
    area: *mut f64,
) -> RosettesStatus {
    guard(|| {
        let m = lib(sampled_measures(&get(front, "front")?.0, samples))?;
        put(length, m.length, "length")?;
        put(area, m.oriented_area, "area")
    })
}

/// Number of cusps over one traversal. Fails with `NonGeneric` when a
/// zero of the radius is tangential.
///
/// # Safety
/// `front` is a live handle; `count` is writable.
#[no_mangle]
pub unsafe extern "C" fn rosettes_front_cusp_count(front: *const RosettesFront, count: *mut usize) -> RosettesStatus {
    guard(|| {
        let report = find_cusps(&get(front, "front")?.0);
        if !report.warnings.is_empty() {
            return Err(fail(RosettesStatus::NonGeneric, &report.warnings.join(", ")));
        }
        put(count, report.count, "count")
    })
}

/// Rotation number as `numerator / denominator` in lowest terms.
///
/// # Safety
/// `front` is a live handle; both outputs are writable.
#[no_mangle]
pub unsafe extern "C" fn rosettes_front_rotation_number(
    front: *const RosettesFront,
    numerator: *mut u32,
    denominator: *mut u32,
) -> RosettesStatus {
    guard(|| {
        let r = lib(rotation_number(&get(front, "front")?.0))?;
        put(numerator, r.numerator, "numerator")?;
        put(denominator, r.denominator, "denominator")
    })
}

/// Writes `n` points of one traversal into `xs` and `ys`.
///
/// # Safety
/// `front` is a live handle; `xs` and `ys` each have room for `n` values.
#[no_mangle]
pub unsafe extern "C" fn rosettes_front_sample(
    front: *const RosettesFront,
    n: usize,
    xs: *mut f64,
    ys: *mut f64,
) -> RosettesStatus {
    guard(|| {
        let samples = lib(sample_front(&get(front, "front")?.0, n))?;
        if xs.is_null() || ys.is_null() {
            return Err(fail(RosettesStatus::NullPointer, "output array is null"));
        }
        for (i, q) in samples.points.iter().enumerate() {
            xs.add(i).write(q.x);
            ys.add(i).write(q.y);
        }
        Ok(())
    })
}

/// Renders the rosette with the given comma-separated layers as SVG.
/// Release with `rosettes_string_free`.
///
/// # Safety
/// `rosette` is a live handle; `layers` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rosettes_render_svg(
    rosette: *const RosettesRosette,
    layers: *const c_char,
    out: *mut *mut c_char,
) -> RosettesStatus {
    guard(|| {
        let p = get(rosette, "rosette")?.0.clone();
        let layers =
            lib(str_arg(layers, "layers")?.split(',').map(str::parse::<Layer>).collect::<rosettes::Result<Vec<_>>>())?;
        let svg = lib(render_svg(&Scene::new(vec![p], layers)))?;
        put(out, owned_string(svg)?, "out")
    })
}

/// # Safety
/// `text` is null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rosettes_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}
