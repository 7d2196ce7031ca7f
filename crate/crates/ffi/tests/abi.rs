// Copyright 2026 the Rosettes Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;
use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use rosettes_ffi::*;

fn rosette_m2() -> *mut RosettesRosette {
    let (n, a, b) = ([1u32, 4], [4.0, 0.0], [0.0, 1.0]);
    let mut out = ptr::null_mut();
    let status = unsafe { rosettes_rosette_new(2, 10.0, n.as_ptr(), a.as_ptr(), b.as_ptr(), 2, &mut out) };
    assert_eq!(status, RosettesStatus::Ok);
    out
}

fn last_error() -> String {
    let p = rosettes_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn measures_of_a_rosette_and_its_wigner_branch() {
    unsafe {
        let r = rosette_m2();
        let mut base = ptr::null_mut();
        assert_eq!(rosettes_front_base(r, &mut base), RosettesStatus::Ok);
        let (mut length, mut area) = (0.0, 0.0);
        assert_eq!(rosettes_front_measures(base, &mut length, &mut area), RosettesStatus::Ok);
        assert!((length - 40.0 * PI).abs() < 1e-9);
        assert!((area - 209.0 * PI).abs() < 1e-9);
        let (mut ol, mut oa) = (0.0, 0.0);
        assert_eq!(rosettes_front_oracle_measures(base, 1 << 14, &mut ol, &mut oa), RosettesStatus::Ok);
        assert!((ol - length).abs() / length < 1e-6);

        let mut w = ptr::null_mut();
        assert_eq!(rosettes_front_wigner(r, 1, &mut w), RosettesStatus::Ok);
        let mut cusps = 0usize;
        assert_eq!(rosettes_front_cusp_count(w, &mut cusps), RosettesStatus::Ok);
        assert_eq!(cusps, 2);
        let (mut num, mut den) = (0u32, 0u32);
        assert_eq!(rosettes_front_rotation_number(w, &mut num, &mut den), RosettesStatus::Ok);
        assert_eq!((num, den), (2, 1));

        let mut xs = vec![0.0; 64];
        let mut ys = vec![0.0; 64];
        assert_eq!(rosettes_front_sample(base, 64, xs.as_mut_ptr(), ys.as_mut_ptr()), RosettesStatus::Ok);
        assert!(xs.iter().chain(&ys).all(|v| v.is_finite()));

        rosettes_front_free(w);
        rosettes_front_free(base);
        rosettes_rosette_free(r);
    }
}

#[test]
fn every_front_constructor() {
    unsafe {
        let r = rosette_m2();
        let mut f = ptr::null_mut();
        assert_eq!(rosettes_front_equidistant(r, 0.3, 2, &mut f), RosettesStatus::Ok);
        rosettes_front_free(f);
        assert_eq!(rosettes_front_cwms(r, &mut f), RosettesStatus::Ok);
        rosettes_front_free(f);
        assert_eq!(rosettes_front_sms(r, &mut f), RosettesStatus::Ok);
        rosettes_front_free(f);
        assert_eq!(rosettes_front_offset(r, -1.5, &mut f), RosettesStatus::Ok);
        rosettes_front_free(f);
        assert_eq!(rosettes_front_pair(r, r, 0.5, 1, &mut f), RosettesStatus::Ok);
        rosettes_front_free(f);
        rosettes_rosette_free(r);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    unsafe {
        let r = rosette_m2();
        let mut f = ptr::null_mut();
        assert_eq!(rosettes_front_wigner(r, 7, &mut f), RosettesStatus::InvalidArgument);
        assert!(f.is_null());
        assert!(last_error().contains("branch index"));
        assert_eq!(rosettes_front_wigner(ptr::null(), 1, &mut f), RosettesStatus::NullPointer);
        assert_eq!(rosettes_front_wigner(r, 1, ptr::null_mut()), RosettesStatus::NullPointer);

        let mut out = ptr::null_mut();
        let bad = CString::new("{\"m\":1,").unwrap();
        assert_eq!(rosettes_rosette_from_json(bad.as_ptr(), &mut out), RosettesStatus::Parse);
        let concave = CString::new(r#"{"m":1,"a0":1,"terms":[{"n":3,"a":1}]}"#).unwrap();
        assert_eq!(rosettes_rosette_from_json(concave.as_ptr(), &mut out), RosettesStatus::NotRosette);
        assert!(last_error().contains("not a rosette"));

        let mut result = RosettesIdentityResult {
            printed_residual: 0.0,
            recomputed_residual: 0.0,
            adjudication: RosettesAdjudication::Ambiguous,
        };
        assert_eq!(
            rosettes_rosette_identity(r, RosettesIdentity::Sms, 1 << 12, &mut result),
            RosettesStatus::Hypothesis
        );

        assert_eq!(
            rosettes_rosette_new(0, 1.0, ptr::null(), ptr::null(), ptr::null(), 0, &mut out),
            RosettesStatus::InvalidArgument
        );
        rosettes_rosette_free(r);
        rosettes_rosette_free(ptr::null_mut());
        rosettes_front_free(ptr::null_mut());
        rosettes_string_free(ptr::null_mut());
    }
}

#[test]
fn json_round_trip_and_validation() {
    unsafe {
        let r = rosette_m2();
        let mut text = ptr::null_mut();
        assert_eq!(rosettes_rosette_to_json(r, &mut text), RosettesStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(rosettes_rosette_from_json(text, &mut back), RosettesStatus::Ok);
        rosettes_string_free(text);
        assert_eq!(rosettes_rosette_rotation_number(back), 2);
        let (mut ok, mut min_rho) = (false, 0.0);
        assert_eq!(rosettes_rosette_validate(back, &mut ok, &mut min_rho), RosettesStatus::Ok);
        assert!(ok && min_rho > 0.0);
        let (mut ordered, mut distinct) = (0usize, 0usize);
        assert_eq!(rosettes_rosette_antipodal_count(back, &mut ordered, &mut distinct), RosettesStatus::Ok);
        assert_eq!((ordered, distinct), (4, 2));
        rosettes_rosette_free(back);
        rosettes_rosette_free(r);
    }
}

#[test]
fn identity_adjudication() {
    unsafe {
        let r = rosette_m2();
        let mut result = RosettesIdentityResult {
            printed_residual: 0.0,
            recomputed_residual: 0.0,
            adjudication: RosettesAdjudication::Ambiguous,
        };
        assert_eq!(
            rosettes_rosette_identity(r, RosettesIdentity::WignerCwms, 1 << 14, &mut result),
            RosettesStatus::Ok
        );
        assert_eq!(result.adjudication, RosettesAdjudication::RecomputedConfirmed);
        assert!(result.recomputed_residual < 1e-9);
        assert!(result.printed_residual > 1e-6);
        rosettes_rosette_free(r);
    }
}

#[test]
fn svg_is_deterministic() {
    unsafe {
        let r = rosette_m2();
        let layers = CString::new("base,wigner:1,cwms").unwrap();
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(rosettes_render_svg(r, layers.as_ptr(), &mut a), RosettesStatus::Ok);
        assert_eq!(rosettes_render_svg(r, layers.as_ptr(), &mut b), RosettesStatus::Ok);
        assert_eq!(CStr::from_ptr(a), CStr::from_ptr(b));
        rosettes_string_free(a);
        rosettes_string_free(b);
        let bad = CString::new("base,ellipse").unwrap();
        assert_eq!(rosettes_render_svg(r, bad.as_ptr(), &mut a), RosettesStatus::Parse);
        rosettes_rosette_free(r);
    }
}

#[test]
fn header_declares_the_api_and_compiles() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/rosettes.h")).unwrap();
    for name in [
        "rosettes_last_error_message",
        "rosettes_rosette_new",
        "rosettes_rosette_from_json",
        "rosettes_rosette_to_json",
        "rosettes_rosette_free",
        "rosettes_rosette_validate",
        "rosettes_rosette_identity",
        "rosettes_rosette_antipodal_count",
        "rosettes_front_base",
        "rosettes_front_wigner",
        "rosettes_front_equidistant",
        "rosettes_front_cwms",
        "rosettes_front_sms",
        "rosettes_front_offset",
        "rosettes_front_pair",
        "rosettes_front_measures",
        "rosettes_front_oracle_measures",
        "rosettes_front_cusp_count",
        "rosettes_front_rotation_number",
        "rosettes_front_sample",
        "rosettes_front_free",
        "rosettes_render_svg",
        "rosettes_string_free",
    ] {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }

    let Ok(cc) = Command::new("cc").arg("--version").output() else { return };
    if !cc.status.success() {
        return;
    }
    let tmp = tempfile::tempdir().unwrap();
    let source = tmp.path().join("use.c");
    std::fs::write(
        &source,
        r#"#include "rosettes.h"
int check(void) {
    RosettesRosette *r = 0;
    RosettesFront *f = 0;
    double length = 0, area = 0;
    if (rosettes_rosette_new(1, 1.0, 0, 0, 0, 0, &r) != ROSETTES_STATUS_OK) return 1;
    if (rosettes_front_base(r, &f) != ROSETTES_STATUS_OK) return 2;
    rosettes_front_measures(f, &length, &area);
    rosettes_front_free(f);
    rosettes_rosette_free(r);
    return length > 0 ? 0 : 3;
}
"#,
    )
    .unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(dir.join("include"))
        .arg(&source)
        .status()
        .unwrap();
    assert!(status.success());

    let exe = std::env::current_exe().unwrap();
    let archive = exe.parent().and_then(Path::parent).map(|d| d.join("librosettes_ffi.a"));
    let Some(archive) = archive.filter(|a| a.exists()) else { return };
    let main = tmp.path().join("main.c");
    std::fs::write(&main, "int check(void);\nint main(void) { return check(); }\n").unwrap();
    let program = tmp.path().join("use");
    let status = Command::new("cc")
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&source)
        .arg(&main)
        .arg(&archive)
        .args(["-lm", "-lpthread", "-ldl", "-o"])
        .arg(&program)
        .status()
        .unwrap();
    assert!(status.success());
    assert!(Command::new(&program).status().unwrap().success());
}
