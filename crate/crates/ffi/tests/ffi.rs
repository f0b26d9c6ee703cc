use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use starlattice_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(sl_last_error()) }.to_string_lossy().into_owned()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_string_lossy().into_owned();
    sl_string_free(s);
    out
}

fn fixture(name: &str) -> CString {
    let f = starlattice::fixtures::get(name).unwrap();
    CString::new(f.contents).unwrap()
}

#[test]
fn algebra_round_trip_and_verify() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(sl_algebra_from_json(fixture("m2r.json").as_ptr(), &mut a), SlStatus::Ok);
        assert_eq!(sl_algebra_dim(a), 4);
        let mut json = ptr::null_mut();
        let mut passed = false;
        assert_eq!(sl_algebra_verify(a, 3, 100, 100, 1, &mut json, &mut passed), SlStatus::Ok);
        assert!(passed);
        let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(v["suite"], "verify-algebra");

        let x = [1.0, 0.0, 0.0, -3.0];
        let mut norm = 0.0;
        assert_eq!(sl_algebra_norm(a, x.as_ptr(), 4, &mut norm), SlStatus::Ok);
        assert!((norm - 3.0).abs() < 1e-9);
        assert_eq!(sl_algebra_norm(a, x.as_ptr(), 3, &mut norm), SlStatus::InvalidInput);

        let mut json = ptr::null_mut();
        assert_eq!(sl_algebra_decompose(a, 1, &mut json), SlStatus::Ok);
        assert!(take(json).contains("\"blocks\""));
        sl_algebra_free(a);
    }
}

#[test]
fn broken_algebra_reports_failure_not_error() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(sl_algebra_from_json(fixture("broken-assoc.json").as_ptr(), &mut a), SlStatus::Ok);
        let mut json = ptr::null_mut();
        let mut passed = true;
        assert_eq!(sl_algebra_verify(a, 0, 10, 10, 1, &mut json, &mut passed), SlStatus::Ok);
        assert!(!passed);
        sl_string_free(json);
        sl_algebra_free(a);
    }
}

#[test]
fn errors_map_to_status_codes() {
    unsafe {
        let mut a = ptr::null_mut();
        let bad = CString::new("{ nope").unwrap();
        assert_eq!(sl_algebra_from_json(bad.as_ptr(), &mut a), SlStatus::InvalidInput);
        assert!(last_error().contains("line 1"));
        assert!(a.is_null());
        assert_eq!(sl_algebra_from_json(ptr::null(), &mut a), SlStatus::NullPointer);
        assert_eq!(sl_algebra_dim(ptr::null()), 0);
        let invalid = [0xffu8, 0];
        assert_eq!(sl_algebra_from_json(invalid.as_ptr().cast(), &mut a), SlStatus::InvalidUtf8);

        let mut d = SlDeficit::default();
        assert_eq!(sl_tensor_deficit(SlRing::Quaternion, 4, 4, &mut d), SlStatus::InvalidInput);
        assert_eq!(sl_tensor_deficit(SlRing::Real, 2, 2, &mut d), SlStatus::Ok);
        assert_eq!(last_error(), "");
        assert_eq!((d.sym_dim, d.span_dim, d.deficit), (10, 9, 1));
        assert_eq!(sl_tensor_deficit(SlRing::Complex, 2, 2, &mut d), SlStatus::Ok);
        assert_eq!(d.deficit, 0);
    }
}

#[test]
fn lattices_and_subspaces() {
    unsafe {
        let mut l = ptr::null_mut();
        assert_eq!(sl_lattice_from_json(fixture("mo2.json").as_ptr(), &mut l), SlStatus::Ok);
        assert_eq!(sl_lattice_size(l), 6);
        let mut json = ptr::null_mut();
        let mut passed = true;
        assert_eq!(sl_lattice_verify(l, &mut json, &mut passed), SlStatus::Ok);
        assert!(!passed, "MO2 is not distributive");
        assert!(take(json).contains("distributive"));
        sl_lattice_free(l);

        let mut json = ptr::null_mut();
        assert_eq!(sl_subspace_verify(SlRing::Complex, 2, 30, 1, &mut json, &mut passed), SlStatus::Ok);
        assert!(passed);
        sl_string_free(json);
        assert_eq!(sl_subspace_verify(SlRing::Real, 0, 30, 1, &mut json, &mut passed), SlStatus::InvalidInput);
    }
}

#[test]
fn header_is_current() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/starlattice.h")).unwrap();
    for f in ["sl_algebra_from_json", "sl_lattice_verify", "sl_string_free", "SL_STATUS_INVALID_INPUT"] {
        assert!(header.contains(f), "{f}");
    }
}

/// Compiles and runs a small C program against the header and the static
/// library built alongside this test.
#[test]
fn c_program_links_and_runs() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let tmp = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let profile_dir = tmp.parent().unwrap().join(if cfg!(debug_assertions) { "debug" } else { "release" });
    let lib = profile_dir.join("libstarlattice_ffi.a");
    if !lib.exists() {
        eprintln!("skipping: {} not built", lib.display());
        return;
    }
    let exe = tmp.join("ffi_smoke");
    let status = Command::new("cc")
        .arg(dir.join("tests/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status();
    let Ok(status) = status else {
        eprintln!("skipping: no C compiler");
        return;
    };
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "deficit 10 9 1");
}
