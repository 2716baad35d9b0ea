use std::ffi::{CStr, CString};
use std::ptr;

use wgalg_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = wg_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn a3_algebra_roundtrip_through_the_handle() {
    let mut alg = ptr::null_mut();
    unsafe {
        assert_eq!(wg_algebra_new(c("A3").as_ptr(), 0, 0, &mut alg), WgStatus::Ok);
        let mut dim = 0usize;
        assert_eq!(wg_algebra_dim(alg, &mut dim), WgStatus::Ok);
        assert_eq!(dim, 204);
        let (mut rad, mut ss) = (0usize, 0usize);
        assert_eq!(wg_algebra_radical(alg, &mut rad, &mut ss), WgStatus::Ok);
        assert_eq!(ss, 24);
        assert_eq!(rad + ss, dim);
        let mut pass = false;
        let mut report = ptr::null_mut();
        assert_eq!(wg_verify_conjecture(alg, &mut pass, &mut report), WgStatus::Ok);
        assert!(pass);
        let text = CStr::from_ptr(report).to_str().unwrap();
        let v: serde_json::Value = serde_json::from_str(text).unwrap();
        assert_eq!(v["schema"], 1);
        wg_string_free(report);
        wg_algebra_free(alg);
    }
}

#[test]
fn dihedral_parameter_is_passed_through() {
    let mut alg = ptr::null_mut();
    unsafe {
        assert_eq!(wg_algebra_new(c("I2").as_ptr(), 5, 0, &mut alg), WgStatus::Ok);
        let (mut rad, mut ss) = (0usize, 0usize);
        assert_eq!(wg_algebra_radical(alg, &mut rad, &mut ss), WgStatus::Ok);
        assert_eq!(ss, 10);
        wg_algebra_free(alg);
    }
}

#[test]
fn error_codes() {
    let mut alg = ptr::null_mut();
    unsafe {
        assert_eq!(wg_algebra_new(ptr::null(), 0, 0, &mut alg), WgStatus::NullPointer);
        assert_eq!(wg_algebra_new(c("Q7").as_ptr(), 0, 0, &mut alg), WgStatus::InvalidArgument);
        assert!(last_error().contains("Q7"));
        assert_eq!(wg_algebra_new(c("I2").as_ptr(), 0, 0, &mut alg), WgStatus::InvalidArgument);
        assert_eq!(wg_algebra_new(c("F4").as_ptr(), 0, 0, &mut alg), WgStatus::Unsupported);
        assert_eq!(wg_algebra_new(c("A3").as_ptr(), 0, 2, &mut alg), WgStatus::NotStabilized);
        assert!(alg.is_null());
        assert_eq!(wg_algebra_dim(ptr::null(), ptr::null_mut()), WgStatus::NullPointer);
        wg_algebra_free(ptr::null_mut());
        wg_string_free(ptr::null_mut());
    }
}

#[test]
fn wgraph_verification() {
    let good = r#"{"vertices":["x","y"],"labels":{"x":["1"],"y":["2"]},"weights":{"1":[[0,1],[0,0]],"2":[[0,0],[1,0]]}}"#;
    let bad = r#"{"vertices":["x","y"],"labels":{"x":["1"],"y":["2"]},"weights":{"1":[[0,0],[1,0]],"2":[[0,0],[1,0]]}}"#;
    unsafe {
        assert_eq!(wg_wgraph_verify(c("I2").as_ptr(), 3, c(good).as_ptr()), WgStatus::Ok);
        assert_eq!(wg_wgraph_verify(c("I2").as_ptr(), 3, c(bad).as_ptr()), WgStatus::VerificationFailed);
        assert_eq!(wg_wgraph_verify(c("I2").as_ptr(), 3, c("{").as_ptr()), WgStatus::InvalidArgument);
    }
}

#[test]
fn compat_graph_dot_for_a3() {
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(wg_compat_graph_dot(c("A3").as_ptr(), 0, &mut out), WgStatus::Ok);
        let dot = CStr::from_ptr(out).to_str().unwrap().to_owned();
        wg_string_free(out);
        assert_eq!(dot.matches("style=bold").count(), 5);
    }
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/wgalg.h")).unwrap();
    for f in ["wg_last_error", "wg_algebra_new", "wg_algebra_free", "wg_algebra_dim", "wg_algebra_radical", "wg_verify_conjecture", "wg_wgraph_verify", "wg_compat_graph_dot", "wg_string_free"] {
        assert!(header.contains(&format!("{f}(")), "{f} missing from the header");
    }
    assert!(header.contains("typedef struct WgAlgebra WgAlgebra;"));
    assert!(header.contains("WG_STATUS_NOT_STABILIZED = 3"));
}
