//! C ABI over `wgalg`.
//!
//! Every entry point returns a [`WgStatus`]; results travel through out
//! pointers. Algebras are opaque [`WgAlgebra`] handles released with
//! [`wg_algebra_free`]. Strings returned by the library are owned by the
//! caller and released with [`wg_string_free`]. The message of the last
//! failure on the calling thread is available from [`wg_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use wgalg::coxeter::{build_system, CoxeterSystem, TypeTag};
use wgalg::decomp::{verify_conjecture, DecompError};
use wgalg::omega::{compute_quotient, radical, OmegaError, QuotientAlgebra, QuotientOptions};
use wgalg::pathalg::{compat_graph_dot, CompatGraph};
use wgalg::wgraph::{wgraph_to_module, WGraph};

/// Status codes shared by every function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// The quotient did not stabilize within the length bound.
    NotStabilized = 3,
    /// No construction exists for the requested type.
    Unsupported = 4,
    /// A check ran to completion and failed.
    VerificationFailed = 5,
    Internal = 6,
}

/// Opaque handle to a computed quotient kΩ.
pub struct WgAlgebra {
    alg: QuotientAlgebra,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: WgStatus, msg: impl Into<String>) -> WgStatus {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
    status
}

fn omega_status(e: &OmegaError) -> WgStatus {
    match e {
        OmegaError::NotStabilized { .. } | OmegaError::TooManyCollapses(_) => WgStatus::NotStabilized,
        _ => WgStatus::Internal,
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, WgStatus> {
    if p.is_null() {
        return Err(fail(WgStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(WgStatus::InvalidArgument, "argument is not UTF-8"))
}

unsafe fn system(type_tag: *const c_char, param: u32) -> Result<CoxeterSystem, WgStatus> {
    let tag = read_str(type_tag)?;
    let param = (param != 0).then_some(param);
    let tag = TypeTag::parse(tag, param).map_err(|e| fail(WgStatus::InvalidArgument, e.to_string()))?;
    build_system(tag).map_err(|e| fail(WgStatus::InvalidArgument, e.to_string()))
}

fn give_string(s: String, out: *mut *mut c_char) -> WgStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            WgStatus::Ok
        }
        Err(_) => fail(WgStatus::Internal, "output contains a NUL byte"),
    }
}

/// Message of the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn wg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Computes kΩ for `type_tag` ("A3", "B3", "A4", "I2", "A1xN", ...).
/// `param` is m for I2 and n for A1xN, 0 otherwise; `max_length` 0 selects
/// the default bound.
///
/// # Safety
/// `type_tag` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wg_algebra_new(type_tag: *const c_char, param: u32, max_length: u32, out: *mut *mut WgAlgebra) -> WgStatus {
    if out.is_null() {
        return fail(WgStatus::NullPointer, "null out pointer");
    }
    let sys = match system(type_tag, param) {
        Ok(s) => s,
        Err(st) => return st,
    };
    if !sys.tag.is_certifiable() {
        return fail(WgStatus::Unsupported, format!("no certified quotient for type {}", sys.tag));
    }
    let mut opts = QuotientOptions::default();
    if max_length > 0 {
        opts.max_length = max_length as usize;
    }
    match compute_quotient(&sys, &opts) {
        Ok(alg) => {
            *out = Box::into_raw(Box::new(WgAlgebra { alg }));
            WgStatus::Ok
        }
        Err(e) => fail(omega_status(&e), e.to_string()),
    }
}

/// Releases an algebra. NULL is ignored.
///
/// # Safety
/// `alg` must come from [`wg_algebra_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn wg_algebra_free(alg: *mut WgAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// dim kΩ.
///
/// # Safety
/// `alg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wg_algebra_dim(alg: *const WgAlgebra, out: *mut usize) -> WgStatus {
    if alg.is_null() || out.is_null() {
        return fail(WgStatus::NullPointer, "null argument");
    }
    *out = (*alg).alg.dim();
    WgStatus::Ok
}

/// dim rad(kΩ) and dim kΩ/rad(kΩ).
///
/// # Safety
/// `alg` must be a live handle; the out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn wg_algebra_radical(alg: *const WgAlgebra, dim_radical: *mut usize, dim_semisimple: *mut usize) -> WgStatus {
    if alg.is_null() || dim_radical.is_null() || dim_semisimple.is_null() {
        return fail(WgStatus::NullPointer, "null argument");
    }
    match radical(&(*alg).alg, None) {
        Ok(r) => {
            *dim_radical = r.dim_radical;
            *dim_semisimple = r.dim_semisimple;
            WgStatus::Ok
        }
        Err(e) => fail(omega_status(&e), e.to_string()),
    }
}

/// Builds the idempotent family and checks Z1–Z4. `pass` receives the
/// verdict; `report_json`, if not NULL, receives the JSON report. Returns
/// `Ok` whenever the checks ran, even when they failed.
///
/// # Safety
/// `alg` must be a live handle and `pass` valid; `report_json` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn wg_verify_conjecture(alg: *const WgAlgebra, pass: *mut bool, report_json: *mut *mut c_char) -> WgStatus {
    if alg.is_null() || pass.is_null() {
        return fail(WgStatus::NullPointer, "null argument");
    }
    match verify_conjecture(&(*alg).alg, None) {
        Ok((_, report)) => {
            *pass = report.pass;
            if report_json.is_null() {
                return WgStatus::Ok;
            }
            match serde_json::to_string(&report) {
                Ok(s) => give_string(s, report_json),
                Err(e) => fail(WgStatus::Internal, e.to_string()),
            }
        }
        Err(DecompError::Unsupported(t)) => fail(WgStatus::Unsupported, format!("no idempotent family for type {t}")),
        Err(e) => fail(WgStatus::Internal, e.to_string()),
    }
}

/// Validates a W-graph given as JSON and checks that its Ω-module satisfies
/// every relator. Invalid graphs return `VerificationFailed`.
///
/// # Safety
/// `type_tag` and `graph_json` must be NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn wg_wgraph_verify(type_tag: *const c_char, param: u32, graph_json: *const c_char) -> WgStatus {
    let sys = match system(type_tag, param) {
        Ok(s) => s,
        Err(st) => return st,
    };
    let text = match read_str(graph_json) {
        Ok(t) => t,
        Err(st) => return st,
    };
    let value: serde_json::Value = match serde_json::from_str(text) {
        Ok(v) => v,
        Err(e) => return fail(WgStatus::InvalidArgument, e.to_string()),
    };
    let g = match WGraph::from_json(&sys, &value) {
        Ok(g) => g,
        Err(e) => return fail(WgStatus::InvalidArgument, e.to_string()),
    };
    match wgraph_to_module(&sys, &g).and_then(|m| m.check()) {
        Ok(c) if c.pass() => WgStatus::Ok,
        Ok(c) => fail(WgStatus::VerificationFailed, format!("{} relators act nonzero", c.failures.len())),
        Err(e) => fail(WgStatus::VerificationFailed, e.to_string()),
    }
}

/// DOT text of the compatibility graph.
///
/// # Safety
/// `type_tag` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wg_compat_graph_dot(type_tag: *const c_char, param: u32, out: *mut *mut c_char) -> WgStatus {
    if out.is_null() {
        return fail(WgStatus::NullPointer, "null out pointer");
    }
    let sys = match system(type_tag, param) {
        Ok(s) => s,
        Err(st) => return st,
    };
    match CompatGraph::new(&sys) {
        Ok(g) => give_string(compat_graph_dot(&g), out),
        Err(e) => fail(WgStatus::InvalidArgument, e.to_string()),
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn wg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
