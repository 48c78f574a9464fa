//! C ABI over `wha-lab`.
//!
//! Algebras are opaque `WhaAlgebra` handles released with [`wha_algebra_free`].
//! Functions return a [`WhaStatus`]; on failure [`wha_last_error`] holds a message
//! for the calling thread. Strings handed out by the library are NUL-terminated
//! UTF-8 and must be released with [`wha_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use wha_lab::builders;
use wha_lab::report::{check_all, dims_report, fusion_report};
use wha_lab::{Config, WeakHopfAlgebra, WhaError};

/// Result codes. The first four match the `wha` CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WhaStatus {
    Ok = 0,
    /// A check failed or the algebra lacks a required property (e.g. not connected).
    VerificationFailed = 1,
    /// Malformed input, I/O failure or invalid parameters.
    InputError = 2,
    /// Two independent computations of the same invariant disagreed.
    EquivalenceViolated = 3,
    NullPointer = 4,
    InvalidUtf8 = 5,
    Panic = 6,
}

/// Opaque handle to a validated weak Hopf algebra.
pub struct WhaAlgebra(WeakHopfAlgebra);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

impl From<&WhaError> for WhaStatus {
    fn from(e: &WhaError) -> Self {
        match e.exit_code() {
            1 => WhaStatus::VerificationFailed,
            3 => WhaStatus::EquivalenceViolated,
            _ => WhaStatus::InputError,
        }
    }
}

struct Fail(WhaStatus, String);

impl From<WhaError> for Fail {
    fn from(e: WhaError) -> Self {
        Fail((&e).into(), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<WhaStatus, Fail>) -> WhaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => {
            set_error("");
            s
        }
        Ok(Err(Fail(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&format!("internal panic: {msg}"));
            WhaStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(WhaStatus::NullPointer, format!("{what} is NULL")));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Fail(WhaStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn alg_arg<'a>(p: *const WhaAlgebra) -> Result<&'a WeakHopfAlgebra, Fail> {
    p.as_ref().map(|a| &a.0).ok_or_else(|| Fail(WhaStatus::NullPointer, "algebra handle is NULL".into()))
}

unsafe fn put_algebra(out: *mut *mut WhaAlgebra, a: WeakHopfAlgebra) -> Result<WhaStatus, Fail> {
    if out.is_null() {
        return Err(Fail(WhaStatus::NullPointer, "output pointer is NULL".into()));
    }
    *out = Box::into_raw(Box::new(WhaAlgebra(a)));
    Ok(WhaStatus::Ok)
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(WhaStatus::NullPointer, "output pointer is NULL".into()));
    }
    *out = CString::new(s).expect("JSON has no NUL").into_raw();
    Ok(())
}

fn config(seed: u64) -> Config {
    Config { seed, ..Config::default() }
}

/// Parses and validates an algebra from its JSON file format.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wha_algebra_from_json(json: *const c_char, out: *mut *mut WhaAlgebra) -> WhaStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        let a = WeakHopfAlgebra::from_json(text)?;
        builders::check_cap(a.dim(), builders::DEFAULT_DIM_CAP)?;
        put_algebra(out, a)
    })
}

/// Loads and validates an algebra file.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wha_algebra_load(path: *const c_char, out: *mut *mut WhaAlgebra) -> WhaStatus {
    guard(|| {
        let p = str_arg(path, "path")?;
        put_algebra(out, builders::load(p, builders::DEFAULT_DIM_CAP)?)
    })
}

/// Builds a named example such as `"pair(2)"`, `"grp(S3)"`, `"gpd(2,Z2)"`,
/// `"fun(S3)"`, `"dual(pair(2))"` or `"ds(grp(Z2),pair(2))"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wha_algebra_build(spec: *const c_char, out: *mut *mut WhaAlgebra) -> WhaStatus {
    guard(|| {
        let s = str_arg(spec, "spec")?;
        put_algebra(out, builders::by_name(s)?)
    })
}

/// New handle holding the dual algebra.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wha_algebra_dual(a: *const WhaAlgebra, out: *mut *mut WhaAlgebra) -> WhaStatus {
    guard(|| {
        let a = alg_arg(a)?;
        let label = format!("dual({})", a.label());
        put_algebra(out, a.dual().with_label(label))
    })
}

/// New handle holding the direct sum `a ⊕ b`.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wha_algebra_direct_sum(
    a: *const WhaAlgebra,
    b: *const WhaAlgebra,
    out: *mut *mut WhaAlgebra,
) -> WhaStatus {
    guard(|| {
        let (a, b) = (alg_arg(a)?, alg_arg(b)?);
        let s = a.direct_sum(b);
        builders::check_cap(s.dim(), builders::DEFAULT_DIM_CAP)?;
        put_algebra(out, s)
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `a` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wha_algebra_free(a: *mut WhaAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Dimension of the algebra, or 0 for a NULL handle.
///
/// # Safety
/// `a` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wha_algebra_dim(a: *const WhaAlgebra) -> usize {
    a.as_ref().map_or(0, |a| a.0.dim())
}

/// Serializes the algebra in the file format read by `wha_algebra_from_json`.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wha_algebra_to_json(a: *const WhaAlgebra, out: *mut *mut c_char) -> WhaStatus {
    guard(|| {
        let a = alg_arg(a)?;
        put_string(out, a.to_json())?;
        Ok(WhaStatus::Ok)
    })
}

/// Runs every verifier and writes the JSON report to `out`.
/// Returns `WHA_STATUS_VERIFICATION_FAILED` (with the report written) if any check fails.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wha_check_all(a: *const WhaAlgebra, seed: u64, out: *mut *mut c_char) -> WhaStatus {
    guard(|| {
        let a = alg_arg(a)?;
        let r = check_all(a, &config(seed))?;
        put_string(out, r.to_json())?;
        if r.passed() {
            Ok(WhaStatus::Ok)
        } else {
            let name = r.first_failure().map(|e| e.name.clone()).unwrap_or_default();
            Err(Fail(WhaStatus::VerificationFailed, format!("check failed: {name}")))
        }
    })
}

/// Dimension invariants (d, dimA, FPdimA, mu, Lambda, ...) as JSON.
/// Requires a connected algebra.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wha_report_dims(a: *const WhaAlgebra, seed: u64, out: *mut *mut c_char) -> WhaStatus {
    guard(|| {
        let v = dims_report(alg_arg(a)?, &config(seed))?;
        put_string(out, serde_json::to_string_pretty(&v).expect("serializable"))?;
        Ok(WhaStatus::Ok)
    })
}

/// Fusion ring of the representation category as JSON. Requires a connected algebra.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wha_report_fusion(a: *const WhaAlgebra, seed: u64, out: *mut *mut c_char) -> WhaStatus {
    guard(|| {
        let v = fusion_report(alg_arg(a)?, &config(seed))?;
        put_string(out, serde_json::to_string_pretty(&v).expect("serializable"))?;
        Ok(WhaStatus::Ok)
    })
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next library call on the same thread. Do not free.
#[no_mangle]
pub extern "C" fn wha_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by the library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wha_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn wha_version() -> *const c_char {
    static V: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(c) => c,
        Err(_) => panic!("version string"),
    };
    V.as_ptr()
}
