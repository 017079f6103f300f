//! C ABI for qhex.
//!
//! Polynomials cross the boundary as opaque `QhexPoly` handles owned by the
//! caller and released with `qhex_poly_free`. Every fallible call returns a
//! `QhexStatus`; on failure `qhex_last_error_message` describes the error
//! for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use qhex::exact::{from_json, to_json};
use qhex::lgv::tiling_gf;
use qhex::oracle::{family_gf, RegionSpec, DEFAULT_CAP};
use qhex::paths::{gf_dp, PathSpec};
use qhex::verify::{closed_gf, run_suite, Suite, VerifyConfig};
use qhex::{Error, LaurentPoly};

/// Result codes; the nonzero values 1 to 4 match the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QhexStatus {
    Ok = 0,
    VerifyFailed = 1,
    InvalidArgument = 2,
    Disagreement = 3,
    CapExceeded = 4,
    NullPointer = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QhexRoute {
    Family = 0,
    Lgv = 1,
    Closed = 2,
}

/// Opaque Laurent polynomial in `q` with rational coefficients.
pub struct QhexPoly {
    inner: LaurentPoly,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> QhexStatus {
    match e {
        Error::CapExceeded { .. } => QhexStatus::CapExceeded,
        Error::InexactDivision => QhexStatus::Disagreement,
        _ => QhexStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (QhexStatus, String)>) -> QhexStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            QhexStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            QhexStatus::Panic
        }
    }
}

fn err(e: Error) -> (QhexStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (QhexStatus, String) {
    (QhexStatus::NullPointer, format!("{what} is null"))
}

unsafe fn emit(out: *mut *mut QhexPoly, p: LaurentPoly) {
    *out = Box::into_raw(Box::new(QhexPoly { inner: p }));
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next qhex call on the same thread.
#[no_mangle]
pub extern "C" fn qhex_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Weighted sum over right/down paths from `(a, b)` to `(c, d)`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn qhex_path_gf(a: i64, b: i64, c: i64, d: i64, out: *mut *mut QhexPoly) -> QhexStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        emit(out, gf_dp(&PathSpec::new(a, b, c, d)));
        Ok(())
    })
}

/// Tiling generating function of the region `(m, k, dents[0..len])` by the
/// given route. `cap` bounds the family enumeration; 0 selects the default.
///
/// # Safety
/// `dents` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qhex_region_gf(
    m: u32,
    k: u32,
    dents: *const i64,
    len: usize,
    route: QhexRoute,
    cap: u64,
    out: *mut *mut QhexPoly,
) -> QhexStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if dents.is_null() && len > 0 {
            return Err(null("dents"));
        }
        let values = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(dents, len).to_vec() };
        let region = RegionSpec::new(m as usize, k as usize, values).map_err(err)?;
        let cap = if cap == 0 { DEFAULT_CAP } else { cap };
        let p = match route {
            QhexRoute::Family => family_gf(&region, cap).map_err(err)?,
            QhexRoute::Lgv => tiling_gf(&region),
            QhexRoute::Closed => {
                if !region.last_path_feasible() {
                    return Err((QhexStatus::InvalidArgument, "product formula needs a_m <= m - 1".into()));
                }
                closed_gf(&region)
                    .to_laurent()
                    .ok_or((QhexStatus::Disagreement, "product formula is not a Laurent polynomial".into()))?
            }
        };
        emit(out, p);
        Ok(())
    })
}

/// Canonical JSON of `p`, to be released with `qhex_string_free`.
///
/// # Safety
/// `p` must be a live handle or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qhex_poly_to_json(p: *const QhexPoly, out: *mut *mut c_char) -> QhexStatus {
    guard(|| {
        if p.is_null() {
            return Err(null("poly"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let s = CString::new(to_json(&(*p).inner)).expect("json has no nul");
        *out = s.into_raw();
        Ok(())
    })
}

/// Parse canonical JSON into a new handle.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qhex_poly_from_json(json: *const c_char, out: *mut *mut QhexPoly) -> QhexStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let text = CStr::from_ptr(json).to_str().map_err(|e| (QhexStatus::InvalidArgument, e.to_string()))?;
        emit(out, from_json(text).map_err(err)?);
        Ok(())
    })
}

/// Writes whether `p` and `r` are equal to `out`.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qhex_poly_equal(p: *const QhexPoly, r: *const QhexPoly, out: *mut bool) -> QhexStatus {
    guard(|| {
        if p.is_null() || r.is_null() {
            return Err(null("poly"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        *out = (*p).inner == (*r).inner;
        Ok(())
    })
}

/// Number of nonzero terms of `p`, or 0 for a null handle.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qhex_poly_num_terms(p: *const QhexPoly) -> usize {
    if p.is_null() {
        0
    } else {
        (*p).inner.len()
    }
}

/// # Safety
/// `p` must come from this library and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn qhex_poly_free(p: *mut QhexPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `s` must come from `qhex_poly_to_json`; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn qhex_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Run one verification suite by name. Returns `VerifyFailed` if any case
/// failed and `CapExceeded` if cases hit the enumeration cap.
///
/// # Safety
/// `suite` must be a nul-terminated string; the count pointers may be null.
#[no_mangle]
pub unsafe extern "C" fn qhex_verify(
    suite: *const c_char,
    max_m: u32,
    max_k: u32,
    seed: u64,
    out_passed: *mut u64,
    out_total: *mut u64,
) -> QhexStatus {
    guard(|| {
        if suite.is_null() {
            return Err(null("suite"));
        }
        let name = CStr::from_ptr(suite).to_str().map_err(|e| (QhexStatus::InvalidArgument, e.to_string()))?;
        let suite: Suite = name.parse().map_err(err)?;
        let cfg = VerifyConfig { max_m: max_m as usize, max_k: max_k as usize, seed, ..VerifyConfig::default() };
        let report = run_suite(suite, &cfg);
        if !out_passed.is_null() {
            *out_passed = report.passed as u64;
        }
        if !out_total.is_null() {
            *out_total = report.total() as u64;
        }
        if report.failed > 0 {
            Err((QhexStatus::VerifyFailed, report.to_string()))
        } else if report.capped > 0 {
            Err((QhexStatus::CapExceeded, report.to_string()))
        } else {
            Ok(())
        }
    })
}
