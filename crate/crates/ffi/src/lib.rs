//! C ABI for `tribspin`.
//!
//! Parameter sets live behind an opaque [`TsParams`] handle. Every function
//! returns a [`TsStatus`] code; results are written through out-pointers.
//! Strings returned by the library are NUL-terminated UTF-8 and must be
//! released with [`ts_string_free`]; handles with [`ts_params_free`].
//! The message for the most recent non-OK status on the calling thread is
//! available from [`ts_last_error`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::c_char;
use tribspin::identities::{run_suite, IdentityId, Status, SuiteOptions};
use tribspin::{Error, SeqParams};

/// Result code of every exported function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TsStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// Malformed text input (not UTF-8, bad scalar, wrong arity).
    InvalidArgument = 2,
    UnknownPreset = 3,
    /// `r + s + t - 1 = 0`; the closed-form sum is undefined.
    DegenerateDelta = 4,
    /// Repeated characteristic roots; Binet is undefined.
    DegenerateRoots = 5,
    UnsupportedParams = 6,
    /// At least one identity report has status Fail.
    VerificationFailed = 7,
    /// A Rust panic was caught at the boundary.
    Internal = 99,
}

/// Opaque parameter set `(r, s, t; V0, V1, V2)`.
pub struct TsParams(SeqParams);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> TsStatus {
    match e {
        Error::UnknownPreset(_) => TsStatus::UnknownPreset,
        Error::InvalidScalar(_) | Error::InvalidParams(_) | Error::InvalidInput(_) => TsStatus::InvalidArgument,
        Error::DegenerateDelta => TsStatus::DegenerateDelta,
        Error::DegenerateRoots => TsStatus::DegenerateRoots,
        Error::UnsupportedParams => TsStatus::UnsupportedParams,
    }
}

fn fail(status: TsStatus, msg: impl Into<String>) -> TsStatus {
    set_last_error(msg.into());
    status
}

fn from_error(e: Error) -> TsStatus {
    fail(status_of(&e), e.to_string())
}

/// Runs `f`, converting panics into [`TsStatus::Internal`].
fn guard(f: impl FnOnce() -> TsStatus) -> TsStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(TsStatus::Internal, "internal panic"))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, TsStatus> {
    if s.is_null() {
        return Err(fail(TsStatus::NullPointer, "string argument is NULL"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(TsStatus::InvalidArgument, "string argument is not UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> TsStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            TsStatus::Ok
        }
        Err(_) => fail(TsStatus::Internal, "output contained a NUL byte"),
    }
}

unsafe fn params_ref<'a>(p: *const TsParams) -> Result<&'a SeqParams, TsStatus> {
    p.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| fail(TsStatus::NullPointer, "params handle is NULL"))
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

fn boxed(p: SeqParams) -> *mut TsParams {
    Box::into_raw(Box::new(TsParams(p)))
}

/// Creates a handle for a named preset (`tribonacci`, `third_order_jacobsthal`).
///
/// # Safety
/// `name` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_params_from_preset(name: *const c_char, out: *mut *mut TsParams) -> TsStatus {
    guard(|| {
        if out.is_null() {
            return fail(TsStatus::NullPointer, "out is NULL");
        }
        let name = tri!(read_str(name));
        match tribspin::sequences::preset(name) {
            Ok(p) => {
                *out = boxed(p);
                TsStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Creates a handle from `"r,s,t,V0,V1,V2"`; entries may be fractions like `3/2`.
///
/// # Safety
/// `csv` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_params_from_csv(csv: *const c_char, out: *mut *mut TsParams) -> TsStatus {
    guard(|| {
        if out.is_null() {
            return fail(TsStatus::NullPointer, "out is NULL");
        }
        let csv = tri!(read_str(csv));
        match SeqParams::parse_csv(csv) {
            Ok(p) => {
                *out = boxed(p);
                TsStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Creates a handle from integer coefficients and seeds.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_params_from_ints(
    r: i64,
    s: i64,
    t: i64,
    v0: i64,
    v1: i64,
    v2: i64,
    out: *mut *mut TsParams,
) -> TsStatus {
    if out.is_null() {
        return fail(TsStatus::NullPointer, "out is NULL");
    }
    *out = boxed(SeqParams::from_ints([r, s, t], [v0, v1, v2]));
    TsStatus::Ok
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `p` must come from one of the `ts_params_from_*` constructors and not be
/// freed twice.
#[no_mangle]
pub unsafe extern "C" fn ts_params_free(p: *mut TsParams) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ts_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last non-OK status on this thread, or NULL. The pointer is
/// owned by the library and valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn ts_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Writes `V_n` as an exact decimal rational string (`"7"`, `"-3/2"`).
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_term(p: *const TsParams, n: u64, out: *mut *mut c_char) -> TsStatus {
    guard(|| {
        if out.is_null() {
            return fail(TsStatus::NullPointer, "out is NULL");
        }
        let params = tri!(params_ref(p));
        write_string(out, tribspin::sequences::seq_term(params, n as usize).to_string())
    })
}

/// Writes `Q_{v,n}` as JSON `{"q0":"..","q1":"..","q2":"..","q3":".."}`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_quaternion_json(p: *const TsParams, n: u64, out: *mut *mut c_char) -> TsStatus {
    guard(|| {
        if out.is_null() {
            return fail(TsStatus::NullPointer, "out is NULL");
        }
        let params = tri!(params_ref(p));
        let q = tribspin::quaternions::trib_quaternion(params, n as usize).value;
        write_string(out, serde_json_string(&q))
    })
}

/// Writes `A_{v,n}` as JSON `{"c1":{"re":"..","im":".."},"c2":{..}}`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_spinor_json(p: *const TsParams, n: u64, out: *mut *mut c_char) -> TsStatus {
    guard(|| {
        if out.is_null() {
            return fail(TsStatus::NullPointer, "out is NULL");
        }
        let params = tri!(params_ref(p));
        let a = tribspin::spinors::trib_spinor(params, n as usize);
        write_string(out, serde_json_string(&a))
    })
}

/// Floating-point `V_n` from the Binet formula.
///
/// # Safety
/// `p` must be a live handle; `re` and `im` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_binet_number(p: *const TsParams, n: u64, re: *mut f64, im: *mut f64) -> TsStatus {
    guard(|| {
        if re.is_null() || im.is_null() {
            return fail(TsStatus::NullPointer, "out is NULL");
        }
        let params = tri!(params_ref(p));
        match tribspin::analytic::binet_number(params, n as usize) {
            Ok(z) => {
                *re = z.re;
                *im = z.im;
                TsStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Runs the full identity suite and writes the JSON report array. Returns
/// [`TsStatus::VerificationFailed`] (with the report still written) when any
/// identity fails.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_suite_json(p: *const TsParams, nmax: u64, seed: u64, out: *mut *mut c_char) -> TsStatus {
    guard(|| {
        if out.is_null() {
            return fail(TsStatus::NullPointer, "out is NULL");
        }
        let params = tri!(params_ref(p));
        let reports = run_suite(params, nmax as usize, seed);
        let failed = reports.iter().any(|r| r.status == Status::Fail);
        let status = write_string(out, serde_json_string(&reports));
        if status == TsStatus::Ok && failed {
            return fail(TsStatus::VerificationFailed, "at least one identity failed");
        }
        status
    })
}

/// Runs one identity by index into the suite order (0..=10) and writes its
/// JSON report.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ts_verify_json(
    p: *const TsParams,
    identity: u32,
    nmax: u64,
    seed: u64,
    out: *mut *mut c_char,
) -> TsStatus {
    guard(|| {
        if out.is_null() {
            return fail(TsStatus::NullPointer, "out is NULL");
        }
        let params = tri!(params_ref(p));
        let Some(&id) = IdentityId::ALL.get(identity as usize) else {
            return fail(TsStatus::InvalidArgument, format!("identity index {identity} out of range"));
        };
        let opts = SuiteOptions { nmax: nmax as usize, seed, ..SuiteOptions::default() };
        let report = tribspin::identities::run_identity(id, params, &opts);
        let status = write_string(out, serde_json_string(&report));
        if status == TsStatus::Ok && report.status == Status::Fail {
            return fail(TsStatus::VerificationFailed, "identity failed");
        }
        status
    })
}

/// Number of identities accepted by [`ts_verify_json`].
#[no_mangle]
pub extern "C" fn ts_identity_count() -> u32 {
    IdentityId::ALL.len() as u32
}

fn serde_json_string<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}
