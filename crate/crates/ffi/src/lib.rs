//! C ABI over `halfspin`.
//!
//! Every fallible call returns an [`HsStatus`] and writes its result through
//! an out-pointer. On failure the message is available from
//! [`hs_last_error_message`] on the same thread. Objects are opaque handles
//! released with their matching `*_free` function; strings returned by the
//! library are released with [`hs_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use halfspin::clifford::{check_fock_vector, parse_clifford, parse_fock_vector, phi, CliffordElement, FockVector};
use halfspin::oracle::{run_suite, run_truncated, Report, Suite};
use halfspin::quiver::RankContext;
use halfspin::spinrep::{apply_word, check_spin_vector, parse_spin_vector, parse_word, SpinVector};
use halfspin::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HsStatus {
    Ok = 0,
    InvalidRank = 1,
    OutOfRange = 2,
    Parse = 3,
    UnknownOperator = 4,
    NullPointer = 5,
    Utf8 = 6,
    InvariantViolation = 7,
    VerificationFailed = 8,
    Panic = 9,
}

pub struct HsContext(RankContext);
pub struct HsSpinVector(SpinVector);
pub struct HsFockVector(FockVector);
pub struct HsClifford(CliffordElement);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("no interior nul"));
}

struct Failure(HsStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::InvalidRank(_) | Error::RankMismatch(..) => HsStatus::InvalidRank,
            Error::OutOfRange { .. } | Error::DiagramTooWide { .. } | Error::ShapeMismatch { .. } => {
                HsStatus::OutOfRange
            }
            Error::NotStrict(_) | Error::Parse(_) => HsStatus::Parse,
            Error::UnknownOperator(_) | Error::UnknownSuite(_) => HsStatus::UnknownOperator,
            Error::InvariantViolation(_) => HsStatus::InvariantViolation,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(HsStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> HsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            HsStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside halfspin");
            HsStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(HsStatus::Utf8, format!("{what}: {e}")))
}

unsafe fn get<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = CString::new(s).expect("no interior nul").into_raw();
    Ok(())
}

unsafe fn free<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn hs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn hs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn hs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_context_new(n: usize, out: *mut *mut HsContext) -> HsStatus {
    guard(|| put(out, HsContext(RankContext::new(n)?)))
}

/// # Safety
/// `ctx` must come from [`hs_context_new`] or be null.
#[no_mangle]
pub unsafe extern "C" fn hs_context_free(ctx: *mut HsContext) {
    free(ctx)
}

/// Rank of the context, or 0 for a null handle.
///
/// # Safety
/// `ctx` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn hs_context_rank(ctx: *const HsContext) -> usize {
    ctx.as_ref().map_or(0, |c| c.0.rank())
}

/// Parses a spin vector such as `"2 * (plus,3,1) - (minus,-)"`.
///
/// # Safety
/// Pointers must be valid; `text` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn hs_spin_vector_parse(
    ctx: *const HsContext,
    text_: *const c_char,
    out: *mut *mut HsSpinVector,
) -> HsStatus {
    guard(|| {
        let ctx = get(ctx, "context")?;
        let v = parse_spin_vector(text(text_, "text")?)?;
        check_spin_vector(&v, &ctx.0)?;
        put(out, HsSpinVector(v))
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn hs_spin_vector_to_string(v: *const HsSpinVector, out: *mut *mut c_char) -> HsStatus {
    guard(|| put_string(out, get(v, "vector")?.0.to_string()))
}

/// # Safety
/// `v` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn hs_spin_vector_free(v: *mut HsSpinVector) {
    free(v)
}

/// Applies an operator word such as `"F_2 F_4"`, rightmost first.
///
/// # Safety
/// Pointers must be valid; `word` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn hs_spin_apply_word(
    ctx: *const HsContext,
    word: *const c_char,
    v: *const HsSpinVector,
    out: *mut *mut HsSpinVector,
) -> HsStatus {
    guard(|| {
        let ctx = &get(ctx, "context")?.0;
        let ops = parse_word(text(word, "word")?)?;
        for op in &ops {
            op.check_rank(ctx)?;
        }
        let r = apply_word(&ops, &get(v, "vector")?.0, ctx)?;
        put(out, HsSpinVector(r))
    })
}

/// Maps a spin vector to the Fock space.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn hs_phi(
    ctx: *const HsContext,
    v: *const HsSpinVector,
    out: *mut *mut HsFockVector,
) -> HsStatus {
    guard(|| {
        let f = phi(&get(v, "vector")?.0, &get(ctx, "context")?.0)?;
        put(out, HsFockVector(f))
    })
}

/// Parses a Fock vector such as `"{1,3} - 1/2 * {}"`.
///
/// # Safety
/// Pointers must be valid; `text` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn hs_fock_vector_parse(
    ctx: *const HsContext,
    text_: *const c_char,
    out: *mut *mut HsFockVector,
) -> HsStatus {
    guard(|| {
        let ctx = get(ctx, "context")?;
        let v = parse_fock_vector(text(text_, "text")?)?;
        check_fock_vector(&v, &ctx.0)?;
        put(out, HsFockVector(v))
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn hs_fock_vector_to_string(v: *const HsFockVector, out: *mut *mut c_char) -> HsStatus {
    guard(|| put_string(out, get(v, "vector")?.0.to_string()))
}

/// # Safety
/// `v` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn hs_fock_vector_free(v: *mut HsFockVector) {
    free(v)
}

/// Parses and normal-orders a Clifford expression such as `"a1*b1 + b1*a1"`.
///
/// # Safety
/// Pointers must be valid; `text` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn hs_clifford_parse(
    ctx: *const HsContext,
    text_: *const c_char,
    out: *mut *mut HsClifford,
) -> HsStatus {
    guard(|| {
        let ctx = get(ctx, "context")?;
        let x = parse_clifford(text(text_, "text")?)?;
        x.check_rank(&ctx.0)?;
        put(out, HsClifford(x))
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn hs_clifford_to_string(x: *const HsClifford, out: *mut *mut c_char) -> HsStatus {
    guard(|| put_string(out, get(x, "element")?.0.to_string()))
}

/// `x · y`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn hs_clifford_mul(
    x: *const HsClifford,
    y: *const HsClifford,
    out: *mut *mut HsClifford,
) -> HsStatus {
    guard(|| {
        let p = get(x, "left factor")?.0.mul(&get(y, "right factor")?.0);
        put(out, HsClifford(p))
    })
}

/// Applies a Clifford element to a Fock vector.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn hs_clifford_apply(
    ctx: *const HsContext,
    x: *const HsClifford,
    v: *const HsFockVector,
    out: *mut *mut HsFockVector,
) -> HsStatus {
    guard(|| {
        let r = get(x, "element")?.0.act(&get(v, "vector")?.0, &get(ctx, "context")?.0)?;
        put(out, HsFockVector(r))
    })
}

/// # Safety
/// `x` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn hs_clifford_free(x: *mut HsClifford) {
    free(x)
}

unsafe fn report_out(report: Report, out_json: *mut *mut c_char) -> Result<(), Failure> {
    let passed = report.passed();
    let json = serde_json::to_string(&report).expect("report serializes");
    put_string(out_json, json)?;
    if passed {
        Ok(())
    } else {
        Err(Failure(
            HsStatus::VerificationFailed,
            format!("{} at rank {} failed", report.check, report.rank),
        ))
    }
}

/// Runs a verification suite (`"chevalley"`, `"weights"`, ...) at rank `n`
/// and writes its JSON report. Returns `VERIFICATION_FAILED` (with the
/// report still written) when an identity fails.
///
/// # Safety
/// Pointers must be valid; `suite` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn hs_verify(suite: *const c_char, n: usize, out_json: *mut *mut c_char) -> HsStatus {
    guard(|| {
        let suite: Suite = text(suite, "suite")?.parse()?;
        report_out(run_suite(suite, n)?, out_json)
    })
}

/// Like [`hs_verify`] on diagrams with at most `max_boxes` boxes, realised in
/// rank `n` (unbounded mode).
///
/// # Safety
/// Pointers must be valid; `suite` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn hs_verify_unbounded(
    suite: *const c_char,
    max_boxes: u32,
    n: usize,
    out_json: *mut *mut c_char,
) -> HsStatus {
    guard(|| {
        let suite: Suite = text(suite, "suite")?.parse()?;
        report_out(run_truncated(suite, max_boxes, n)?, out_json)
    })
}
