//! C ABI over `tfmzv`. Every function returns a [`TfmzvStatus`]; on failure
//! the message is available from [`tfmzv_last_error`] on the same thread.
//! Handles are opaque and must be released with the matching `_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tfmzv::fp::{bernoulli_mod, fmzv_eval, primes_between, z_a_single, EvalCache, PrimeCtx};
use tfmzv::index::Index;
use tfmzv::suite::{run_suite, Bounds};
use tfmzv::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TfmzvStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotPrime = 3,
    OutOfRange = 4,
    UnknownTheorem = 5,
    BufferTooSmall = 6,
    VerificationFailed = 7,
    Panic = 8,
}

/// Evaluation context for one prime, with its own memo table.
pub struct TfmzvContext {
    ctx: PrimeCtx,
    cache: EvalCache,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> TfmzvStatus {
    match e {
        Error::NotPrime { .. } => TfmzvStatus::NotPrime,
        Error::OutOfRange(_) | Error::CostGuard(_) => TfmzvStatus::OutOfRange,
        Error::UnknownTheorem { .. } => TfmzvStatus::UnknownTheorem,
        _ => TfmzvStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (TfmzvStatus, String)>) -> TfmzvStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TfmzvStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TfmzvStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (TfmzvStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (TfmzvStatus, String) {
    (TfmzvStatus::NullPointer, format!("{what} is null"))
}

unsafe fn context<'a>(ctx: *const TfmzvContext) -> Result<&'a TfmzvContext, (TfmzvStatus, String)> {
    ctx.as_ref().ok_or_else(|| null("context"))
}

unsafe fn index_arg(parts: *const u32, len: usize) -> Result<Index, (TfmzvStatus, String)> {
    if len == 0 {
        return Ok(Index::empty());
    }
    if parts.is_null() {
        return Err(null("parts"));
    }
    Index::new(std::slice::from_raw_parts(parts, len).to_vec()).map_err(lib_err)
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), (TfmzvStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(v);
    Ok(())
}

/// Message of the last failed call on this thread. Valid until the next call.
#[no_mangle]
pub extern "C" fn tfmzv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Creates a context for the odd prime `p`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tfmzv_context_new(p: u64, out: *mut *mut TfmzvContext) -> TfmzvStatus {
    guard(|| {
        let ctx = PrimeCtx::new(p).map_err(lib_err)?;
        let handle = Box::new(TfmzvContext {
            ctx,
            cache: EvalCache::new(),
        });
        write(out, Box::into_raw(handle))
    })
}

/// # Safety
/// `ctx` must come from [`tfmzv_context_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tfmzv_context_free(ctx: *mut TfmzvContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// The prime of `ctx`, or 0 for a null handle.
///
/// # Safety
/// `ctx` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tfmzv_context_prime(ctx: *const TfmzvContext) -> u64 {
    ctx.as_ref().map_or(0, |c| c.ctx.p())
}

/// Strict (`star == false`) or star value of the index `parts[0..len]`.
///
/// # Safety
/// `ctx` live, `parts` readable for `len` values, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tfmzv_eval(
    ctx: *const TfmzvContext,
    parts: *const u32,
    len: usize,
    star: bool,
    out: *mut u64,
) -> TfmzvStatus {
    guard(|| {
        let c = context(ctx)?;
        let k = index_arg(parts, len)?;
        write(out, fmzv_eval(&c.ctx, &k, star))
    })
}

/// Coefficients of `zeta_p^t(k)` in increasing degree, trailing zeros
/// trimmed. There are at most `max(len, 1)`; `*n_coeffs` receives the count
/// even when `capacity` is too small.
///
/// # Safety
/// `ctx` live, `parts` readable for `len` values, `coeffs` writable for
/// `capacity` values, `n_coeffs` writable.
#[no_mangle]
pub unsafe extern "C" fn tfmzv_eval_t(
    ctx: *const TfmzvContext,
    parts: *const u32,
    len: usize,
    coeffs: *mut u64,
    capacity: usize,
    n_coeffs: *mut usize,
) -> TfmzvStatus {
    guard(|| {
        let c = context(ctx)?;
        let k = index_arg(parts, len)?;
        let q = c.cache.t_eval(&c.ctx, &k).map_err(lib_err)?;
        let got = q.coeffs();
        write(n_coeffs, got.len())?;
        if got.len() > capacity {
            return Err((
                TfmzvStatus::BufferTooSmall,
                format!("need {} coefficient slots, got {capacity}", got.len()),
            ));
        }
        if !got.is_empty() {
            if coeffs.is_null() {
                return Err(null("coeffs"));
            }
            ptr::copy_nonoverlapping(got.as_ptr(), coeffs, got.len());
        }
        Ok(())
    })
}

/// `B_n mod p` for `n <= p - 2`.
///
/// # Safety
/// `ctx` live, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tfmzv_bernoulli(ctx: *const TfmzvContext, n: u64, out: *mut u64) -> TfmzvStatus {
    guard(|| {
        let c = context(ctx)?;
        write(out, bernoulli_mod(&c.ctx, n).map_err(lib_err)?)
    })
}

/// `B_{p-k} / k mod p` for `k >= 2`, `p >= k + 2`.
///
/// # Safety
/// `ctx` live, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tfmzv_z_a(ctx: *const TfmzvContext, k: u32, out: *mut u64) -> TfmzvStatus {
    guard(|| {
        let c = context(ctx)?;
        write(out, z_a_single(&c.ctx, k).map_err(lib_err)?)
    })
}

/// Runs the theorem ids in the comma-separated `ids` (or `all`) with weights
/// capped at `max_weight` and primes in `[prime_min, prime_max]`. The JSON
/// report is written to `*report` even when checks fail, in which case
/// `VerificationFailed` is returned. Free it with [`tfmzv_string_free`].
///
/// # Safety
/// `ids` must be a NUL-terminated string, `report` writable.
#[no_mangle]
pub unsafe extern "C" fn tfmzv_verify_json(
    ids: *const c_char,
    max_weight: u32,
    prime_min: u64,
    prime_max: u64,
    jobs: usize,
    report: *mut *mut c_char,
) -> TfmzvStatus {
    let mut failed = false;
    let status = guard(|| {
        if ids.is_null() {
            return Err(null("ids"));
        }
        if report.is_null() {
            return Err(null("report"));
        }
        let ids = CStr::from_ptr(ids)
            .to_str()
            .map_err(|_| (TfmzvStatus::InvalidArgument, "ids is not UTF-8".to_string()))?;
        let ids: Vec<&str> = ids.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        if prime_max > tfmzv::fp::MAX_PRIME {
            return Err((
                TfmzvStatus::OutOfRange,
                format!("prime_max must be at most {}", tfmzv::fp::MAX_PRIME),
            ));
        }
        let bounds = Bounds::default().clamp_weight(max_weight);
        let primes = primes_between(prime_min, prime_max);
        let r = run_suite(&ids, &bounds, &primes, jobs.max(1), &EvalCache::new()).map_err(lib_err)?;
        failed = r.has_failures();
        let text = CString::new(r.to_json()).expect("json has no nul");
        report.write(text.into_raw());
        Ok(())
    });
    if status == TfmzvStatus::Ok && failed {
        set_error("at least one instance failed");
        return TfmzvStatus::VerificationFailed;
    }
    status
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn tfmzv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
