//! C ABI over the `beatty` crate.
//!
//! Values cross the boundary as opaque handles created by `*_new`/`*_parse`
//! and released by the matching `*_free`. Every fallible call returns a
//! [`BeattyStatus`]; on failure [`beatty_last_error_message`] describes the
//! cause. Strings returned through `char **` are owned by the caller and must
//! be released with [`beatty_string_free`].

use std::cell::RefCell;
use std::cmp::Ordering;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use beatty::beatty::BeattySpec;
use beatty::contfrac::{cf_expand, ostrowski_expand, validate_ostrowski};
use beatty::fraenkel::{brute_force_tiling, brute_force_tiling_z, check_conditions, check_conditions_z, TilePair};
use beatty::sturmian::{char_word, Sturmian};
use beatty::{Error, RealValue};
use num_traits::ToPrimitive;

/// Partial quotients searched when expanding a value.
const CF_SEARCH_LIMIT: usize = 4096;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BeattyStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    PrecisionExhausted = 4,
    IncompatibleSurds = 5,
    DensityOutOfRange = 6,
    NotRationalDensity = 7,
    RequiresIrrational = 8,
    IntervalNotSupported = 9,
    InsufficientQuotients = 10,
    DivisionByZero = 11,
    Overflow = 12,
    InvalidValue = 13,
    InvalidArgument = 14,
    BufferTooSmall = 15,
    Panic = 16,
}

impl From<&Error> for BeattyStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::PrecisionExhausted(_) => BeattyStatus::PrecisionExhausted,
            Error::IncompatibleSurds(..) => BeattyStatus::IncompatibleSurds,
            Error::DensityOutOfRange(_) => BeattyStatus::DensityOutOfRange,
            Error::NotRationalDensity => BeattyStatus::NotRationalDensity,
            Error::RequiresIrrational => BeattyStatus::RequiresIrrational,
            Error::IntervalNotSupported => BeattyStatus::IntervalNotSupported,
            Error::InsufficientQuotients { .. } => BeattyStatus::InsufficientQuotients,
            Error::DivisionByZero => BeattyStatus::DivisionByZero,
            Error::Overflow(_) => BeattyStatus::Overflow,
            Error::InvalidValue(_) => BeattyStatus::InvalidValue,
            Error::InvalidArgument(_) => BeattyStatus::InvalidArgument,
            Error::Parse { .. } => BeattyStatus::Parse,
        }
    }
}

/// An exact real: rational, quadratic irrational or certified decimal interval.
pub struct BeattyReal(RealValue);

/// A Beatty sequence `B(α, α′)`.
pub struct BeattySequence(BeattySpec);

/// A pair of Beatty sequences tested for tiling.
pub struct BeattyPair(TilePair);

struct Failure {
    status: BeattyStatus,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            status: BeattyStatus::from(&e),
            message: e.to_string(),
        }
    }
}

impl Failure {
    fn new(status: BeattyStatus, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }
}

type FfiResult<T> = Result<T, Failure>;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

/// Runs `body`, translating errors and panics into a status.
fn guard(body: impl FnOnce() -> FfiResult<()>) -> BeattyStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BeattyStatus::Ok,
        Ok(Err(f)) => {
            set_last_error(&f.message);
            f.status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_last_error(&format!("internal panic: {message}"));
            BeattyStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure::new(BeattyStatus::NullPointer, format!("{what} is null"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> FfiResult<&'a T> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::new(BeattyStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> FfiResult<()> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> FfiResult<()> {
    let c = CString::new(s).map_err(|_| Failure::new(BeattyStatus::InvalidValue, "string contains NUL"))?;
    write(out, c.into_raw(), "out")
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

fn narrow_i64(v: num_bigint::BigInt) -> FfiResult<i64> {
    v.to_i64()
        .ok_or_else(|| Failure::new(BeattyStatus::Overflow, "result does not fit in int64_t"))
}

/// Message for the most recent failed call on this thread, or NULL after a
/// successful one. Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn beatty_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn beatty_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a real literal such as `3/7`, `(-1+1*sqrt 5)/2` or `~0.718:e-2`.
/// `precision` sets the fractional digits of interval literals; 0 selects the default.
///
/// # Safety
/// `literal` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn beatty_real_parse(
    literal: *const c_char,
    precision: u32,
    out: *mut *mut BeattyReal,
) -> BeattyStatus {
    guard(|| {
        let s = text(literal, "literal")?;
        let value = if precision == 0 {
            s.parse::<RealValue>()?
        } else {
            RealValue::parse_with_precision(s, precision)?
        };
        write(out, boxed(BeattyReal(value)), "out")
    })
}

/// Releases a real. NULL is ignored.
///
/// # Safety
/// `x` must be NULL or a handle from [`beatty_real_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn beatty_real_free(x: *mut BeattyReal) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// Canonical text of a real.
///
/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn beatty_real_to_string(x: *const BeattyReal, out: *mut *mut c_char) -> BeattyStatus {
    guard(|| {
        let x = borrow(x, "x")?;
        write_string(out, x.0.to_string())
    })
}

/// `⌊x⌋`.
///
/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn beatty_real_floor(x: *const BeattyReal, out: *mut i64) -> BeattyStatus {
    guard(|| {
        let x = borrow(x, "x")?;
        write(out, narrow_i64(x.0.floor()?)?, "out")
    })
}

/// Writes -1, 0 or 1 as `a` is below, equal to or above `b`.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn beatty_real_compare(
    a: *const BeattyReal,
    b: *const BeattyReal,
    out: *mut i32,
) -> BeattyStatus {
    guard(|| {
        let (a, b) = (borrow(a, "a")?, borrow(b, "b")?);
        let sign = match a.0.compare(&b.0)? {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        };
        write(out, sign, "out")
    })
}

/// The sequence `⌊(n − offset)/alpha⌋`, `n ≥ 1`. The inputs are copied.
///
/// # Safety
/// `alpha` and `offset` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn beatty_sequence_new(
    alpha: *const BeattyReal,
    offset: *const BeattyReal,
    out: *mut *mut BeattySequence,
) -> BeattyStatus {
    guard(|| {
        let (alpha, offset) = (borrow(alpha, "alpha")?, borrow(offset, "offset")?);
        let spec = BeattySpec::new(alpha.0.clone(), offset.0.clone())?;
        write(out, boxed(BeattySequence(spec)), "out")
    })
}

/// Releases a sequence. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a handle from [`beatty_sequence_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn beatty_sequence_free(s: *mut BeattySequence) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// The `n`-th term, `n ≥ 1`.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn beatty_sequence_term(s: *const BeattySequence, n: i64, out: *mut i64) -> BeattyStatus {
    guard(|| {
        let s = borrow(s, "sequence")?;
        write(out, s.0.term(n)?, "out")
    })
}

/// Whether `k` is a term.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn beatty_sequence_contains(s: *const BeattySequence, k: i64, out: *mut bool) -> BeattyStatus {
    guard(|| {
        let s = borrow(s, "sequence")?;
        write(out, s.0.membership(k)?, "out")
    })
}

/// Number of terms below `k`.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn beatty_sequence_count_below(s: *const BeattySequence, k: i64, out: *mut u64) -> BeattyStatus {
    guard(|| {
        let s = borrow(s, "sequence")?;
        write(out, s.0.count_below(k)?, "out")
    })
}

/// Terms below `bound` in increasing order.
///
/// Always writes the total count to `len`. Copies the terms into `buf` when
/// `capacity` suffices and returns `BEATTY_STATUS_BUFFER_TOO_SMALL` otherwise;
/// `buf` may be NULL when `capacity` is 0.
///
/// # Safety
/// `s` must be a live handle, `buf` valid for `capacity` writes and `len` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn beatty_sequence_enumerate(
    s: *const BeattySequence,
    bound: i64,
    buf: *mut i64,
    capacity: usize,
    len: *mut usize,
) -> BeattyStatus {
    guard(|| {
        let s = borrow(s, "sequence")?;
        let terms = s.0.enumerate(bound)?;
        write(len, terms.len(), "len")?;
        if terms.len() > capacity {
            return Err(Failure::new(
                BeattyStatus::BufferTooSmall,
                format!("{} terms, capacity {capacity}", terms.len()),
            ));
        }
        if !terms.is_empty() {
            if buf.is_null() {
                return Err(null("buf"));
            }
            ptr::copy_nonoverlapping(terms.as_ptr(), buf, terms.len());
        }
        Ok(())
    })
}

/// The pair `(a, b)`. The inputs are copied.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn beatty_pair_new(
    a: *const BeattySequence,
    b: *const BeattySequence,
    out: *mut *mut BeattyPair,
) -> BeattyStatus {
    guard(|| {
        let (a, b) = (borrow(a, "a")?, borrow(b, "b")?);
        write(out, boxed(BeattyPair(TilePair::new(a.0.clone(), b.0.clone()))), "out")
    })
}

/// Releases a pair. NULL is ignored.
///
/// # Safety
/// `p` must be NULL or a handle from [`beatty_pair_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn beatty_pair_free(p: *mut BeattyPair) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Exact tiling verdict for ℕ as JSON: `{"tiles": ..., "failed": [...], ...}`.
/// With `integers` set, the verdict is for ℤ instead.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn beatty_pair_check_json(
    p: *const BeattyPair,
    integers: bool,
    out: *mut *mut c_char,
) -> BeattyStatus {
    guard(|| {
        let p = borrow(p, "pair")?;
        let verdict = if integers {
            check_conditions_z(&p.0)?
        } else {
            check_conditions(&p.0)?
        };
        write_string(out, verdict.to_json().to_string())
    })
}

/// Brute-force coverage of `[start, end]` as JSON. Without `integers` the
/// window is `[1, end]` and `start` is ignored.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn beatty_pair_verify_json(
    p: *const BeattyPair,
    integers: bool,
    start: i64,
    end: i64,
    out: *mut *mut c_char,
) -> BeattyStatus {
    guard(|| {
        let p = borrow(p, "pair")?;
        let report = if integers {
            brute_force_tiling_z(&p.0, start, end)?
        } else {
            brute_force_tiling(&p.0, end)?
        };
        write_string(out, report.to_json().to_string())
    })
}

/// The first `m` letters of the characteristic word of `alpha`, as `'0'`/`'1'`.
///
/// # Safety
/// `alpha` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn beatty_char_word(alpha: *const BeattyReal, m: usize, out: *mut *mut c_char) -> BeattyStatus {
    guard(|| {
        let alpha = borrow(alpha, "alpha")?;
        write_string(out, char_word(&alpha.0, m)?.to_string())
    })
}

/// Factorization of the length-`m` prefix into continuant-length prefixes, as JSON.
///
/// # Safety
/// `alpha` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn beatty_decompose_json(
    alpha: *const BeattyReal,
    m: u64,
    out: *mut *mut c_char,
) -> BeattyStatus {
    guard(|| {
        let alpha = borrow(alpha, "alpha")?;
        let d = Sturmian::new(&alpha.0)?.decompose(m)?;
        write_string(out, d.to_json().to_string())
    })
}

/// Ostrowski digits of `m` with respect to `alpha`, as JSON.
///
/// # Safety
/// `alpha` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn beatty_ostrowski_json(
    alpha: *const BeattyReal,
    m: u64,
    out: *mut *mut c_char,
) -> BeattyStatus {
    guard(|| {
        let alpha = borrow(alpha, "alpha")?;
        let cf = cf_expand(&alpha.0, CF_SEARCH_LIMIT)?;
        let digits = ostrowski_expand(m, &cf)?;
        let valid = validate_ostrowski(&digits, &cf);
        let json = format!(
            "{{\"m\":{m},\"digits\":[{}],\"repr\":{:?},\"valid\":{valid}}}",
            digits.digits().iter().map(u64::to_string).collect::<Vec<_>>().join(","),
            digits.to_string()
        );
        write_string(out, json)
    })
}
