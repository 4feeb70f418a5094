//! C ABI over `interval-xag`.
//!
//! Formulas are returned as opaque `IxFormula` handles and released with
//! [`ix_formula_free`]. Strings returned by the library are owned by the
//! caller and released with [`ix_string_free`]. Every fallible call returns an
//! [`IxStatus`]; on failure [`ix_last_error`] describes the cause for the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use interval_xag::export::{lower_to_netlist, to_bristol, to_json};
use interval_xag::oracle::{check_with_limit, DEFAULT_MAX_N};
use interval_xag::{interval_formula, predicted_mc, Error, Formula, IntervalSpec};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IxStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// `n` is outside 1..=62 or the bounds violate `a < b <= 2^n`.
    InvalidArgument = 2,
    /// The width exceeds the verification limit.
    WidthLimit = 3,
    /// Internal failure, including a caught panic.
    Internal = 4,
}

/// Output encoding for [`ix_formula_render`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IxFormat {
    Expr = 0,
    Bristol = 1,
    Json = 2,
}

/// Outcome of [`ix_verify`].
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct IxReport {
    pub equivalent: bool,
    pub has_counterexample: bool,
    /// Valid only when `has_counterexample` is set.
    pub counterexample: u64,
    pub actual: u32,
    pub predicted: u32,
    pub naive: u32,
    pub degree: u32,
}

/// Opaque synthesized circuit.
pub struct IxFormula {
    n: u32,
    formula: Formula,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(err: &Error) -> IxStatus {
    match err {
        Error::InvalidWidth(_) | Error::InvalidInterval { .. } | Error::ValueOutOfRange { .. } => {
            IxStatus::InvalidArgument
        }
        Error::WidthLimit { .. } => IxStatus::WidthLimit,
        _ => IxStatus::Internal,
    }
}

/// Runs `f`, recording errors and panics for `ix_last_error`.
fn guard(f: impl FnOnce() -> Result<(), IxStatus>) -> IxStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IxStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            IxStatus::Internal
        }
    }
}

fn fail(err: Error) -> IxStatus {
    set_error(err.to_string());
    status_of(&err)
}

fn null() -> IxStatus {
    set_error("null pointer argument");
    IxStatus::NullPointer
}

fn spec(n: u32, a: u64, b: u64) -> Result<IntervalSpec, IxStatus> {
    if n == 0 || n > interval_xag::bitconst::MAX_WIDTH {
        return Err(fail(Error::InvalidWidth(n)));
    }
    IntervalSpec::new(n, a, b).map_err(fail)
}

/// Synthesizes `[a <= x < b]` over `n` inputs. Pass `b = 2^n` for `[a <= x]`.
///
/// # Safety
/// `out` must be null or valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn ix_synth(n: u32, a: u64, b: u64, out: *mut *mut IxFormula) -> IxStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let spec = spec(n, a, b)?;
        let handle = Box::new(IxFormula {
            n,
            formula: interval_formula(&spec),
        });
        *out = Box::into_raw(handle);
        Ok(())
    })
}

/// Releases a handle from [`ix_synth`]. Null is ignored.
///
/// # Safety
/// `f` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ix_formula_free(f: *mut IxFormula) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Number of AND gates; 0 for a null handle.
///
/// # Safety
/// `f` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ix_formula_mult_cost(f: *const IxFormula) -> u32 {
    f.as_ref().map_or(0, |f| f.formula.mult_cost() as u32)
}

/// Evaluates the circuit on `x`, where bit `n - 1` of `x` feeds `x1`.
///
/// # Safety
/// `f` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ix_formula_eval(f: *const IxFormula, x: u64, out: *mut bool) -> IxStatus {
    guard(|| {
        let (Some(f), false) = (f.as_ref(), out.is_null()) else {
            return Err(null());
        };
        if f.n < 64 && x >> f.n != 0 {
            return Err(fail(Error::ValueOutOfRange {
                value: x,
                width: f.n,
            }));
        }
        let bits: Vec<bool> = (1..=f.n).map(|k| x >> (f.n - k) & 1 == 1).collect();
        *out = f.formula.eval(&bits).map_err(fail)?;
        Ok(())
    })
}

/// Renders the circuit as text. Free the result with [`ix_string_free`].
///
/// # Safety
/// `f` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ix_formula_render(
    f: *const IxFormula,
    format: IxFormat,
    out: *mut *mut c_char,
) -> IxStatus {
    guard(|| {
        let (Some(f), false) = (f.as_ref(), out.is_null()) else {
            return Err(null());
        };
        let text = match format {
            IxFormat::Expr => f.formula.to_string(),
            IxFormat::Bristol => {
                to_bristol(&lower_to_netlist(&f.formula, f.n as usize).map_err(fail)?)
            }
            IxFormat::Json => to_json(&lower_to_netlist(&f.formula, f.n as usize).map_err(fail)?),
        };
        let c = CString::new(text).map_err(|_| {
            set_error("rendered text contains a NUL byte");
            IxStatus::Internal
        })?;
        *out = c.into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ix_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// AND-gate count the construction achieves for the interval.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ix_predicted_mc(n: u32, a: u64, b: u64, out: *mut u32) -> IxStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        *out = predicted_mc(&spec(n, a, b)?);
        Ok(())
    })
}

/// Checks the synthesized circuit against brute force. `max_n = 0` selects the
/// default limit of 16.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ix_verify(
    n: u32,
    a: u64,
    b: u64,
    max_n: u32,
    out: *mut IxReport,
) -> IxStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let limit = if max_n == 0 { DEFAULT_MAX_N } else { max_n };
        let r = check_with_limit(&spec(n, a, b)?, limit).map_err(fail)?;
        *out = IxReport {
            equivalent: r.equivalent,
            has_counterexample: r.counterexample.is_some(),
            counterexample: r.counterexample.unwrap_or(0),
            actual: r.actual,
            predicted: r.predicted,
            naive: r.naive,
            degree: r.degree,
        };
        Ok(())
    })
}

/// Message for the last failed call on this thread; empty after success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ix_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Copies the last error message; convenience for Rust callers.
pub fn last_error() -> String {
    // SAFETY: ix_last_error always returns a live NUL-terminated buffer.
    unsafe { CStr::from_ptr(ix_last_error()) }
        .to_string_lossy()
        .into_owned()
}
