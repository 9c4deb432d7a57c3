//! C ABI for the `intdiff` engine.
//!
//! Elements and ideals cross the boundary as opaque handles owned by the
//! caller and released with the matching `_free` function. Strings returned
//! through `char **` are released with [`intdiff_string_free`]. Every fallible
//! call returns an [`IntdiffStatus`]; on failure a description is available
//! from [`intdiff_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};

use intdiff::lattice::{count_ideals, IdealAntichain};
use intdiff::parser::{format_operator, parse_operator};
use intdiff::tensor::InElement;
use intdiff::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntdiffStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    DomainError = 4,
    Panic = 5,
}

/// Opaque element of `𝕀ₙ` or of one of its prime quotients.
pub struct IntdiffElement(InElement);

/// Opaque ideal of `𝕀ₙ` in antichain form.
pub struct IntdiffIdeal(IdealAntichain);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: IntdiffStatus, msg: &str) -> IntdiffStatus {
    set_error(msg);
    status
}

fn from_engine(e: Error) -> IntdiffStatus {
    let status = if e.is_parse_error() {
        IntdiffStatus::ParseError
    } else {
        IntdiffStatus::DomainError
    };
    fail(status, &e.to_string())
}

fn guard<F: FnOnce() -> IntdiffStatus + UnwindSafe>(f: F) -> IntdiffStatus {
    catch_unwind(f).unwrap_or_else(|_| fail(IntdiffStatus::Panic, "internal panic"))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, IntdiffStatus> {
    if s.is_null() {
        return Err(fail(IntdiffStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(IntdiffStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> IntdiffStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            IntdiffStatus::Ok
        }
        Err(_) => fail(IntdiffStatus::DomainError, "output contains NUL"),
    }
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

macro_rules! nonnull {
    ($($p:expr),+) => {
        if $($p.is_null())||+ {
            return fail(IntdiffStatus::NullPointer, "null pointer argument");
        }
    };
}

/// Message for the most recent failure on this thread; empty if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn intdiff_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn intdiff_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an operator over `n` tensor factors.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn intdiff_element_parse(
    src: *const c_char,
    n: usize,
    out: *mut *mut IntdiffElement,
) -> IntdiffStatus {
    guard(|| {
        nonnull!(out);
        let src = match read_str(src) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match parse_operator(src, n) {
            Ok(a) => {
                *out = boxed(IntdiffElement(a));
                IntdiffStatus::Ok
            }
            Err(e) => from_engine(e),
        }
    })
}

/// Canonical text of an element.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn intdiff_element_format(
    a: *const IntdiffElement,
    out: *mut *mut c_char,
) -> IntdiffStatus {
    guard(|| {
        nonnull!(a, out);
        write_string(out, format_operator(&(*a).0))
    })
}

unsafe fn binary(
    a: *const IntdiffElement,
    b: *const IntdiffElement,
    out: *mut *mut IntdiffElement,
    op: fn(&InElement, &InElement) -> intdiff::Result<InElement>,
) -> IntdiffStatus {
    guard(|| {
        nonnull!(a, b, out);
        match op(&(*a).0, &(*b).0) {
            Ok(c) => {
                *out = boxed(IntdiffElement(c));
                IntdiffStatus::Ok
            }
            Err(e) => from_engine(e),
        }
    })
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn intdiff_element_add(
    a: *const IntdiffElement,
    b: *const IntdiffElement,
    out: *mut *mut IntdiffElement,
) -> IntdiffStatus {
    binary(a, b, out, InElement::try_add)
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn intdiff_element_mul(
    a: *const IntdiffElement,
    b: *const IntdiffElement,
    out: *mut *mut IntdiffElement,
) -> IntdiffStatus {
    binary(a, b, out, InElement::try_mul)
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn intdiff_element_involution(
    a: *const IntdiffElement,
    out: *mut *mut IntdiffElement,
) -> IntdiffStatus {
    guard(|| {
        nonnull!(a, out);
        *out = boxed(IntdiffElement((*a).0.involution()));
        IntdiffStatus::Ok
    })
}

/// Image modulo the prime indexed by the 1-based factor list `primes`.
///
/// # Safety
/// `a` must be a live handle; `primes` must point to `len` entries (or be
/// null when `len` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn intdiff_element_project(
    a: *const IntdiffElement,
    primes: *const usize,
    len: usize,
    out: *mut *mut IntdiffElement,
) -> IntdiffStatus {
    guard(|| {
        nonnull!(a, out);
        let primes: &[usize] = if len == 0 {
            &[]
        } else if primes.is_null() {
            return fail(IntdiffStatus::NullPointer, "null prime list");
        } else {
            std::slice::from_raw_parts(primes, len)
        };
        match (*a).0.project_modulo_prime(primes) {
            Ok(p) => {
                *out = boxed(IntdiffElement(p));
                IntdiffStatus::Ok
            }
            Err(e) => from_engine(e),
        }
    })
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn intdiff_element_equal(
    a: *const IntdiffElement,
    b: *const IntdiffElement,
    out: *mut bool,
) -> IntdiffStatus {
    guard(|| {
        nonnull!(a, b, out);
        *out = (*a).0 == (*b).0;
        IntdiffStatus::Ok
    })
}

/// Whether `a` lies in the ideal `c`.
///
/// # Safety
/// `a`, `c` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn intdiff_element_is_member(
    a: *const IntdiffElement,
    c: *const IntdiffIdeal,
    out: *mut bool,
) -> IntdiffStatus {
    guard(|| {
        nonnull!(a, c, out);
        match (*a).0.ideal_membership(&(*c).0) {
            Ok(v) => {
                *out = v;
                IntdiffStatus::Ok
            }
            Err(e) => from_engine(e),
        }
    })
}

/// # Safety
/// `a` must come from this library and not have been freed, or be null.
#[no_mangle]
pub unsafe extern "C" fn intdiff_element_free(a: *mut IntdiffElement) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Parses an antichain such as `{01,10}` over `n` factors.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn intdiff_ideal_parse(
    src: *const c_char,
    n: usize,
    out: *mut *mut IntdiffIdeal,
) -> IntdiffStatus {
    guard(|| {
        nonnull!(out);
        let src = match read_str(src) {
            Ok(s) => s,
            Err(st) => return st,
        };
        if n == 0 || n > 63 {
            return fail(IntdiffStatus::DomainError, "n must be in 1..=63");
        }
        match IdealAntichain::parse(src, n) {
            Ok(c) => {
                *out = boxed(IntdiffIdeal(c));
                IntdiffStatus::Ok
            }
            Err(e) => from_engine(e),
        }
    })
}

unsafe fn ideal_binary(
    a: *const IntdiffIdeal,
    b: *const IntdiffIdeal,
    out: *mut *mut IntdiffIdeal,
    op: fn(&IdealAntichain, &IdealAntichain) -> intdiff::Result<IdealAntichain>,
) -> IntdiffStatus {
    guard(|| {
        nonnull!(a, b, out);
        match op(&(*a).0, &(*b).0) {
            Ok(c) => {
                *out = boxed(IntdiffIdeal(c));
                IntdiffStatus::Ok
            }
            Err(e) => from_engine(e),
        }
    })
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn intdiff_ideal_sum(
    a: *const IntdiffIdeal,
    b: *const IntdiffIdeal,
    out: *mut *mut IntdiffIdeal,
) -> IntdiffStatus {
    ideal_binary(a, b, out, IdealAntichain::sum)
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn intdiff_ideal_product(
    a: *const IntdiffIdeal,
    b: *const IntdiffIdeal,
    out: *mut *mut IntdiffIdeal,
) -> IntdiffStatus {
    ideal_binary(a, b, out, IdealAntichain::product)
}

/// Whether `a ⊆ b`.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn intdiff_ideal_includes(
    a: *const IntdiffIdeal,
    b: *const IntdiffIdeal,
    out: *mut bool,
) -> IntdiffStatus {
    guard(|| {
        nonnull!(a, b, out);
        match (*a).0.includes_in(&(*b).0) {
            Ok(v) => {
                *out = v;
                IntdiffStatus::Ok
            }
            Err(e) => from_engine(e),
        }
    })
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn intdiff_ideal_format(a: *const IntdiffIdeal, out: *mut *mut c_char) -> IntdiffStatus {
    guard(|| {
        nonnull!(a, out);
        write_string(out, (*a).0.to_string())
    })
}

/// # Safety
/// `a` must come from this library and not have been freed, or be null.
#[no_mangle]
pub unsafe extern "C" fn intdiff_ideal_free(a: *mut IntdiffIdeal) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Number of ideals of `𝕀ₙ` (the Dedekind number), for `1 ≤ n ≤ 6`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn intdiff_dedekind(n: usize, out: *mut u64) -> IntdiffStatus {
    guard(|| {
        nonnull!(out);
        match count_ideals(n) {
            Ok(v) => {
                *out = v;
                IntdiffStatus::Ok
            }
            Err(e) => from_engine(e),
        }
    })
}
