//! C ABI over `quaternary-forms`.
//!
//! Every function returns a [`QfStatus`]; results come back through out
//! pointers. Series and classification results are opaque handles that must
//! be released with the matching `*_free` function. After a non-OK status,
//! `qf_last_error_message` describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use quaternary_forms::classify::{
    classify_all, escalator_passes, first_gap, ternary_first_gap, ClassificationReport,
    EscalatorVerdict, Form, TernaryGap,
};
use quaternary_forms::exclusions::{excluded_for, verify_lemma, LemmaId};
use quaternary_forms::identities::{
    verify_base_identities, verify_coefficient_relations, RelationCase,
};
use quaternary_forms::qseries::{hex_theta_series, phi_series, psi_series};
use quaternary_forms::repcount::{count_hex, count_quaternary, count_ternary_mixed};
use quaternary_forms::{Error, QuaternaryForm, TernaryMixedForm, TruncatedSeries};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    UnknownId = 3,
    OrderMismatch = 4,
    OutOfRange = 5,
    Panic = 6,
}

/// Truncated integer power series.
pub struct QfSeries(TruncatedSeries);

/// Result of a classification scan.
pub struct QfClassification(ClassificationReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: QfStatus, msg: impl Into<String>) -> QfStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> QfStatus {
    let status = match e {
        Error::OrderMismatch { .. } => QfStatus::OrderMismatch,
        Error::UnknownLemma(_) | Error::UnknownCase(_) => QfStatus::UnknownId,
        _ => QfStatus::InvalidArgument,
    };
    fail(status, e.to_string())
}

/// Runs `f`, turning panics into `QfStatus::Panic`.
fn guard(f: impl FnOnce() -> QfStatus) -> QfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            fail(QfStatus::Panic, msg)
        }
    }
}

macro_rules! out {
    ($ptr:expr) => {
        match unsafe { $ptr.as_mut() } {
            Some(r) => r,
            None => return fail(QfStatus::NullPointer, concat!("`", stringify!($ptr), "` is null")),
        }
    };
}

macro_rules! handle {
    ($ptr:expr) => {
        match unsafe { $ptr.as_ref() } {
            Some(r) => r,
            None => return fail(QfStatus::NullPointer, concat!("`", stringify!($ptr), "` is null")),
        }
    };
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, QfStatus> {
    if s.is_null() {
        return Err(fail(QfStatus::NullPointer, "string argument is null"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(QfStatus::InvalidArgument, "string argument is not UTF-8"))
}

fn quaternary(a: u64, b: u64, c: u64) -> Result<QuaternaryForm, QfStatus> {
    QuaternaryForm::normalized(a, b, c).map_err(from_error)
}

fn boxed<T>(value: T, out: &mut *mut T) -> QfStatus {
    *out = Box::into_raw(Box::new(value));
    QfStatus::Ok
}

/// Message for the last non-OK status on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn qf_status_str(status: QfStatus) -> *const c_char {
    let s: &'static CStr = match status {
        QfStatus::Ok => c"ok",
        QfStatus::NullPointer => c"null pointer",
        QfStatus::InvalidArgument => c"invalid argument",
        QfStatus::UnknownId => c"unknown id",
        QfStatus::OrderMismatch => c"truncation order mismatch",
        QfStatus::OutOfRange => c"index out of range",
        QfStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

// ---- counts ----

/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qf_count_hex(n: u64, out: *mut u64) -> QfStatus {
    guard(|| {
        *out!(out) = count_hex(n);
        QfStatus::Ok
    })
}

/// Representations of `n` by `a x^2 + c (y^2 + yz + z^2)`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qf_count_ternary_mixed(a: u64, c: u64, n: u64, out: *mut u64) -> QfStatus {
    guard(|| {
        let out = out!(out);
        match TernaryMixedForm::new(a, c) {
            Ok(f) => {
                *out = count_ternary_mixed(f, n);
                QfStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Representations of `n` by `a x^2 + b y^2 + c (z^2 + zw + w^2)`. `a` and
/// `b` may come in either order.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qf_count_quaternary(
    a: u64,
    b: u64,
    c: u64,
    n: u64,
    out: *mut u64,
) -> QfStatus {
    guard(|| {
        let out = out!(out);
        match quaternary(a, b, c) {
            Ok(f) => {
                *out = count_quaternary(f, n);
                QfStatus::Ok
            }
            Err(s) => s,
        }
    })
}

// ---- series ----

fn theta(kind: fn(usize) -> TruncatedSeries, order: u64, out: *mut *mut QfSeries) -> QfStatus {
    guard(|| {
        let out = out!(out);
        boxed(QfSeries(kind(order as usize)), out)
    })
}

/// # Safety
/// `out` must be null or valid for writes. Free the result with
/// `qf_series_free`.
#[no_mangle]
pub unsafe extern "C" fn qf_series_phi(order: u64, out: *mut *mut QfSeries) -> QfStatus {
    theta(phi_series, order, out)
}

/// # Safety
/// See `qf_series_phi`.
#[no_mangle]
pub unsafe extern "C" fn qf_series_psi(order: u64, out: *mut *mut QfSeries) -> QfStatus {
    theta(psi_series, order, out)
}

/// # Safety
/// See `qf_series_phi`.
#[no_mangle]
pub unsafe extern "C" fn qf_series_hex(order: u64, out: *mut *mut QfSeries) -> QfStatus {
    theta(hex_theta_series, order, out)
}

/// # Safety
/// `series` must be null or a live handle; `out` must be null or valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn qf_series_order(series: *const QfSeries, out: *mut u64) -> QfStatus {
    guard(|| {
        let s = handle!(series);
        *out!(out) = s.0.order() as u64;
        QfStatus::Ok
    })
}

/// Coefficient of `q^n`.
///
/// # Safety
/// Same as `qf_series_order`.
#[no_mangle]
pub unsafe extern "C" fn qf_series_coeff(
    series: *const QfSeries,
    n: u64,
    out: *mut i64,
) -> QfStatus {
    guard(|| {
        let s = handle!(series);
        let out = out!(out);
        match s.0.coeffs().get(n as usize) {
            Some(&c) => {
                *out = c;
                QfStatus::Ok
            }
            None => fail(
                QfStatus::OutOfRange,
                format!("index {n} exceeds order {}", s.0.order()),
            ),
        }
    })
}

fn binary(
    x: *const QfSeries,
    y: *const QfSeries,
    out: *mut *mut QfSeries,
    op: fn(&TruncatedSeries, &TruncatedSeries) -> quaternary_forms::Result<TruncatedSeries>,
) -> QfStatus {
    guard(|| {
        let x = handle!(x);
        let y = handle!(y);
        let out = out!(out);
        match op(&x.0, &y.0) {
            Ok(s) => boxed(QfSeries(s), out),
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `x`, `y` must be null or live handles; `out` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qf_series_add(
    x: *const QfSeries,
    y: *const QfSeries,
    out: *mut *mut QfSeries,
) -> QfStatus {
    binary(x, y, out, TruncatedSeries::add)
}

/// Truncated product.
///
/// # Safety
/// See `qf_series_add`.
#[no_mangle]
pub unsafe extern "C" fn qf_series_mul(
    x: *const QfSeries,
    y: *const QfSeries,
    out: *mut *mut QfSeries,
) -> QfStatus {
    binary(x, y, out, TruncatedSeries::mul)
}

/// `k * x`.
///
/// # Safety
/// `x` must be null or a live handle; `out` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qf_series_scale(
    k: i64,
    x: *const QfSeries,
    out: *mut *mut QfSeries,
) -> QfStatus {
    guard(|| {
        let x = handle!(x);
        boxed(QfSeries(x.0.scale(k)), out!(out))
    })
}

/// `q^k * x`.
///
/// # Safety
/// See `qf_series_scale`.
#[no_mangle]
pub unsafe extern "C" fn qf_series_shift(
    k: u64,
    x: *const QfSeries,
    out: *mut *mut QfSeries,
) -> QfStatus {
    guard(|| {
        let x = handle!(x);
        let k = usize::try_from(k).unwrap_or(usize::MAX);
        boxed(QfSeries(x.0.shift(k)), out!(out))
    })
}

/// `x(q^m)`, `m >= 1`.
///
/// # Safety
/// See `qf_series_scale`.
#[no_mangle]
pub unsafe extern "C" fn qf_series_substitute_power(
    m: u64,
    x: *const QfSeries,
    out: *mut *mut QfSeries,
) -> QfStatus {
    guard(|| {
        let x = handle!(x);
        let out = out!(out);
        if m == 0 {
            return fail(QfStatus::InvalidArgument, "substitution exponent must be positive");
        }
        let m = usize::try_from(m).unwrap_or(usize::MAX);
        boxed(QfSeries(x.0.substitute_power(m)), out)
    })
}

/// # Safety
/// `series` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qf_series_free(series: *mut QfSeries) {
    if !series.is_null() {
        drop(Box::from_raw(series));
    }
}

// ---- exclusions and identities ----

/// Whether `n` is in the exclusion set of `lemma` (e.g. "P11", "L1412").
///
/// # Safety
/// `lemma` must be null or a NUL-terminated string; `out` null or valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn qf_excluded_for(lemma: *const c_char, n: u64, out: *mut bool) -> QfStatus {
    guard(|| {
        let out = out!(out);
        let id = match read_str(lemma).map(str::parse::<LemmaId>) {
            Ok(Ok(id)) => id,
            Ok(Err(e)) => return from_error(e),
            Err(s) => return s,
        };
        *out = excluded_for(id, n);
        QfStatus::Ok
    })
}

/// Checks a lemma up to `bound`. Writes the number of disagreeing `n` and
/// the smallest one (`UINT64_MAX` when there are none).
///
/// # Safety
/// `lemma` must be null or a NUL-terminated string; out pointers null or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qf_verify_lemma(
    lemma: *const c_char,
    bound: u64,
    discrepancies: *mut u64,
    first_discrepancy: *mut u64,
) -> QfStatus {
    guard(|| {
        let count = out!(discrepancies);
        let first = out!(first_discrepancy);
        let id = match read_str(lemma).map(str::parse::<LemmaId>) {
            Ok(Ok(id)) => id,
            Ok(Err(e)) => return from_error(e),
            Err(s) => return s,
        };
        let report = verify_lemma(id, bound);
        *count = report.discrepancies.len() as u64;
        *first = report.discrepancies.first().map_or(u64::MAX, |d| d.n);
        QfStatus::Ok
    })
}

/// Checks `"base"` or one of `"C1a"`, `"C1b"`, `"C3"`, `"C4"` to `order`.
/// `verified` is true when every check holds (and, for relations, both
/// routes agree).
///
/// # Safety
/// `case_id` must be null or a NUL-terminated string; `verified` null or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qf_verify_identities(
    case_id: *const c_char,
    order: u64,
    verified: *mut bool,
) -> QfStatus {
    guard(|| {
        let out = out!(verified);
        let case = match read_str(case_id) {
            Ok(s) => s,
            Err(s) => return s,
        };
        *out = if case == "base" {
            let (one, two) = verify_base_identities(order);
            one.verified() && two.verified()
        } else {
            match case.parse::<RelationCase>() {
                Ok(c) => verify_coefficient_relations(c, order).verified(),
                Err(e) => return from_error(e),
            }
        };
        QfStatus::Ok
    })
}

// ---- universality ----

/// Smallest `n <= bound` not represented by the quaternary form. `found`
/// is false when there is none.
///
/// # Safety
/// Out pointers must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qf_first_gap(
    a: u64,
    b: u64,
    c: u64,
    bound: u64,
    found: *mut bool,
    gap: *mut u64,
) -> QfStatus {
    guard(|| {
        let found = out!(found);
        let gap = out!(gap);
        let form = match quaternary(a, b, c) {
            Ok(f) => f,
            Err(s) => return s,
        };
        let g = first_gap(Form::Quaternary(form), bound);
        *found = g.is_some();
        *gap = g.unwrap_or(0);
        QfStatus::Ok
    })
}

/// Smallest `n <= bound` not represented by `a x^2 + c (y^2 + yz + z^2)`.
///
/// # Safety
/// Out pointers must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qf_ternary_first_gap(
    a: u64,
    c: u64,
    bound: u64,
    found: *mut bool,
    gap: *mut u64,
) -> QfStatus {
    guard(|| {
        let found = out!(found);
        let gap = out!(gap);
        let form = match TernaryMixedForm::new(a, c) {
            Ok(f) => f,
            Err(e) => return from_error(e),
        };
        match ternary_first_gap(form, bound) {
            TernaryGap::Gap { n } => {
                *found = true;
                *gap = n;
            }
            TernaryGap::Inconclusive { .. } => {
                *found = false;
                *gap = 0;
            }
        }
        QfStatus::Ok
    })
}

/// Whether the form represents 1, 2, 3, 5, 6 and 10. On failure `witness`
/// is the smallest of them that is missed, otherwise 0.
///
/// # Safety
/// Out pointers must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qf_escalator(
    a: u64,
    b: u64,
    c: u64,
    passed: *mut bool,
    witness: *mut u64,
) -> QfStatus {
    guard(|| {
        let passed = out!(passed);
        let witness = out!(witness);
        let form = match quaternary(a, b, c) {
            Ok(f) => f,
            Err(s) => return s,
        };
        match escalator_passes(form) {
            EscalatorVerdict::Pass => {
                *passed = true;
                *witness = 0;
            }
            EscalatorVerdict::Fail { witness: w } => {
                *passed = false;
                *witness = w;
            }
        }
        QfStatus::Ok
    })
}

/// Classifies the box `a <= a_max`, `a <= b <= b_max`, `c <= c_max`.
///
/// # Safety
/// `out` must be null or valid for writes. Free the result with
/// `qf_classification_free`.
#[no_mangle]
pub unsafe extern "C" fn qf_classify(
    a_max: u64,
    b_max: u64,
    c_max: u64,
    bound: u64,
    out: *mut *mut QfClassification,
) -> QfStatus {
    guard(|| {
        let out = out!(out);
        match classify_all(a_max, b_max, c_max, bound) {
            Ok(r) => boxed(QfClassification(r), out),
            Err(e) => from_error(e),
        }
    })
}

/// Number of universal triples found.
///
/// # Safety
/// `report` must be null or a live handle; `out` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qf_classification_len(
    report: *const QfClassification,
    out: *mut u64,
) -> QfStatus {
    guard(|| {
        let r = handle!(report);
        *out!(out) = r.0.universal_triples.len() as u64;
        QfStatus::Ok
    })
}

/// The `index`-th universal triple, ordered by `(c, a, b)`.
///
/// # Safety
/// `report` must be null or a live handle; out pointers null or valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn qf_classification_get(
    report: *const QfClassification,
    index: u64,
    a: *mut u64,
    b: *mut u64,
    c: *mut u64,
) -> QfStatus {
    guard(|| {
        let r = handle!(report);
        let (a, b, c) = (out!(a), out!(b), out!(c));
        match r.0.universal_triples.get(index as usize) {
            Some(&(x, y, z)) => {
                (*a, *b, *c) = (x, y, z);
                QfStatus::Ok
            }
            None => fail(QfStatus::OutOfRange, format!("no triple at index {index}")),
        }
    })
}

/// Number of triples where the scan and the escalator test disagree.
///
/// # Safety
/// See `qf_classification_len`.
#[no_mangle]
pub unsafe extern "C" fn qf_classification_violations(
    report: *const QfClassification,
    out: *mut u64,
) -> QfStatus {
    guard(|| {
        let r = handle!(report);
        *out!(out) = r.0.theorem_violations.len() as u64;
        QfStatus::Ok
    })
}

/// # Safety
/// `report` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qf_classification_free(report: *mut QfClassification) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
