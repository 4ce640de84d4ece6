//! C ABI over `ifp-core`.
//!
//! Objects cross the boundary as opaque handles that the caller releases with
//! the matching `*_free` function. Every fallible call returns an
//! [`IfpStatus`]; on failure, [`ifp_last_error`] describes what went wrong.
//! Strings returned through `char **` out-parameters are owned by the caller
//! and must be released with [`ifp_string_free`].
//!
//! Handles are immutable once created and may be shared between threads.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ifp_core::{decide, DecisionReport, Error, ErrorClass, OmegaSet, PairedFile, ProblemFile, ReportFile};

/// Status codes. The first four match the `ifp` command's exit statuses.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IfpStatus {
    Ok = 0,
    Validation = 1,
    Parse = 2,
    Domain = 3,
    NullArgument = 4,
    InvalidUtf8 = 5,
    Panic = 6,
    OutOfRange = 7,
}

/// An Ω-set.
pub struct IfpOmegaSet(OmegaSet);

/// The outcome of a decision, with NUL-terminated copies of the labels.
pub struct IfpReport {
    report: DecisionReport,
    labels: Vec<CString>,
}

/// Scalar results of a decision. Indices refer to universe order.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct IfpDecisionSummary {
    pub max_u: usize,
    pub max_mu: f64,
    pub min_v: usize,
    pub min_nu: f64,
    pub alpha: f64,
    pub beta: f64,
    pub alpha_prime: f64,
    pub beta_prime: f64,
    pub opportune: usize,
    /// Set when any selection step had to break a tie.
    pub tie: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

enum Failure {
    Core(Error),
    Null(&'static str),
    Utf8,
    Range(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> IfpStatus {
    LAST_ERROR.with(|slot| slot.borrow_mut().take());
    let (status, message) = match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => return IfpStatus::Ok,
        Ok(Err(Failure::Core(e))) => {
            let status = match e.class() {
                ErrorClass::Validation => IfpStatus::Validation,
                ErrorClass::Parse => IfpStatus::Parse,
                ErrorClass::Domain => IfpStatus::Domain,
            };
            (status, e.to_string())
        }
        Ok(Err(Failure::Null(what))) => (IfpStatus::NullArgument, format!("`{what}` is null")),
        Ok(Err(Failure::Utf8)) => (IfpStatus::InvalidUtf8, "input is not valid UTF-8".to_string()),
        Ok(Err(Failure::Range(i))) => (IfpStatus::OutOfRange, format!("index {i} is out of range")),
        Err(_) => (IfpStatus::Panic, "internal panic".to_string()),
    };
    set_error(message);
    status
}

unsafe fn borrow<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null(what))
}

unsafe fn text<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Utf8)
}

unsafe fn put<T>(out: *mut T, value: T, what: &'static str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null(what));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON never contains NUL").into_raw()
}

fn new_omega(set: OmegaSet) -> *mut IfpOmegaSet {
    Box::into_raw(Box::new(IfpOmegaSet(set)))
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next `ifp_*` call on the same thread.
#[no_mangle]
pub extern "C" fn ifp_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ifp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ifp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a problem file (JSON text). With `relaxed`, parameters outside the
/// parameter set may have non-empty approximations.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ifp_omega_from_json(
    json: *const c_char,
    relaxed: bool,
    out: *mut *mut IfpOmegaSet,
) -> IfpStatus {
    guard(|| {
        let set = ProblemFile::from_json(text(json, "json")?)?.to_omega(relaxed)?;
        put(out, new_omega(set), "out")
    })
}

/// Serializes in the problem-file format.
///
/// # Safety
/// `set` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ifp_omega_to_json(set: *const IfpOmegaSet, out: *mut *mut c_char) -> IfpStatus {
    guard(|| {
        let set = borrow(set, "set")?;
        put(out, owned_string(ProblemFile::from_omega(&set.0).to_json()), "out")
    })
}

/// # Safety
/// `set` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ifp_omega_free(set: *mut IfpOmegaSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ifp_omega_union(
    a: *const IfpOmegaSet,
    b: *const IfpOmegaSet,
    out: *mut *mut IfpOmegaSet,
) -> IfpStatus {
    guard(|| {
        let set = borrow(a, "a")?.0.union(&borrow(b, "b")?.0)?;
        put(out, new_omega(set), "out")
    })
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ifp_omega_intersection(
    a: *const IfpOmegaSet,
    b: *const IfpOmegaSet,
    out: *mut *mut IfpOmegaSet,
) -> IfpStatus {
    guard(|| {
        let set = borrow(a, "a")?.0.intersection(&borrow(b, "b")?.0)?;
        put(out, new_omega(set), "out")
    })
}

/// The result is relaxed.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ifp_omega_complement(a: *const IfpOmegaSet, out: *mut *mut IfpOmegaSet) -> IfpStatus {
    guard(|| {
        let set = borrow(a, "a")?.0.complement();
        put(out, new_omega(set), "out")
    })
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ifp_omega_subset(a: *const IfpOmegaSet, b: *const IfpOmegaSet, out: *mut bool) -> IfpStatus {
    guard(|| {
        let r = borrow(a, "a")?.0.is_subset(&borrow(b, "b")?.0)?;
        put(out, r, "out")
    })
}

/// Equality within the library tolerance (1e-9).
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ifp_omega_equal(a: *const IfpOmegaSet, b: *const IfpOmegaSet, out: *mut bool) -> IfpStatus {
    guard(|| {
        let r = borrow(a, "a")?.0.approx_eq(&borrow(b, "b")?.0)?;
        put(out, r, "out")
    })
}

/// ∧-product of the approximations, as JSON in the paired format.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ifp_and_product_json(
    a: *const IfpOmegaSet,
    b: *const IfpOmegaSet,
    out: *mut *mut c_char,
) -> IfpStatus {
    guard(|| {
        let p = borrow(a, "a")?.0.to_soft_set().and_product(&borrow(b, "b")?.0.to_soft_set())?;
        put(out, owned_string(PairedFile::from_paired(&p).to_json()), "out")
    })
}

/// ∨-product of the approximations, as JSON in the paired format.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ifp_or_product_json(
    a: *const IfpOmegaSet,
    b: *const IfpOmegaSet,
    out: *mut *mut c_char,
) -> IfpStatus {
    guard(|| {
        let p = borrow(a, "a")?.0.to_soft_set().or_product(&borrow(b, "b")?.0.to_soft_set())?;
        put(out, owned_string(PairedFile::from_paired(&p).to_json()), "out")
    })
}

/// Aggregates the Ω-set and selects the opportune alternative.
///
/// # Safety
/// `set` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ifp_decide(set: *const IfpOmegaSet, out: *mut *mut IfpReport) -> IfpStatus {
    guard(|| {
        let report = decide(&borrow(set, "set")?.0)?;
        let labels = report
            .aggregate
            .universe()
            .labels()
            .iter()
            .map(|l| CString::new(l.as_str()).unwrap_or_default())
            .collect();
        put(out, Box::into_raw(Box::new(IfpReport { report, labels })), "out")
    })
}

/// # Safety
/// `report` must be NULL or a handle from [`ifp_decide`] that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ifp_report_free(report: *mut IfpReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `report` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ifp_report_summary(report: *const IfpReport, out: *mut IfpDecisionSummary) -> IfpStatus {
    guard(|| {
        let r = &borrow(report, "report")?.report;
        let index = |l: &ifp_core::Label| r.aggregate.universe().index_of(l.as_str()).unwrap_or(usize::MAX);
        let summary = IfpDecisionSummary {
            max_u: index(&r.max_u),
            max_mu: r.max_mu,
            min_v: index(&r.min_v),
            min_nu: r.min_nu,
            alpha: r.alpha,
            beta: r.beta,
            alpha_prime: r.alpha_prime,
            beta_prime: r.beta_prime,
            opportune: index(&r.opportune),
            tie: r.ties.any(),
        };
        put(out, summary, "out")
    })
}

/// Number of alternatives in the report.
///
/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ifp_report_len(report: *const IfpReport) -> usize {
    report.as_ref().map_or(0, |r| r.labels.len())
}

/// Label of alternative `index`, or NULL when out of range. Borrowed from the
/// report; valid until it is freed.
///
/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ifp_report_label(report: *const IfpReport, index: usize) -> *const c_char {
    report
        .as_ref()
        .and_then(|r| r.labels.get(index))
        .map_or(ptr::null(), |s| s.as_ptr())
}

/// Aggregate degrees `(mu*, nu*)` of alternative `index`.
///
/// # Safety
/// `report` must be a live handle; `mu` and `nu` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ifp_report_aggregate_at(
    report: *const IfpReport,
    index: usize,
    mu: *mut f64,
    nu: *mut f64,
) -> IfpStatus {
    guard(|| {
        let r = borrow(report, "report")?;
        let v = *r.report.aggregate.as_set().values().get(index).ok_or(Failure::Range(index))?;
        put(mu, v.mu(), "mu")?;
        put(nu, v.nu(), "nu")
    })
}

/// The machine-format report with display columns at `precision` decimals.
///
/// # Safety
/// `report` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ifp_report_to_json(
    report: *const IfpReport,
    precision: u32,
    out: *mut *mut c_char,
) -> IfpStatus {
    guard(|| {
        let r = borrow(report, "report")?;
        put(out, owned_string(ReportFile::new(&r.report, precision).to_json()), "out")
    })
}
