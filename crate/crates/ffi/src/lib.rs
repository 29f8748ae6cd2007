//! C interface to the schur9 engine.
//!
//! Every call returns a [`Schur9Status`]. Objects come back through out
//! pointers as opaque handles and are released with the matching `_free`
//! function. After a failing call, [`schur9_last_error`] describes what went
//! wrong on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use schur9::corollaries::Corollary;
use schur9::identities::{Case, VerifyOptions, VerifyReport};
use schur9::shapes::{Partition, ShiftedSkewShape, SkewShape, StrictPartition};
use schur9::tableaux::{qfun9, schur9};
use schur9::weights::Poly;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Schur9Status {
    /// The call succeeded; for verifications, both sides agreed.
    Ok = 0,
    /// A verification ran and the two sides differ.
    Different = 1,
    /// Bad shape, strip or name.
    InvalidArgument = 2,
    /// A required pointer was null or a string was not UTF-8.
    NullPointer = 3,
    /// Internal failure; the library caught a panic.
    Internal = 4,
}

/// Result of one verification.
pub struct Schur9Report {
    inner: VerifyReport,
}

/// An exact polynomial with integer coefficients.
pub struct Schur9Poly {
    inner: Poly,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

/// Message for the last failing call on this thread, or null. The pointer
/// stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn schur9_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn schur9_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

enum Fail {
    Null(&'static str),
    Invalid(schur9::Error),
}

impl From<schur9::Error> for Fail {
    fn from(e: schur9::Error) -> Self {
        Fail::Invalid(e)
    }
}

fn guard(f: impl FnOnce() -> Result<Schur9Status, Fail>) -> Schur9Status {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("{what} is null or not UTF-8"));
            Schur9Status::NullPointer
        }
        Ok(Err(Fail::Invalid(e))) => {
            set_error(format!("{}: {e}", e.kind()));
            Schur9Status::InvalidArgument
        }
        Err(_) => {
            set_error("internal error");
            Schur9Status::Internal
        }
    }
}

/// Reads a required string argument; null counts as missing.
unsafe fn text<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail::Null(what))
}

/// Reads an optional string argument; null means empty.
unsafe fn text_or_empty<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        Ok("")
    } else {
        text(p, what)
    }
}

fn parts(s: &str) -> schur9::Result<Vec<u32>> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| schur9::Error::Parse(format!("bad part {x:?} in {s:?}")))
        })
        .collect()
}

fn give<T>(out: *mut *mut T, v: T) {
    unsafe { *out = Box::into_raw(Box::new(v)) };
}

fn finish(report: VerifyReport, out: *mut *mut Schur9Report) -> Schur9Status {
    let status = if report.equal {
        Schur9Status::Ok
    } else {
        Schur9Status::Different
    };
    give(out, Schur9Report { inner: report });
    status
}

/// Verifies the decomposition identity for λ/μ cut by `strip`
/// (`row`, `col`, `hook`, `hook@M`, `inner`, `outer` or `profile:<cmin>:<EN...>`).
/// Partitions are comma separated; `mu` and `strip` may be null.
///
/// # Safety
/// String arguments must be null or point to NUL-terminated strings; `out`
/// must be a valid pointer. On success `*out` holds a report to free with
/// [`schur9_report_free`].
#[no_mangle]
pub unsafe extern "C" fn schur9_verify(
    lambda: *const c_char,
    mu: *const c_char,
    strip: *const c_char,
    n: u32,
    qfun: bool,
    perturb: bool,
    out: *mut *mut Schur9Report,
) -> Schur9Status {
    guard(|| {
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        let strip = text_or_empty(strip, "strip")?;
        let case = Case {
            lambda: text(lambda, "lambda")?.to_string(),
            mu: text_or_empty(mu, "mu")?.to_string(),
            strip: if strip.is_empty() {
                "row".into()
            } else {
                strip.to_string()
            },
            n,
            qfun,
        };
        let report = case.run(&VerifyOptions { perturb })?;
        Ok(finish(report, out))
    })
}

/// Runs a named corollary such as `jt`, `okada-inner` or `q-outer`.
///
/// # Safety
/// As for [`schur9_verify`].
#[no_mangle]
pub unsafe extern "C" fn schur9_corollary(
    name: *const c_char,
    lambda: *const c_char,
    mu: *const c_char,
    n: u32,
    out: *mut *mut Schur9Report,
) -> Schur9Status {
    guard(|| {
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        let c: Corollary = text(name, "name")?.parse()?;
        let report = c.run(
            text(lambda, "lambda")?,
            text_or_empty(mu, "mu")?,
            n,
            &VerifyOptions::default(),
        )?;
        Ok(finish(report, out))
    })
}

/// Whether both sides of the report agree. False for a null report.
///
/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn schur9_report_equal(report: *const Schur9Report) -> bool {
    report.as_ref().is_some_and(|r| r.inner.equal)
}

/// The report as JSON, without timings. Free with [`schur9_string_free`].
///
/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn schur9_report_json(report: *const Schur9Report) -> *mut c_char {
    let Some(r) = report.as_ref() else {
        set_error("report is null");
        return ptr::null_mut();
    };
    CString::new(r.inner.to_json(false).to_string()).map_or(ptr::null_mut(), CString::into_raw)
}

/// Copies of the two sides of a report. Either out pointer may be null.
///
/// # Safety
/// `report` must be a live report; non-null out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn schur9_report_sides(
    report: *const Schur9Report,
    lhs: *mut *mut Schur9Poly,
    rhs: *mut *mut Schur9Poly,
) -> Schur9Status {
    guard(|| {
        let r = report.as_ref().ok_or(Fail::Null("report"))?;
        if !lhs.is_null() {
            give(
                lhs,
                Schur9Poly {
                    inner: r.inner.lhs.clone(),
                },
            );
        }
        if !rhs.is_null() {
            give(
                rhs,
                Schur9Poly {
                    inner: r.inner.rhs.clone(),
                },
            );
        }
        Ok(Schur9Status::Ok)
    })
}

/// # Safety
/// `report` must be null or a report not yet freed.
#[no_mangle]
pub unsafe extern "C" fn schur9_report_free(report: *mut Schur9Report) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// The tableau sum for λ/μ in `n` levels: a skew Schur function, or a
/// Q-function of the shifted shape when `qfun` is set.
///
/// # Safety
/// String arguments must be null (for `mu`) or NUL-terminated; `out` must be
/// valid. Free the result with [`schur9_poly_free`].
#[no_mangle]
pub unsafe extern "C" fn schur9_tableau_sum(
    lambda: *const c_char,
    mu: *const c_char,
    n: u32,
    qfun: bool,
    out: *mut *mut Schur9Poly,
) -> Schur9Status {
    guard(|| {
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        let outer = parts(text(lambda, "lambda")?)?;
        let inner = parts(text_or_empty(mu, "mu")?)?;
        let p = if qfun {
            qfun9(
                &ShiftedSkewShape::new(StrictPartition::new(outer)?, StrictPartition::new(inner)?)?,
                n,
            )
        } else {
            schur9(
                &SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?,
                n,
            )
        };
        give(out, Schur9Poly { inner: p });
        Ok(Schur9Status::Ok)
    })
}

/// Number of monomials with non-zero coefficient.
///
/// # Safety
/// `poly` must be null or a live polynomial.
#[no_mangle]
pub unsafe extern "C" fn schur9_poly_num_terms(poly: *const Schur9Poly) -> usize {
    poly.as_ref().map_or(0, |p| p.inner.num_terms())
}

/// # Safety
/// Both arguments must be null or live polynomials.
#[no_mangle]
pub unsafe extern "C" fn schur9_poly_equal(a: *const Schur9Poly, b: *const Schur9Poly) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.inner == b.inner,
        _ => false,
    }
}

/// Text form of the polynomial. Free with [`schur9_string_free`].
///
/// # Safety
/// `poly` must be null or a live polynomial.
#[no_mangle]
pub unsafe extern "C" fn schur9_poly_to_string(poly: *const Schur9Poly) -> *mut c_char {
    let Some(p) = poly.as_ref() else {
        set_error("poly is null");
        return ptr::null_mut();
    };
    CString::new(p.inner.to_string()).map_or(ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `poly` must be null or a polynomial not yet freed.
#[no_mangle]
pub unsafe extern "C" fn schur9_poly_free(poly: *mut Schur9Poly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn schur9_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
