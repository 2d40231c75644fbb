//! C interface to the workbench.
//!
//! Documents are opaque handles created by [`etale_document_parse`] and
//! released with [`etale_document_free`]. Reports and documents come back as
//! JSON strings owned by the caller, released with [`etale_string_free`].
//! Every call returns an [`EtaleStatus`]; on anything other than `Ok` or
//! `CheckFailed`, [`etale_last_error`] describes what went wrong.

use etale_core::functors::{c_object, omega_object};
use etale_core::workbench::{
    adjunction_stage, chi_roundtrip, crm_stage, json_summary, omega_roundtrip, parse_document, rqf_document, rqf_of,
    serialize_document, topcat_document, topcat_of, validate_document, Body, Document, Section,
};
use etale_core::{Error, Limits, Report};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EtaleStatus {
    Ok = 0,
    CheckFailed = 1,
    InputError = 2,
    BoundExceeded = 3,
    NullPointer = 4,
    InvalidUtf8 = 5,
    Panic = 6,
}

/// Size bounds; pass `NULL` wherever a `const EtaleLimits *` is accepted to
/// use the defaults.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EtaleLimits {
    pub max_arrows: usize,
    pub max_elements: usize,
    pub hom_arrows: usize,
    pub hom_elements: usize,
    pub hom_size: usize,
}

impl From<Limits> for EtaleLimits {
    fn from(l: Limits) -> Self {
        EtaleLimits {
            max_arrows: l.max_arrows,
            max_elements: l.max_elements,
            hom_arrows: l.hom_arrows,
            hom_elements: l.hom_elements,
            hom_size: l.hom_size,
        }
    }
}

impl From<EtaleLimits> for Limits {
    fn from(l: EtaleLimits) -> Self {
        Limits {
            max_arrows: l.max_arrows,
            max_elements: l.max_elements,
            hom_arrows: l.hom_arrows,
            hom_elements: l.hom_elements,
            hom_size: l.hom_size,
        }
    }
}

/// A parsed, range-checked document.
pub struct EtaleDocument(Document);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let text = CString::new(message.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn status_of(e: &Error) -> EtaleStatus {
    match e {
        Error::Syntax { .. } | Error::Semantic { .. } | Error::Io(_) => EtaleStatus::InputError,
        Error::BoundExceeded { .. } => EtaleStatus::BoundExceeded,
        Error::Rejected { .. } => EtaleStatus::CheckFailed,
    }
}

enum Failure {
    Status(EtaleStatus, String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn guarded(f: impl FnOnce() -> Result<EtaleStatus, Failure>) -> EtaleStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => {
            if status == EtaleStatus::Ok {
                set_error("");
            }
            status
        }
        Ok(Err(Failure::Status(status, message))) => {
            set_error(message);
            status
        }
        Ok(Err(Failure::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            EtaleStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure::Status(EtaleStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure::Status(EtaleStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn document<'a>(p: *const EtaleDocument, what: &str) -> Result<&'a Document, Failure> {
    p.as_ref().map(|d| &d.0).ok_or_else(|| null(what))
}

unsafe fn limits(p: *const EtaleLimits) -> Limits {
    p.as_ref().map_or_else(Limits::default, |l| (*l).into())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|e| Failure::Status(EtaleStatus::InvalidUtf8, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn put_report(
    out: *mut *mut c_char,
    instance: &str,
    stage: &'static str,
    report: Report,
) -> Result<EtaleStatus, Failure> {
    let ok = report.is_pass();
    let section = Section {
        instance: instance.to_owned(),
        stage,
        report,
        millis: 0,
    };
    let json = serde_json::to_string(&json_summary(&[section], ok, false)).expect("plain data");
    put_string(out, json)?;
    Ok(if ok { EtaleStatus::Ok } else { EtaleStatus::CheckFailed })
}

fn rejected_report(e: Error) -> Result<Report, Failure> {
    match e {
        Error::Rejected { report, .. } => Ok(report),
        e => Err(Failure::Core(e)),
    }
}

/// Default size bounds.
#[no_mangle]
pub extern "C" fn etale_limits_default() -> EtaleLimits {
    Limits::default().into()
}

/// Message for the last failed call on this thread, or an empty string. The
/// pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn etale_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a NUL-terminated JSON document into `*out`.
///
/// # Safety
/// `text` must be NULL or a valid NUL-terminated string; `out` must be NULL or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn etale_document_parse(text: *const c_char, out: *mut *mut EtaleDocument) -> EtaleStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let doc = parse_document(self::text(text, "text")?)?;
        *out = Box::into_raw(Box::new(EtaleDocument(doc)));
        Ok(EtaleStatus::Ok)
    })
}

/// # Safety
/// `doc` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn etale_document_free(doc: *mut EtaleDocument) {
    if !doc.is_null() {
        drop(Box::from_raw(doc));
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn etale_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Canonical JSON text of a document.
///
/// # Safety
/// `doc` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn etale_document_to_json(doc: *const EtaleDocument, out: *mut *mut c_char) -> EtaleStatus {
    guarded(|| {
        let doc = document(doc, "doc")?;
        if out.is_null() {
            return Err(null("out"));
        }
        put_string(out, serialize_document(doc))?;
        Ok(EtaleStatus::Ok)
    })
}

/// Layered axiom checks. Writes a JSON report to `*report`; returns `Ok` when
/// every check passes and `CheckFailed` otherwise.
///
/// # Safety
/// `doc` must be a live handle; `report` must be writable.
#[no_mangle]
pub unsafe extern "C" fn etale_validate(doc: *const EtaleDocument, report: *mut *mut c_char) -> EtaleStatus {
    guarded(|| {
        let doc = document(doc, "doc")?;
        if report.is_null() {
            return Err(null("report"));
        }
        put_report(report, &doc.name, "validate", validate_document(doc))
    })
}

/// The quantal frame of opens of a category document, as a new handle.
///
/// # Safety
/// `doc` must be a live handle; `limits` may be NULL; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn etale_omega(
    doc: *const EtaleDocument,
    limits: *const EtaleLimits,
    out: *mut *mut EtaleDocument,
) -> EtaleStatus {
    guarded(|| {
        let doc = document(doc, "doc")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let om = omega_object(&topcat_of(doc)?, &self::limits(limits))?;
        let result = rqf_document(&format!("omega-{}", doc.name), &om.rqf);
        *out = Box::into_raw(Box::new(EtaleDocument(result)));
        Ok(EtaleStatus::Ok)
    })
}

/// The category of completely prime filters of a frame or quantal frame
/// document, as a new handle.
///
/// # Safety
/// `doc` must be a live handle; `limits` may be NULL; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn etale_cpoints(
    doc: *const EtaleDocument,
    limits: *const EtaleLimits,
    out: *mut *mut EtaleDocument,
) -> EtaleStatus {
    guarded(|| {
        let doc = document(doc, "doc")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let c = c_object(&rqf_of(doc)?, &self::limits(limits))?;
        let result = topcat_document(&format!("points-{}", doc.name), &c);
        *out = Box::into_raw(Box::new(EtaleDocument(result)));
        Ok(EtaleStatus::Ok)
    })
}

/// Round-trip isomorphism checks for a category, frame or quantal frame.
///
/// # Safety
/// `doc` must be a live handle; `limits` may be NULL; `report` must be writable.
#[no_mangle]
pub unsafe extern "C" fn etale_roundtrip(
    doc: *const EtaleDocument,
    limits: *const EtaleLimits,
    report: *mut *mut c_char,
) -> EtaleStatus {
    guarded(|| {
        let doc = document(doc, "doc")?;
        if report.is_null() {
            return Err(null("report"));
        }
        let limits = self::limits(limits);
        let result = match &doc.body {
            Body::Category(_) | Body::TopCategory(_) => omega_roundtrip(doc, &limits),
            Body::Frame(_) | Body::Rqf(_) => chi_roundtrip(doc, &limits),
            _ => {
                return Err(Failure::Status(
                    EtaleStatus::InputError,
                    format!("no round trip for kind {}", doc.kind()),
                ))
            }
        };
        let r = result.or_else(rejected_report)?;
        put_report(report, &doc.name, "roundtrip", r)
    })
}

/// Translation between complete restriction monoids and quantal frames and back.
///
/// # Safety
/// `doc` must be a live handle; `limits` may be NULL; `report` must be writable.
#[no_mangle]
pub unsafe extern "C" fn etale_crm(
    doc: *const EtaleDocument,
    limits: *const EtaleLimits,
    report: *mut *mut c_char,
) -> EtaleStatus {
    guarded(|| {
        let doc = document(doc, "doc")?;
        if report.is_null() {
            return Err(null("report"));
        }
        let r = crm_stage(doc, &self::limits(limits)).or_else(rejected_report)?;
        put_report(report, &doc.name, "crm", r)
    })
}

/// Hom-set enumeration for a category against a quantal frame or a complete
/// restriction monoid.
///
/// # Safety
/// `category` and `other` must be live handles; `limits` may be NULL;
/// `report` must be writable.
#[no_mangle]
pub unsafe extern "C" fn etale_adjoint(
    category: *const EtaleDocument,
    other: *const EtaleDocument,
    limits: *const EtaleLimits,
    report: *mut *mut c_char,
) -> EtaleStatus {
    guarded(|| {
        let c = document(category, "category")?;
        let q = document(other, "other")?;
        if report.is_null() {
            return Err(null("report"));
        }
        let r = adjunction_stage(c, q, &self::limits(limits)).or_else(rejected_report)?;
        put_report(report, &format!("{}|{}", c.name, q.name), "adjunction", r)
    })
}
