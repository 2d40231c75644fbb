use etale_core::workbench::{generate_corpus, serialize_document, Corpus};
use etale_core::Limits;
use etale_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;
use std::sync::OnceLock;

fn corpus_text(name: &str) -> CString {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    let corpus = CORPUS.get_or_init(|| generate_corpus(0, &Limits::default()).unwrap());
    CString::new(serialize_document(corpus.get(name).unwrap())).unwrap()
}

fn parse(text: &CString) -> *mut EtaleDocument {
    let mut doc = ptr::null_mut();
    let status = unsafe { etale_document_parse(text.as_ptr(), &mut doc) };
    assert_eq!(status, EtaleStatus::Ok);
    assert!(!doc.is_null());
    doc
}

fn take(s: *mut std::ffi::c_char) -> serde_json::Value {
    assert!(!s.is_null());
    let v = serde_json::from_str(unsafe { CStr::from_ptr(s) }.to_str().unwrap()).unwrap();
    unsafe { etale_string_free(s) };
    v
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(etale_last_error()) }
        .to_str()
        .unwrap()
        .to_owned()
}

#[test]
fn validate_and_roundtrip_pair_groupoid() {
    let doc = parse(&corpus_text("pair2"));
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { etale_validate(doc, &mut report) }, EtaleStatus::Ok);
    assert_eq!(take(report)["ok"], true);
    assert_eq!(
        unsafe { etale_roundtrip(doc, ptr::null(), &mut report) },
        EtaleStatus::Ok
    );
    assert_eq!(take(report)["ok"], true);
    unsafe { etale_document_free(doc) };
}

#[test]
fn omega_then_points_gives_documents() {
    let doc = parse(&corpus_text("pair2"));
    let limits = etale_limits_default();
    let mut om = ptr::null_mut();
    assert_eq!(unsafe { etale_omega(doc, &limits, &mut om) }, EtaleStatus::Ok);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { etale_document_to_json(om, &mut json) }, EtaleStatus::Ok);
    let v = take(json);
    assert_eq!(v["kind"], "rqf");
    assert_eq!(v["size"], 16);
    let mut pts = ptr::null_mut();
    assert_eq!(unsafe { etale_cpoints(om, &limits, &mut pts) }, EtaleStatus::Ok);
    assert_eq!(unsafe { etale_document_to_json(pts, &mut json) }, EtaleStatus::Ok);
    assert_eq!(take(json)["arrows"], 4);
    unsafe {
        etale_document_free(pts);
        etale_document_free(om);
        etale_document_free(doc);
    }
}

#[test]
fn adjunctions_and_crm() {
    let c = parse(&corpus_text("pair2"));
    let q = parse(&corpus_text("omega-pair2"));
    let s = parse(&corpus_text("pi-pair2"));
    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { etale_adjoint(c, q, ptr::null(), &mut report) },
        EtaleStatus::Ok
    );
    assert_eq!(take(report)["ok"], true);
    assert_eq!(
        unsafe { etale_adjoint(c, s, ptr::null(), &mut report) },
        EtaleStatus::Ok
    );
    assert_eq!(take(report)["ok"], true);
    assert_eq!(unsafe { etale_crm(s, ptr::null(), &mut report) }, EtaleStatus::Ok);
    assert_eq!(take(report)["ok"], true);
    unsafe {
        etale_document_free(c);
        etale_document_free(q);
        etale_document_free(s);
    }
}

#[test]
fn failing_check_reports_witness() {
    let doc = parse(&corpus_text("m3-lattice"));
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { etale_validate(doc, &mut report) }, EtaleStatus::CheckFailed);
    let v = take(report);
    assert_eq!(v["ok"], false);
    assert!(v.to_string().contains("frame.distributive"));
    unsafe { etale_document_free(doc) };
}

#[test]
fn errors_are_codes_not_panics() {
    let mut doc = ptr::null_mut();
    let bad = CString::new("{\"kind\": \"poset\",\n \"size\": }").unwrap();
    assert_eq!(
        unsafe { etale_document_parse(bad.as_ptr(), &mut doc) },
        EtaleStatus::InputError
    );
    assert!(doc.is_null());
    assert!(last_error().contains("line 2"), "{}", last_error());

    assert_eq!(
        unsafe { etale_document_parse(ptr::null(), &mut doc) },
        EtaleStatus::NullPointer
    );
    let invalid = [0xffu8, 0];
    assert_eq!(
        unsafe { etale_document_parse(invalid.as_ptr().cast(), &mut doc) },
        EtaleStatus::InvalidUtf8
    );
    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { etale_validate(ptr::null(), &mut report) },
        EtaleStatus::NullPointer
    );

    let frame = parse(&corpus_text("chain2"));
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { etale_omega(frame, ptr::null(), &mut out) },
        EtaleStatus::InputError
    );
    assert!(out.is_null());
    let tight = EtaleLimits {
        max_elements: 1,
        ..etale_limits_default()
    };
    assert_eq!(
        unsafe { etale_cpoints(frame, &tight, &mut out) },
        EtaleStatus::BoundExceeded
    );
    unsafe {
        etale_document_free(frame);
        etale_document_free(ptr::null_mut());
        etale_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_entry_point() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/etale.h")).unwrap();
    for name in [
        "etale_limits_default",
        "etale_last_error",
        "etale_document_parse",
        "etale_document_free",
        "etale_string_free",
        "etale_document_to_json",
        "etale_validate",
        "etale_omega",
        "etale_cpoints",
        "etale_roundtrip",
        "etale_crm",
        "etale_adjoint",
        "typedef struct EtaleDocument EtaleDocument",
        "ETALE_STATUS_BOUND_EXCEEDED = 3",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

#[test]
fn header_compiles_as_c_and_cpp() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/etale.h");
    for (compiler, lang) in [("cc", "c"), ("c++", "c++")] {
        let Ok(out) = std::process::Command::new(compiler)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang, header])
            .output()
        else {
            eprintln!("{compiler} not available");
            continue;
        };
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
}
