mod common;

use common::corpus;
use etale_core::workbench::{
    extension, generate_corpus, json_summary, parse_document, run_corpus, serialize_document, validate_document, Corpus,
};
use etale_core::{Error, Limits};

#[test]
fn every_corpus_document_round_trips_byte_for_byte() {
    for doc in &corpus().documents {
        let text = serialize_document(doc);
        let back = parse_document(&text).unwrap_or_else(|e| panic!("{}: {e}", doc.name));
        assert_eq!(&back, doc, "{}", doc.name);
        assert_eq!(serialize_document(&back), text, "{}", doc.name);
        assert!(!extension(doc.kind()).is_empty());
    }
}

#[test]
fn corpus_generation_is_seeded() {
    let limits = Limits::default();
    let text = |c: &Corpus| c.documents.iter().map(serialize_document).collect::<Vec<_>>();
    let a = generate_corpus(7, &limits).unwrap();
    let b = generate_corpus(7, &limits).unwrap();
    assert_eq!(text(&a), text(&b));
    let names = |c: &Corpus| c.documents.iter().map(|d| d.name.clone()).collect::<Vec<_>>();
    assert_eq!(names(&a), names(corpus()));
}

#[test]
fn pair_groupoid_fixture() {
    let doc = corpus().get("pair2").unwrap();
    let text = serialize_document(doc);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["kind"], "category");
    assert_eq!(v["arrows"], 4);
    assert_eq!(v["identities"].as_array().unwrap().len(), 2);
}

#[test]
fn empty_category_is_valid() {
    let doc = parse_document(
        r#"{"kind": "category", "name": "empty", "arrows": 0, "identities": [], "d": [], "r": [], "comp": []}"#,
    )
    .unwrap();
    assert!(validate_document(&doc).is_pass());
}

#[test]
fn out_of_range_composite_is_located() {
    let text = r#"{"kind": "category", "name": "bad", "arrows": 4, "identities": [0, 3],
        "d": [0, 3, 0, 3], "r": [0, 0, 3, 3],
        "comp": [[0, 0, 0], [1, 3, 9]]}"#;
    match parse_document(text) {
        Err(Error::Semantic { path, .. }) => assert_eq!(path, "comp[1][2]"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn malformed_json_is_positioned() {
    match parse_document("{\n  \"kind\": \"frame\",\n  \"size\": 3,,\n}") {
        Err(Error::Syntax { line, .. }) => assert_eq!(line, 3),
        other => panic!("{other:?}"),
    }
}

#[test]
fn corpus_reports_are_deterministic() {
    let limits = Limits::default();
    let small = Corpus {
        documents: [
            "pair2",
            "omega-pair2",
            "pi-pair2",
            "chain3",
            "m3-lattice",
            "neg-crm-join",
            "z2",
            "omega-z2",
        ]
        .iter()
        .map(|n| corpus().get(n).unwrap().clone())
        .collect(),
        adjunctions: vec![("pair2".into(), "omega-pair2".into()), ("z2".into(), "omega-z2".into())],
    };
    let render = || {
        let sections = run_corpus(&small, &limits, &|_| {}).unwrap();
        serde_json::to_string(&json_summary(&sections, true, false)).unwrap()
    };
    let first = render();
    for _ in 0..3 {
        assert_eq!(render(), first);
    }
    assert!(first.contains("frame.distributive"));
}
