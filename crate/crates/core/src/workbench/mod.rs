//! Document format, instance generation and the check suite behind the
//! command-line workbench.

mod build;
mod check;
mod corpus;
mod document;
mod render;
mod suite;

pub use build::{
    category_document, category_of, crm_data, crm_document, crm_of, frame_document, frame_of, poset_of, rqf_document,
    rqf_of, topcat_document, topcat_of, validate_document,
};
pub use check::carrier_size;
pub use corpus::{generate_corpus, Corpus};
pub use document::{
    canonical, parse_document, serialize_document, AlgebraDoc, Axioms, Body, CategoryDoc, Document, Expected, MapDoc,
};
pub use render::{counts, json_summary, section_lines};
pub use suite::{
    adjunction_stage, chi_roundtrip, crm_stage, expectation, filter_stage, instance_sections, omega_roundtrip,
    omega_stage, run_corpus, Section,
};

/// File extension used when writing a document of the given kind.
pub fn extension(kind: &str) -> &'static str {
    match kind {
        "category" | "topcategory" => "cat",
        "frame" => "frame",
        "rqf" => "rqf",
        "crm" => "crm",
        "poset" => "poset",
        "quantale" => "quantale",
        "morphism" => "morphism",
        _ => "functor",
    }
}
