use super::build::{crm_of, rqf_of, topcat_of, validate_document};
use super::corpus::Corpus;
use super::document::{Body, Document};
use crate::crm::{
    l_vee, roundtrip_monoid, roundtrip_quantale, s_filter_correspondence, s_filters, verify_adjunction_ii,
};
use crate::duality::{build_chi, build_omega_map, verify_adjunction_i};
use crate::error::{Error, Result};
use crate::functors::{c_object, filter_calculus_laws, identity_space_vs_pt, omega_object};
use crate::limits::Limits;
use crate::quantale::{compatibility_lemma_check, pi_is_order_ideal};
use crate::report::{Report, Status, Witness};
use crate::topcat::is_local_bisection;
use rayon::prelude::*;
use std::time::Instant;

/// The checks of one stage run on one instance.
#[derive(Debug, Clone)]
pub struct Section {
    pub instance: String,
    pub stage: &'static str,
    pub report: Report,
    pub millis: u128,
}

impl Section {
    pub fn is_pass(&self) -> bool {
        self.report.is_pass()
    }
}

/// Runs a stage; a rejected construction becomes the failing report it carries.
fn stage(instance: &str, name: &'static str, f: impl FnOnce() -> Result<Report>) -> Result<Section> {
    let start = Instant::now();
    let report = match f() {
        Ok(report) => report,
        Err(Error::Rejected { report, .. }) => report,
        Err(e) => return Err(e),
    };
    Ok(Section {
        instance: instance.to_owned(),
        stage: name,
        report,
        millis: start.elapsed().as_millis(),
    })
}

pub fn omega_stage(doc: &Document, limits: &Limits) -> Result<Report> {
    let tc = topcat_of(doc)?;
    let om = omega_object(&tc, limits)?;
    let mut report = om.report.clone();
    let bisections = (0..om.len()).find(|&i| om.is_pi(i) != is_local_bisection(tc.category(), om.open(i)));
    report.record("omega.pi_are_open_bisections", bisections.map(|i| Witness::of([i])));
    Ok(report)
}

pub fn omega_roundtrip(doc: &Document, limits: &Limits) -> Result<Report> {
    let tc = topcat_of(doc)?;
    let om = omega_object(&tc, limits)?;
    let c = c_object(&om.rqf, limits)?;
    Ok(build_omega_map(&tc, &om, &c).report)
}

pub fn filter_stage(doc: &Document, limits: &Limits) -> Result<Report> {
    let q = rqf_of(doc)?;
    let c = c_object(&q, limits)?;
    let mut report = c.laws.clone();
    report.extend(filter_calculus_laws(&q, &c));
    report.extend(identity_space_vs_pt(&q, &c));
    report.record("pi.compatibility_lemma", compatibility_lemma_check(&q).err());
    report.record("pi.order_ideal", pi_is_order_ideal(&q).err());
    Ok(report)
}

pub fn chi_roundtrip(doc: &Document, limits: &Limits) -> Result<Report> {
    let q = rqf_of(doc)?;
    let c = c_object(&q, limits)?;
    let om = omega_object(&c, limits)?;
    Ok(build_chi(&q, &c, &om).report)
}

pub fn crm_stage(doc: &Document, limits: &Limits) -> Result<Report> {
    match &doc.body {
        Body::Crm(_) => {
            let s = crm_of(doc)?;
            let lv = l_vee(&s, limits)?;
            let mut report = lv.report.clone();
            report.extend(roundtrip_monoid(&s, &lv));
            let sf = s_filters(&s)?;
            report.extend(sf.laws.clone());
            let c = c_object(&lv.rqf, limits)?;
            report.extend(s_filter_correspondence(&s, &sf, &lv, &c));
            Ok(report)
        }
        _ => Ok(roundtrip_quantale(&rqf_of(doc)?, limits)?.0),
    }
}

pub fn adjunction_stage(category: &Document, other: &Document, limits: &Limits) -> Result<Report> {
    let c = topcat_of(category)?;
    match &other.body {
        Body::Crm(_) => Ok(verify_adjunction_ii(&c, &crm_of(other)?, limits)?.report),
        _ => Ok(verify_adjunction_i(&c, &rqf_of(other)?, limits)?.report),
    }
}

/// Validation, then every construction and round trip that applies to the
/// document's kind. Later stages only run when validation passes.
pub fn instance_sections(doc: &Document, limits: &Limits) -> Result<Vec<Section>> {
    let name = doc.name.as_str();
    let validated = stage(name, "validate", || Ok(validate_document(doc)))?;
    let ok = validated.is_pass();
    let mut out = vec![validated];
    if !ok {
        return Ok(out);
    }
    match &doc.body {
        Body::Category(_) | Body::TopCategory(_) => {
            out.push(stage(name, "omega", || omega_stage(doc, limits))?);
            out.push(stage(name, "roundtrip", || omega_roundtrip(doc, limits))?);
        }
        Body::Frame(_) | Body::Rqf(_) => {
            out.push(stage(name, "filters", || filter_stage(doc, limits))?);
            out.push(stage(name, "roundtrip", || chi_roundtrip(doc, limits))?);
            out.push(stage(name, "crm", || crm_stage(doc, limits))?);
        }
        Body::Crm(_) => out.push(stage(name, "crm", || crm_stage(doc, limits))?),
        _ => {}
    }
    Ok(out)
}

/// Whether the sections meet the document's expectation: a clean pass, or a
/// failure of the named law carrying a witness.
pub fn expectation(doc: &Document, sections: &[Section]) -> Section {
    let mut report = Report::new();
    let failed_with_witness = |law: &str| {
        sections.iter().any(|s| {
            s.report
                .get(law)
                .is_some_and(|c| c.status == Status::Fail && c.witness.is_some())
        })
    };
    let all_pass = sections.iter().all(Section::is_pass);
    let met = match &doc.expected {
        None => all_pass,
        Some(e) if e.pass => all_pass,
        Some(e) => e.law.as_deref().map_or(!all_pass, failed_with_witness),
    };
    report.check("expected.outcome", met, || {
        let law = doc.expected.as_ref().and_then(|e| e.law.clone()).unwrap_or_default();
        Witness::of([]).with_note(format!(
            "expected {}",
            if law.is_empty() { "a pass".into() } else { law }
        ))
    });
    Section {
        instance: doc.name.clone(),
        stage: "expected",
        report,
        millis: 0,
    }
}

/// Runs every instance and adjunction pair. `progress` sees each section as
/// it completes; the returned list is in canonical order.
pub fn run_corpus(corpus: &Corpus, limits: &Limits, progress: &(dyn Fn(&Section) + Sync)) -> Result<Vec<Section>> {
    let per_instance: Vec<Vec<Section>> = corpus
        .documents
        .par_iter()
        .map(|doc| {
            let mut sections = instance_sections(doc, limits)?;
            sections.push(expectation(doc, &sections));
            sections.iter().for_each(progress);
            Ok(sections)
        })
        .collect::<Result<_>>()?;
    let adjunctions: Vec<Section> = corpus
        .adjunctions
        .par_iter()
        .map(|(c, q)| {
            let missing = |n: &str| Error::semantic("adjunctions", format!("no corpus instance named `{n}`"));
            let cd = corpus.get(c).ok_or_else(|| missing(c))?;
            let qd = corpus.get(q).ok_or_else(|| missing(q))?;
            let section = stage(&format!("{c}|{q}"), "adjunction", || adjunction_stage(cd, qd, limits))?;
            progress(&section);
            Ok(section)
        })
        .collect::<Result<_>>()?;
    let mut all: Vec<Section> = per_instance.into_iter().flatten().chain(adjunctions).collect();
    all.sort_by(|a, b| (&a.instance, a.stage).cmp(&(&b.instance, b.stage)));
    Ok(all)
}
