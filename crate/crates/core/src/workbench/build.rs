use super::document::{AlgebraDoc, Axioms, Body, CategoryDoc, Document, MapDoc};
use crate::crm::{validate_callitic, validate_crm, Crm, CrmData};
use crate::duality::validate_rqf_morphism;
use crate::error::{Error, Result};
use crate::order::{validate_poset, FiniteFrame, FinitePoset};
use crate::quantale::{validate_rqf, FiniteQuantale, QuantaleTables, Rqf};
use crate::report::{Report, Witness};
use crate::sets;
use crate::table::Table;
use crate::topcat::{
    continuity_check, etale_report, validate_category, validate_covering_functor, validate_topcat, CategoryData,
    FiniteCategory, TopCategory,
};
use crate::topology::{validate_open_family, Topology};
use fixedbitset::FixedBitSet;

pub fn poset_of(a: &AlgebraDoc) -> FinitePoset {
    let pairs = |p: &[[usize; 2]]| p.iter().map(|&[i, j]| (i, j)).collect::<Vec<_>>();
    match (&a.order, &a.covers) {
        (Some(p), _) => FinitePoset::from_pairs(a.size, &pairs(p)),
        (None, Some(p)) => FinitePoset::from_covers(a.size, &pairs(p)),
        (None, None) => FinitePoset::from_pairs(a.size, &[]),
    }
}

fn table(rows: &[Vec<usize>]) -> Table {
    Table::from_rows(rows).expect("checked when parsed")
}

fn lattice_tables(a: &AlgebraDoc) -> Option<(Table, Table)> {
    Some((table(a.meet.as_ref()?), table(a.join.as_ref()?)))
}

fn quantale_tables(a: &AlgebraDoc) -> QuantaleTables {
    let n = a.size;
    QuantaleTables {
        mul: table(a.mul.as_ref().expect("checked when parsed")),
        unit: a.unit.expect("checked when parsed"),
        star: a.star.clone().unwrap_or_else(|| (0..n).collect()),
        plus: a.plus.clone().unwrap_or_else(|| (0..n).collect()),
    }
}

pub fn crm_data(a: &AlgebraDoc) -> CrmData {
    let t = quantale_tables(a);
    CrmData {
        order: poset_of(a),
        mul: t.mul,
        unit: t.unit,
        star: t.star,
        plus: t.plus,
        meet: a.meet.as_deref().map(table),
    }
}

pub fn category_data(c: &CategoryDoc) -> CategoryData {
    CategoryData {
        arrows: c.arrows,
        identities: c.identities.clone(),
        d: c.d.clone(),
        r: c.r.clone(),
        comp: c.comp.clone(),
    }
}

fn family(n: usize, sets: &[Vec<usize>]) -> Vec<FixedBitSet> {
    sets.iter().map(|s| sets::set_of(n, s.iter().copied())).collect()
}

fn topology_of(c: &CategoryDoc) -> std::result::Result<Topology, Report> {
    let n = c.arrows;
    match (&c.opens, &c.subbase) {
        (Some(opens), _) => Topology::from_opens(n, &family(n, opens)),
        (None, Some(sub)) => Ok(Topology::generated_by(n, &family(n, sub))),
        (None, None) => Ok(Topology::discrete(n)),
    }
}

fn wrong_kind(doc: &Document, wanted: &str) -> Error {
    Error::semantic("kind", format!("a {} document cannot be read as {wanted}", doc.kind()))
}

pub fn frame_of(doc: &Document) -> Result<FiniteFrame> {
    let Body::Frame(a) = &doc.body else {
        return Err(wrong_kind(doc, "a frame"));
    };
    let (report, frame) = FiniteFrame::build(poset_of(a), lattice_tables(a));
    frame.ok_or_else(|| Error::rejected("frame", report))
}

/// Frames are read as quantal frames with multiplication the meet.
pub fn rqf_of(doc: &Document) -> Result<Rqf> {
    match &doc.body {
        Body::Frame(_) => Ok(Rqf::from_frame(frame_of(doc)?)),
        Body::Rqf(a) => {
            let (report, q) = validate_rqf(poset_of(a), lattice_tables(a), quantale_tables(a));
            q.ok_or_else(|| Error::rejected("restriction quantal frame", report))
        }
        _ => Err(wrong_kind(doc, "a restriction quantal frame")),
    }
}

pub fn crm_of(doc: &Document) -> Result<Crm> {
    let Body::Crm(a) = &doc.body else {
        return Err(wrong_kind(doc, "a complete restriction monoid"));
    };
    let (report, s) = validate_crm(&crm_data(a));
    s.ok_or_else(|| Error::rejected("complete restriction monoid", report))
}

pub fn category_of(doc: &Document) -> Result<FiniteCategory> {
    match &doc.body {
        Body::Category(c) | Body::TopCategory(c) => {
            FiniteCategory::new(&category_data(c)).map_err(|report| Error::rejected("category", report))
        }
        _ => Err(wrong_kind(doc, "a category")),
    }
}

/// Categories without a topology are read as discrete.
pub fn topcat_of(doc: &Document) -> Result<TopCategory> {
    let cat = category_of(doc)?;
    let (Body::Category(c) | Body::TopCategory(c)) = &doc.body else {
        unreachable!("category_of accepted it")
    };
    let topology = topology_of(c).map_err(|report| Error::rejected("topology", report))?;
    TopCategory::new(cat, topology).map_err(|report| Error::rejected("topological category", report))
}

fn validate_category_doc(c: &CategoryDoc, topological: bool) -> Report {
    let data = category_data(c);
    let mut report = validate_category(&data);
    if !report.is_pass() || !topological {
        return report;
    }
    if let Some(opens) = &c.opens {
        report.extend(validate_open_family(c.arrows, &family(c.arrows, opens)));
        if !report.is_pass() {
            return report;
        }
    }
    let cat = FiniteCategory::new(&data).expect("validated");
    let topology = topology_of(c).expect("validated");
    report.extend(validate_topcat(&cat, &topology));
    if report.is_pass() {
        let tc = TopCategory::new(cat, topology).expect("validated");
        report.extend(etale_report(&tc));
    }
    report
}

fn side(report: &mut Report, law: &'static str, doc: &Document) -> bool {
    let inner = validate_document(doc);
    report.check(law, inner.is_pass(), || Witness::of([]).with_note(inner.summary()));
    inner.is_pass()
}

fn validate_map(report: &mut Report, m: &MapDoc) -> bool {
    side(report, "document.source", &m.source) && side(report, "document.target", &m.target)
}

/// Layered validation of any document kind.
pub fn validate_document(doc: &Document) -> Report {
    match &doc.body {
        Body::Poset(a) => validate_poset(&poset_of(a)),
        Body::Frame(a) => FiniteFrame::build(poset_of(a), lattice_tables(a)).0,
        Body::Quantale(a) => {
            let (mut report, frame) = FiniteFrame::build(poset_of(a), lattice_tables(a));
            if let Some(frame) = frame {
                let t = quantale_tables(a);
                report.extend(FiniteQuantale::build(frame, t.mul, t.unit).0);
            }
            report
        }
        Body::Rqf(a) => validate_rqf(poset_of(a), lattice_tables(a), quantale_tables(a)).0,
        Body::Crm(a) => validate_crm(&crm_data(a)).0,
        Body::Category(c) => validate_category_doc(c, false),
        Body::TopCategory(c) => validate_category_doc(c, true),
        Body::Morphism(axioms, m) => {
            let mut report = Report::new();
            if !validate_map(&mut report, m) {
                return report;
            }
            match axioms {
                Axioms::Frame | Axioms::Rqf => {
                    let (q, r) = (rqf_of(&m.source).expect("valid"), rqf_of(&m.target).expect("valid"));
                    report.extend(validate_rqf_morphism(&m.map, &q, &r));
                }
                Axioms::Callitic => {
                    let (s, t) = (crm_of(&m.source).expect("valid"), crm_of(&m.target).expect("valid"));
                    report.extend(validate_callitic(&m.map, &s, &t));
                }
            }
            report
        }
        Body::Functor(m) => {
            let mut report = Report::new();
            if !validate_map(&mut report, m) {
                return report;
            }
            let (c, d) = (
                topcat_of(&m.source).expect("valid"),
                topcat_of(&m.target).expect("valid"),
            );
            report.extend(validate_covering_functor(&m.map, c.category(), d.category()));
            if report.is_pass() {
                report.record("functor.continuous", continuity_check(&m.map, &c, &d).err());
            }
            report
        }
    }
}

fn covers(p: &FinitePoset) -> Vec<[usize; 2]> {
    p.covers().into_iter().map(|(i, j)| [i, j]).collect()
}

pub fn frame_document(name: &str, f: &FiniteFrame) -> Document {
    Document::new(
        name,
        Body::Frame(AlgebraDoc {
            size: f.len(),
            covers: Some(covers(f.poset())),
            ..AlgebraDoc::default()
        }),
    )
}

pub fn rqf_document(name: &str, q: &Rqf) -> Document {
    Document::new(
        name,
        Body::Rqf(AlgebraDoc {
            size: q.len(),
            covers: Some(covers(q.poset())),
            mul: Some(q.mul_table().rows()),
            unit: Some(q.unit()),
            star: Some(q.star_map().to_vec()),
            plus: Some(q.plus_map().to_vec()),
            ..AlgebraDoc::default()
        }),
    )
}

pub fn crm_document(name: &str, s: &Crm) -> Document {
    let data = s.data();
    Document::new(
        name,
        Body::Crm(AlgebraDoc {
            size: s.len(),
            covers: Some(covers(s.order())),
            mul: Some(data.mul.rows()),
            unit: Some(data.unit),
            star: Some(data.star),
            plus: Some(data.plus),
            ..AlgebraDoc::default()
        }),
    )
}

fn category_fields(c: &FiniteCategory) -> CategoryDoc {
    let data = c.data();
    CategoryDoc {
        arrows: data.arrows,
        identities: data.identities,
        d: data.d,
        r: data.r,
        comp: data.comp,
        ..CategoryDoc::default()
    }
}

pub fn category_document(name: &str, c: &FiniteCategory) -> Document {
    Document::new(name, Body::Category(category_fields(c)))
}

/// The least neighbourhoods are written as the generating family.
pub fn topcat_document(name: &str, tc: &TopCategory) -> Document {
    let mut fields = category_fields(tc.category());
    let t = tc.topology();
    fields.subbase = Some((0..tc.len()).map(|x| sets::members(t.neighbourhood(x))).collect());
    Document::new(name, Body::TopCategory(fields))
}
