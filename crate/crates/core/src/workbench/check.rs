use super::document::{AlgebraDoc, Axioms, Body, CategoryDoc, Document, MapDoc};
use crate::error::{Error, Result};

fn at(prefix: &str, field: &str) -> String {
    if prefix.is_empty() {
        field.to_owned()
    } else {
        format!("{prefix}.{field}")
    }
}

fn index(path: String, value: usize, bound: usize) -> Result<()> {
    if value < bound {
        Ok(())
    } else {
        Err(Error::semantic(path, format!("index {value} out of range 0..{bound}")))
    }
}

fn vector(path: String, values: &[usize], len: usize, bound: usize) -> Result<()> {
    if values.len() != len {
        return Err(Error::semantic(
            path,
            format!("expected {len} entries, found {}", values.len()),
        ));
    }
    for (i, &v) in values.iter().enumerate() {
        index(format!("{path}[{i}]"), v, bound)?;
    }
    Ok(())
}

fn table(path: String, rows: &[Vec<usize>], n: usize) -> Result<()> {
    if rows.len() != n {
        return Err(Error::semantic(
            path,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    for (i, row) in rows.iter().enumerate() {
        vector(format!("{path}[{i}]"), row, n, n)?;
    }
    Ok(())
}

fn tuples<const K: usize>(path: String, items: &[[usize; K]], bound: usize) -> Result<()> {
    for (i, item) in items.iter().enumerate() {
        for (j, &v) in item.iter().enumerate() {
            index(format!("{path}[{i}][{j}]"), v, bound)?;
        }
    }
    Ok(())
}

fn family(path: String, sets: &[Vec<usize>], bound: usize) -> Result<()> {
    for (i, set) in sets.iter().enumerate() {
        for (j, &v) in set.iter().enumerate() {
            index(format!("{path}[{i}][{j}]"), v, bound)?;
        }
    }
    Ok(())
}

fn presence(prefix: &str, field: &str, present: bool, wanted: bool, kind: &str) -> Result<()> {
    match (present, wanted) {
        (true, false) => Err(Error::semantic(
            at(prefix, field),
            format!("not a field of kind {kind}"),
        )),
        (false, true) => Err(Error::semantic(at(prefix, field), format!("required for kind {kind}"))),
        _ => Ok(()),
    }
}

fn check_algebra(a: &AlgebraDoc, kind: &str, prefix: &str) -> Result<()> {
    let n = a.size;
    match (&a.order, &a.covers) {
        (Some(_), Some(_)) => return Err(Error::semantic(at(prefix, "covers"), "give either order or covers")),
        (None, None) => return Err(Error::semantic(at(prefix, "order"), "missing field")),
        (Some(p), None) => tuples(at(prefix, "order"), p, n)?,
        (None, Some(p)) => tuples(at(prefix, "covers"), p, n)?,
    }
    let algebraic = matches!(kind, "quantale" | "rqf" | "crm");
    let restricted = matches!(kind, "rqf" | "crm");
    if kind == "frame" && a.meet.is_some() != a.join.is_some() {
        return Err(Error::semantic(
            at(prefix, "join"),
            "give both meet and join tables or neither",
        ));
    }
    let lattice_tables = matches!(kind, "frame" | "quantale" | "rqf");
    if !lattice_tables {
        presence(prefix, "join", a.join.is_some(), false, kind)?;
        if kind != "crm" {
            presence(prefix, "meet", a.meet.is_some(), false, kind)?;
        }
    }
    presence(prefix, "mul", a.mul.is_some(), algebraic, kind)?;
    presence(prefix, "unit", a.unit.is_some(), algebraic, kind)?;
    presence(prefix, "star", a.star.is_some(), restricted, kind)?;
    presence(prefix, "plus", a.plus.is_some(), restricted, kind)?;
    for (field, t) in [("meet", &a.meet), ("join", &a.join), ("mul", &a.mul)] {
        if let Some(t) = t {
            table(at(prefix, field), t, n)?;
        }
    }
    if let Some(u) = a.unit {
        index(at(prefix, "unit"), u, n)?;
    }
    for (field, m) in [("star", &a.star), ("plus", &a.plus)] {
        if let Some(m) = m {
            vector(at(prefix, field), m, n, n)?;
        }
    }
    Ok(())
}

fn check_category(c: &CategoryDoc, topological: bool, prefix: &str) -> Result<()> {
    let n = c.arrows;
    for (i, &e) in c.identities.iter().enumerate() {
        index(format!("{}[{i}]", at(prefix, "identities")), e, n)?;
    }
    vector(at(prefix, "d"), &c.d, n, n)?;
    vector(at(prefix, "r"), &c.r, n, n)?;
    tuples(at(prefix, "comp"), &c.comp, n)?;
    let kind = if topological { "topcategory" } else { "category" };
    match (&c.opens, &c.subbase) {
        (Some(_), Some(_)) => return Err(Error::semantic(at(prefix, "subbase"), "give either opens or subbase")),
        (Some(f), None) if topological => family(at(prefix, "opens"), f, n)?,
        (None, Some(f)) if topological => family(at(prefix, "subbase"), f, n)?,
        (None, None) if topological => {
            return Err(Error::semantic(at(prefix, "opens"), "required for kind topcategory"))
        }
        (Some(_), None) => presence(prefix, "opens", true, false, kind)?,
        (None, Some(_)) => presence(prefix, "subbase", true, false, kind)?,
        (None, None) => {}
    }
    if let Some(labels) = &c.labels {
        if labels.len() != n {
            return Err(Error::semantic(
                at(prefix, "labels"),
                format!("expected {n} labels, found {}", labels.len()),
            ));
        }
    }
    Ok(())
}

/// Number of elements or arrows of the carrier.
pub fn carrier_size(doc: &Document) -> usize {
    match &doc.body {
        Body::Poset(a) | Body::Frame(a) | Body::Quantale(a) | Body::Rqf(a) | Body::Crm(a) => a.size,
        Body::Category(c) | Body::TopCategory(c) => c.arrows,
        Body::Morphism(_, m) | Body::Functor(m) => m.map.len(),
    }
}

fn check_map(m: &MapDoc, allowed: &[&str], prefix: &str) -> Result<()> {
    for (field, doc) in [("source", &m.source), ("target", &m.target)] {
        if !allowed.contains(&doc.kind()) {
            return Err(Error::semantic(
                at(prefix, &format!("{field}.kind")),
                format!("expected one of {}", allowed.join(", ")),
            ));
        }
    }
    vector(
        at(prefix, "map"),
        &m.map,
        carrier_size(&m.source),
        carrier_size(&m.target),
    )
}

pub(crate) fn check_document(doc: &Document, prefix: &str) -> Result<()> {
    match &doc.body {
        Body::Poset(a) => check_algebra(a, "poset", prefix),
        Body::Frame(a) => check_algebra(a, "frame", prefix),
        Body::Quantale(a) => check_algebra(a, "quantale", prefix),
        Body::Rqf(a) => check_algebra(a, "rqf", prefix),
        Body::Crm(a) => check_algebra(a, "crm", prefix),
        Body::Category(c) => check_category(c, false, prefix),
        Body::TopCategory(c) => check_category(c, true, prefix),
        Body::Morphism(Axioms::Frame, m) => check_map(m, &["frame"], prefix),
        Body::Morphism(Axioms::Rqf, m) => check_map(m, &["frame", "rqf"], prefix),
        Body::Morphism(Axioms::Callitic, m) => check_map(m, &["crm"], prefix),
        Body::Functor(m) => check_map(m, &["category", "topcategory"], prefix),
    }
}
