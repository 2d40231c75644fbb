use crate::error::{Error, Result};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use std::fmt::Write as _;

/// What a document is expected to produce under `validate`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub law: Option<String>,
}

/// Tables for posets, frames, quantales, restriction quantal frames and
/// complete restriction monoids. Which fields are required depends on the kind.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub size: usize,
    /// Every pair `[i, j]` with `i ≤ j`, taken literally.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<[usize; 2]>>,
    /// Generating pairs whose reflexive-transitive closure is the order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meet: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub join: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mul: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plus: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub arrows: usize,
    pub identities: Vec<usize>,
    pub d: Vec<usize>,
    pub r: Vec<usize>,
    /// Triples `[a, b, ab]`.
    pub comp: Vec<[usize; 3]>,
    /// The whole open family.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<usize>>>,
    /// A family generating the topology.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subbase: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axioms {
    Frame,
    Rqf,
    Callitic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapDoc {
    pub source: Box<Document>,
    pub target: Box<Document>,
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    Poset(AlgebraDoc),
    Frame(AlgebraDoc),
    Quantale(AlgebraDoc),
    Rqf(AlgebraDoc),
    Crm(AlgebraDoc),
    Category(CategoryDoc),
    TopCategory(CategoryDoc),
    Morphism(Axioms, MapDoc),
    Functor(MapDoc),
}

impl Body {
    pub fn kind(&self) -> &'static str {
        match self {
            Body::Poset(_) => "poset",
            Body::Frame(_) => "frame",
            Body::Quantale(_) => "quantale",
            Body::Rqf(_) => "rqf",
            Body::Crm(_) => "crm",
            Body::Category(_) => "category",
            Body::TopCategory(_) => "topcategory",
            Body::Morphism(..) => "morphism",
            Body::Functor(_) => "functor",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub name: String,
    pub body: Body,
    pub expected: Option<Expected>,
}

impl Document {
    pub fn new(name: impl Into<String>, body: Body) -> Self {
        Document {
            name: name.into(),
            body,
            expected: None,
        }
    }

    pub fn expecting(mut self, pass: bool, law: Option<&str>) -> Self {
        self.expected = Some(Expected {
            pass,
            law: law.map(str::to_owned),
        });
        self
    }

    pub fn kind(&self) -> &'static str {
        self.body.kind()
    }
}

fn join_path(prefix: &str, rest: impl std::fmt::Display) -> String {
    let rest = rest.to_string();
    match (prefix.is_empty(), rest.is_empty() || rest == ".") {
        (true, _) => rest,
        (false, true) => prefix.to_owned(),
        (false, false) if rest.starts_with('[') => format!("{prefix}{rest}"),
        (false, false) => format!("{prefix}.{rest}"),
    }
}

fn typed<T: DeserializeOwned>(value: Value, prefix: &str) -> Result<T> {
    serde_path_to_error::deserialize(value)
        .map_err(|e| Error::semantic(join_path(prefix, e.path()), e.inner().to_string()))
}

fn take(object: &mut Map<String, Value>, key: &str, prefix: &str) -> Result<Value> {
    object
        .remove(key)
        .ok_or_else(|| Error::semantic(join_path(prefix, key), "missing field"))
}

fn from_value(value: Value, prefix: &str) -> Result<Document> {
    let Value::Object(mut object) = value else {
        return Err(Error::semantic(
            join_path(prefix, ""),
            "a document must be a JSON object",
        ));
    };
    let kind: String = typed(take(&mut object, "kind", prefix)?, &join_path(prefix, "kind"))?;
    let name: String = typed(take(&mut object, "name", prefix)?, &join_path(prefix, "name"))?;
    let expected = match object.remove("expected") {
        Some(v) => Some(typed(v, &join_path(prefix, "expected"))?),
        None => None,
    };
    let map_doc = |mut object: Map<String, Value>| -> Result<MapDoc> {
        let source = from_value(take(&mut object, "source", prefix)?, &join_path(prefix, "source"))?;
        let target = from_value(take(&mut object, "target", prefix)?, &join_path(prefix, "target"))?;
        let map = typed(take(&mut object, "map", prefix)?, &join_path(prefix, "map"))?;
        if let Some(extra) = object.keys().next() {
            return Err(Error::semantic(join_path(prefix, extra), "unknown field"));
        }
        Ok(MapDoc {
            source: Box::new(source),
            target: Box::new(target),
            map,
        })
    };
    let body = match kind.as_str() {
        "poset" => Body::Poset(typed(Value::Object(object), prefix)?),
        "frame" => Body::Frame(typed(Value::Object(object), prefix)?),
        "quantale" => Body::Quantale(typed(Value::Object(object), prefix)?),
        "rqf" => Body::Rqf(typed(Value::Object(object), prefix)?),
        "crm" => Body::Crm(typed(Value::Object(object), prefix)?),
        "category" => Body::Category(typed(Value::Object(object), prefix)?),
        "topcategory" => Body::TopCategory(typed(Value::Object(object), prefix)?),
        "morphism" => {
            let axioms = typed(take(&mut object, "axioms", prefix)?, &join_path(prefix, "axioms"))?;
            Body::Morphism(axioms, map_doc(object)?)
        }
        "functor" => Body::Functor(map_doc(object)?),
        other => {
            return Err(Error::semantic(
                join_path(prefix, "kind"),
                format!("unknown kind `{other}`"),
            ));
        }
    };
    let doc = Document { name, body, expected };
    super::check::check_document(&doc, prefix)?;
    Ok(doc)
}

/// Parses and checks a document: syntax errors carry a position, structural
/// and range errors carry the path of the offending field.
pub fn parse_document(text: &str) -> Result<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    from_value(value, "")
}

fn sorted<T: Ord + Clone>(items: &[T]) -> Vec<T> {
    let mut v = items.to_vec();
    v.sort();
    v.dedup();
    v
}

fn sorted_family(family: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = family.iter().map(|s| sorted(s)).collect();
    v.sort();
    v.dedup();
    v
}

fn to_value(doc: &Document) -> Value {
    let mut object = Map::new();
    let body = match &doc.body {
        Body::Poset(a) | Body::Frame(a) | Body::Quantale(a) | Body::Rqf(a) | Body::Crm(a) => {
            let mut a = a.clone();
            a.order = a.order.as_deref().map(sorted);
            a.covers = a.covers.as_deref().map(sorted);
            serde_json::to_value(a)
        }
        Body::Category(c) | Body::TopCategory(c) => {
            let mut c = c.clone();
            c.identities = sorted(&c.identities);
            c.comp = sorted(&c.comp);
            c.opens = c.opens.as_deref().map(sorted_family);
            c.subbase = c.subbase.as_deref().map(sorted_family);
            serde_json::to_value(c)
        }
        Body::Morphism(_, m) | Body::Functor(m) => {
            let mut inner = Map::new();
            inner.insert("source".into(), to_value(&m.source));
            inner.insert("target".into(), to_value(&m.target));
            inner.insert("map".into(), serde_json::to_value(&m.map).expect("plain data"));
            Ok(Value::Object(inner))
        }
    };
    if let Value::Object(fields) = body.expect("plain data") {
        object.extend(fields);
    }
    if let Body::Morphism(axioms, _) = &doc.body {
        object.insert("axioms".into(), serde_json::to_value(axioms).expect("plain data"));
    }
    object.insert("kind".into(), Value::String(doc.kind().into()));
    object.insert("name".into(), Value::String(doc.name.clone()));
    if let Some(e) = &doc.expected {
        object.insert("expected".into(), serde_json::to_value(e).expect("plain data"));
    }
    Value::Object(object)
}

fn write_value(out: &mut String, value: &Value, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match value {
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, v)) in map.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(indent + 1), Value::String(k.clone()));
                write_value(out, v, indent + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}}}", pad(indent));
        }
        Value::Array(items) if items.iter().all(|v| !v.is_array() && !v.is_object()) => {
            out.push('[');
            for (i, v) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&v.to_string());
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, v) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, v, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}]", pad(indent));
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

/// Canonical text: sorted keys, sorted set-valued arrays, one table row per line.
pub fn serialize_document(doc: &Document) -> String {
    let mut out = String::new();
    write_value(&mut out, &to_value(doc), 0);
    out.push('\n');
    out
}

/// The same document with set-valued arrays in canonical order.
pub fn canonical(doc: &Document) -> Document {
    from_value(to_value(doc), "").expect("canonical form of a checked document")
}
