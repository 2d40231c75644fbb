use super::suite::Section;
use crate::report::Status;
use serde_json::{json, Value};

/// One line per check: status, instance, stage, law, and the witness of a failure.
pub fn section_lines(section: &Section) -> Vec<String> {
    section
        .report
        .checks
        .iter()
        .map(|c| {
            let mut line = format!(
                "{:<8}{}  {}  {}",
                c.status.to_string(),
                section.instance,
                section.stage,
                c.law
            );
            if let Some(w) = &c.witness {
                line.push_str(&format!("  witness {w}"));
            }
            line
        })
        .collect()
}

pub fn counts(sections: &[Section]) -> (usize, usize, usize) {
    let mut n = (0, 0, 0);
    for c in sections.iter().flat_map(|s| &s.report.checks) {
        match c.status {
            Status::Pass => n.0 += 1,
            Status::Fail => n.1 += 1,
            Status::Skipped => n.2 += 1,
        }
    }
    n
}

/// Machine-readable summary. Timings are left out unless asked for, so that
/// repeated runs give identical bytes.
pub fn json_summary(sections: &[Section], ok: bool, timings: bool) -> Value {
    let checks: Vec<Value> = sections
        .iter()
        .flat_map(|s| {
            s.report.checks.iter().map(move |c| {
                let mut v = json!({
                    "instance": s.instance,
                    "stage": s.stage,
                    "law": c.law,
                    "status": c.status,
                });
                if let Some(w) = &c.witness {
                    v["witness"] = json!(w);
                }
                if timings {
                    v["millis"] = json!(s.millis as u64);
                }
                v
            })
        })
        .collect();
    let (pass, fail, skipped) = counts(sections);
    json!({
        "checks": checks,
        "summary": { "pass": pass, "fail": fail, "skipped": skipped },
        "ok": ok,
    })
}
