use crate::quantale::Rqf;
use crate::report::{Report, Witness};
use rayon::prelude::*;

fn first_pair(n: usize, bad: impl Fn(usize, usize) -> bool + Sync) -> Option<Witness> {
    (0..n)
        .into_par_iter()
        .find_map_first(|a| (0..n).find(|&b| bad(a, b)).map(|b| Witness::of([a, b])))
}

/// Joins (including the empty join), finite meets (including the top),
/// multiplication and unit, star and plus, and partial isometries.
pub fn validate_rqf_morphism(map: &[usize], q: &Rqf, r: &Rqf) -> Report {
    let mut report = Report::new();
    let shape = if map.len() != q.len() {
        Some(Witness::of([map.len()]).with_note("map is not defined on every element"))
    } else {
        (0..q.len())
            .find(|&a| map[a] >= r.len())
            .map(|a| Witness::of([a]).with_note("image out of range"))
    };
    report.record("morphism.shape", shape);
    if !report.is_pass() {
        return report;
    }
    let n = q.len();
    let t = |a: usize| map[a];
    let joins = if t(q.bottom()) != r.bottom() {
        Some(Witness::of([q.bottom()]).with_note("empty join"))
    } else {
        first_pair(n, |a, b| t(q.join(a, b)) != r.join(t(a), t(b)))
    };
    report.record("morphism.joins", joins);
    report.record(
        "morphism.meets",
        first_pair(n, |a, b| t(q.meet(a, b)) != r.meet(t(a), t(b))),
    );
    report.check("morphism.top", t(q.top()) == r.top(), || Witness::of([q.top()]));
    report.record(
        "morphism.multiplicative",
        first_pair(n, |a, b| t(q.mul(a, b)) != r.mul(t(a), t(b))),
    );
    report.check("morphism.unit", t(q.unit()) == r.unit(), || Witness::of([q.unit()]));
    report.record(
        "morphism.star",
        (0..n).find(|&a| t(q.star(a)) != r.star(t(a))).map(|a| Witness::of([a])),
    );
    report.record(
        "morphism.plus",
        (0..n).find(|&a| t(q.plus(a)) != r.plus(t(a))).map(|a| Witness::of([a])),
    );
    report.record(
        "morphism.pi",
        q.pi_list().iter().find(|&&a| !r.is_pi(t(a))).map(|&a| Witness::of([a])),
    );
    report
}

pub fn is_rqf_morphism(map: &[usize], q: &Rqf, r: &Rqf) -> bool {
    validate_rqf_morphism(map, q, r).is_pass()
}
