use super::morphism::validate_rqf_morphism;
use crate::functors::{FilterCategoryResult, OmegaResult};
use crate::order::frame_spatial_check;
use crate::quantale::Rqf;
use crate::report::{Report, Witness};
use crate::sets;
use std::collections::HashMap;

/// `χ : Q → Ω(C(Q))`, `a ↦ X_a`, with every check made on it.
#[derive(Debug, Clone)]
pub struct ChiResult {
    pub map: Vec<usize>,
    pub report: Report,
}

impl ChiResult {
    pub fn is_isomorphism(&self) -> bool {
        self.report.is_pass()
    }
}

/// Injectivity of `a ↦ X_a`; fails with a pair sharing the same `X`.
pub fn is_spatial(q: &Rqf, c: &FilterCategoryResult) -> Result<(), Witness> {
    let mut seen: HashMap<&fixedbitset::FixedBitSet, usize> = HashMap::new();
    for a in 0..q.len() {
        if let Some(&b) = seen.get(&c.x_sets[a]) {
            return Err(Witness::of([b, a]));
        }
        seen.insert(&c.x_sets[a], a);
    }
    Ok(())
}

pub fn build_chi(q: &Rqf, c: &FilterCategoryResult, omega: &OmegaResult) -> ChiResult {
    let n = q.len();
    let x = &c.x_sets;
    let mut report = Report::new();
    let indices: Vec<Option<usize>> = x.iter().map(|u| omega.index_of(u)).collect();
    report.record(
        "chi.open",
        indices.iter().position(Option::is_none).map(|a| Witness::of([a])),
    );
    if !report.is_pass() {
        return ChiResult {
            map: Vec::new(),
            report,
        };
    }
    let map: Vec<usize> = indices.into_iter().flatten().collect();
    let product = (0..n).find_map(|a| {
        (0..n)
            .find(|&b| x[q.mul(a, b)] != c.set_product(&x[a], &x[b]))
            .map(|b| Witness::of([a, b]))
    });
    report.record("chi.product", product);
    report.record(
        "chi.star",
        (0..n)
            .find(|&a| c.set_d(&x[a]) != x[q.star(a)])
            .map(|a| Witness::of([a])),
    );
    report.record(
        "chi.plus",
        (0..n)
            .find(|&a| c.set_r(&x[a]) != x[q.plus(a)])
            .map(|a| Witness::of([a])),
    );
    report.check("chi.unit", x[q.unit()] == *c.identity_set(), || Witness::of([q.unit()]));
    report.extend(validate_rqf_morphism(&map, q, omega));
    report.record("chi.injective", is_spatial(q, c).err());
    let hit = sets::set_of(omega.len(), map.iter().copied());
    report.record(
        "chi.surjective",
        (0..omega.len()).find(|&u| !hit.contains(u)).map(|u| Witness::of([u])),
    );
    let (down, _) = q.down_frame(q.unit());
    report.check(
        "chi.spatial_iff_projections_spatial",
        is_spatial(q, c).is_ok() == frame_spatial_check(&down).is_ok(),
        || Witness::of([q.unit()]),
    );
    ChiResult { map, report }
}
