use crate::functors::{FilterCategoryResult, OmegaResult};
use crate::report::{Report, Witness};
use crate::sets;
use crate::topcat::{continuity_check, validate_covering_functor, TopCategory};
use crate::topology::is_homeomorphism;

/// `ω : C → C(Ω(C))`, `x ↦ O_x`, with every check made on it.
#[derive(Debug, Clone)]
pub struct OmegaMapResult {
    pub map: Vec<usize>,
    pub report: Report,
}

/// `O_x`, the opens containing `x`, as a member set of `Ω(C)`.
fn neighbourhood_filter(omega: &OmegaResult, x: usize) -> fixedbitset::FixedBitSet {
    sets::set_of(omega.len(), (0..omega.len()).filter(|&u| omega.open(u).contains(x)))
}

/// Bijectivity of `ω`; fails with two arrows sharing a filter, or an arrow of
/// `C(Ω(C))` that is not hit (index offset by the arrow count of `C`).
pub fn is_sober(tc: &TopCategory, omega: &OmegaResult, c: &FilterCategoryResult) -> Result<(), Witness> {
    let filters: Vec<Option<usize>> = (0..tc.len())
        .map(|x| c.arrow_with_members(omega, &neighbourhood_filter(omega, x)))
        .collect();
    let mut preimage = vec![usize::MAX; c.len()];
    for (x, f) in filters.iter().enumerate() {
        let Some(f) = *f else {
            return Err(Witness::of([x]).with_note("O_x is not completely prime"));
        };
        if preimage[f] != usize::MAX {
            return Err(Witness::of([preimage[f], x]).with_note("same neighbourhood filter"));
        }
        preimage[f] = x;
    }
    match preimage.iter().position(|&x| x == usize::MAX) {
        Some(f) => Err(Witness::of([f]).with_note("filter not of the form O_x")),
        None => Ok(()),
    }
}

pub fn build_omega_map(tc: &TopCategory, omega: &OmegaResult, c: &FilterCategoryResult) -> OmegaMapResult {
    let mut report = Report::new();
    let filters: Vec<Option<usize>> = (0..tc.len())
        .map(|x| c.arrow_with_members(omega, &neighbourhood_filter(omega, x)))
        .collect();
    report.record(
        "omega.filter",
        filters.iter().position(Option::is_none).map(|x| Witness::of([x])),
    );
    if !report.is_pass() {
        return OmegaMapResult {
            map: Vec::new(),
            report,
        };
    }
    let map: Vec<usize> = filters.into_iter().flatten().collect();
    report.extend(validate_covering_functor(&map, tc, c));
    report.record("omega.continuous", continuity_check(&map, tc, c).err());
    let preimage = (0..omega.len()).find(|&u| {
        let pre = sets::set_of(tc.len(), (0..tc.len()).filter(|&x| c.x_sets[u].contains(map[x])));
        pre != *omega.open(u)
    });
    report.record("omega.preimage", preimage.map(|u| Witness::of([u])));
    let sober = is_sober(tc, omega, c);
    let sober_ok = sober.is_ok();
    report.record("omega.bijective", sober.err());
    if sober_ok {
        let mut inverse = vec![0; c.len()];
        for (x, &f) in map.iter().enumerate() {
            inverse[f] = x;
        }
        let mut inv = validate_covering_functor(&inverse, c, tc);
        inv.checks.retain(|ch| ch.status == crate::report::Status::Fail);
        report.check("omega.inverse_functor", inv.is_pass(), || {
            inv.failures()
                .next()
                .and_then(|ch| ch.witness.clone())
                .unwrap_or_else(|| Witness::of([]))
        });
        report.check(
            "omega.homeomorphism",
            is_homeomorphism(&map, tc.topology(), c.topology()),
            || Witness::of([]),
        );
        let image =
            (0..omega.len()).find(|&u| sets::set_of(c.len(), omega.open(u).ones().map(|x| map[x])) != c.x_sets[u]);
        report.record("omega.image", image.map(|u| Witness::of([u])));
    }
    let objects_t0 = tc.topology().subspace(tc.identities()).t0_violation().is_none();
    report.check("omega.sober_iff_objects_sober", sober_ok == objects_t0, || {
        Witness::of([])
    });
    OmegaMapResult { map, report }
}
