use super::bisection::is_local_bisection;
use super::category::FiniteCategory;
use crate::report::{Report, Witness};
use crate::topology::{continuity_witness, open_map_witness, Topology};
use rayon::prelude::*;
use std::ops::Deref;

/// A finite category whose `d`, `r` and composition are continuous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopCategory {
    cat: FiniteCategory,
    topology: Topology,
}

impl Deref for TopCategory {
    type Target = FiniteCategory;

    fn deref(&self) -> &FiniteCategory {
        &self.cat
    }
}

/// Continuity of `d`, `r`, and of composition on the composable pairs with the
/// subspace topology from the product. Composition is continuous at `(a, b)`
/// when every composable pair from `N(a) × N(b)` lands in `N(ab)`.
pub fn validate_topcat(cat: &FiniteCategory, topology: &Topology) -> Report {
    let mut report = Report::new();
    report.check("topcat.shape", topology.points() == cat.len(), || {
        Witness::of([topology.points()]).with_note("topology is not on the arrow set")
    });
    if !report.is_pass() {
        return report;
    }
    report.record(
        "topcat.d_continuous",
        continuity_witness(cat.d_map(), topology, topology).map(|a| Witness::of([a])),
    );
    report.record(
        "topcat.r_continuous",
        continuity_witness(cat.r_map(), topology, topology).map(|a| Witness::of([a])),
    );
    let pairs: Vec<(usize, usize)> = cat.composable_pairs().collect();
    let bad = pairs.par_iter().find_map_first(|&(a, b)| {
        let target = topology.neighbourhood(cat.comp(a, b).expect("composable"));
        let escapes = topology.neighbourhood(a).ones().any(|x| {
            topology
                .neighbourhood(b)
                .ones()
                .any(|y| cat.comp(x, y).is_some_and(|xy| !target.contains(xy)))
        });
        escapes.then(|| Witness::of([a, b]))
    });
    report.record("topcat.m_continuous", bad);
    report
}

impl TopCategory {
    pub fn new(cat: FiniteCategory, topology: Topology) -> Result<Self, Report> {
        validate_topcat(&cat, &topology).into_result()?;
        Ok(TopCategory { cat, topology })
    }

    pub fn discrete(cat: FiniteCategory) -> Self {
        let n = cat.len();
        TopCategory {
            cat,
            topology: Topology::discrete(n),
        }
    }

    pub fn category(&self) -> &FiniteCategory {
        &self.cat
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }
}

/// `d` and `r` are open maps, and every open set is a union of open local
/// bisections. The second condition holds exactly when each least open
/// neighbourhood is a local bisection; witnesses name that arrow.
pub fn etale_report(tc: &TopCategory) -> Report {
    let t = tc.topology();
    let mut report = Report::new();
    report.record(
        "etale.d_open",
        open_map_witness(tc.d_map(), t, t).map(|a| Witness::of([a]).with_note("d of this neighbourhood is not open")),
    );
    report.record(
        "etale.r_open",
        open_map_witness(tc.r_map(), t, t).map(|a| Witness::of([a]).with_note("r of this neighbourhood is not open")),
    );
    report.record(
        "etale.bisection_base",
        (0..tc.len())
            .find(|&a| !is_local_bisection(tc, t.neighbourhood(a)))
            .map(|a| Witness::of([a]).with_note("least open neighbourhood is not a local bisection")),
    );
    report
}

pub fn is_etale(tc: &TopCategory) -> bool {
    etale_report(tc).is_pass()
}

pub fn c_o_is_open(tc: &TopCategory) -> bool {
    tc.topology().is_open(tc.identity_set())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_pair_groupoid_is_etale() {
        let tc = TopCategory::discrete(FiniteCategory::pair_groupoid(2));
        assert!(is_etale(&tc));
        assert!(c_o_is_open(&tc));
    }

    #[test]
    fn indiscrete_pair_groupoid_is_not_etale() {
        let tc = TopCategory::new(FiniteCategory::pair_groupoid(2), Topology::indiscrete(4)).unwrap();
        let report = etale_report(&tc);
        assert!(report.failed("etale.bisection_base"));
    }

    #[test]
    fn discontinuous_d_is_rejected() {
        // open {(0,1)} alone: d of its neighbourhood fine, but d is not continuous
        let fam = vec![crate::sets::set_of(4, [1])];
        let t = Topology::generated_by(4, &fam);
        let r = validate_topcat(&FiniteCategory::pair_groupoid(2), &t);
        assert!(!r.is_pass());
    }
}
