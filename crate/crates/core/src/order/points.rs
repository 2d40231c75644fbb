use super::lattice::{FiniteFrame, FiniteLattice};
use crate::report::{Report, Witness};
use crate::sets;
use crate::topology::Topology;
use fixedbitset::FixedBitSet;
use rayon::prelude::*;

/// A completely prime filter `{x : x ≰ m}` of a finite frame, stored by its
/// meet-prime cogenerator `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CpFilter {
    pub cogenerator: usize,
}

impl CpFilter {
    #[inline]
    pub fn contains(&self, l: &FiniteLattice, x: usize) -> bool {
        !l.leq(x, self.cogenerator)
    }

    pub fn members(&self, l: &FiniteLattice) -> FixedBitSet {
        sets::complement(l.down(self.cogenerator))
    }
}

/// `x ∧ y ≤ m` forces `x ≤ m` or `y ≤ m`, and `m` is not the top.
pub fn is_meet_prime(l: &FiniteLattice, m: usize) -> bool {
    if m == l.top() {
        return false;
    }
    let outside = sets::complement(l.down(m));
    outside.ones().all(|x| outside.ones().all(|y| !l.leq(l.meet(x, y), m)))
}

pub fn meet_prime_elements(l: &FiniteLattice) -> Vec<usize> {
    (0..l.len()).into_par_iter().filter(|&m| is_meet_prime(l, m)).collect()
}

/// One filter per meet-prime element, in cogenerator order.
pub fn enumerate_cp_filters(l: &FiniteLattice) -> Vec<CpFilter> {
    meet_prime_elements(l)
        .into_iter()
        .map(|cogenerator| CpFilter { cogenerator })
        .collect()
}

/// Recognises a member set as a completely prime filter. The complement of
/// such a set is closed downward and under joins, so it is `↓m` for its join.
pub fn cp_filter_from_members(l: &FiniteLattice, members: &FixedBitSet) -> Option<CpFilter> {
    let rest = sets::complement(members);
    let m = l.join_all(rest.ones());
    (rest == *l.down(m) && is_meet_prime(l, m)).then_some(CpFilter { cogenerator: m })
}

/// The space of points of a frame, with `x_sets[a]` the points containing `a`.
#[derive(Debug, Clone)]
pub struct PointSpace {
    pub points: Vec<CpFilter>,
    pub x_sets: Vec<FixedBitSet>,
    pub topology: Topology,
    pub laws: Report,
}

impl PointSpace {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn pt_topology(f: &FiniteFrame) -> PointSpace {
    let points = enumerate_cp_filters(f);
    let k = points.len();
    let n = f.len();
    let x_sets: Vec<FixedBitSet> = (0..n)
        .map(|a| sets::set_of(k, (0..k).filter(|&i| points[i].contains(f, a))))
        .collect();
    let mut laws = Report::new();
    laws.check("pt.bottom_empty", x_sets[f.bottom()].is_clear(), || {
        Witness::of([f.bottom()])
    });
    laws.check("pt.top_full", x_sets[f.top()].count_ones(..) == k, || {
        Witness::of([f.top()])
    });
    let pair_law = |law: fn(&FiniteLattice, usize, usize) -> usize,
                    combine: fn(&FixedBitSet, &FixedBitSet) -> FixedBitSet| {
        (0..n).into_par_iter().find_map_first(|a| {
            (0..n)
                .find(|&b| x_sets[law(f, a, b)] != combine(&x_sets[a], &x_sets[b]))
                .map(|b| Witness::of([a, b]))
        })
    };
    laws.record("pt.meet", pair_law(FiniteLattice::meet, sets::intersection));
    laws.record("pt.join", pair_law(FiniteLattice::join, sets::union));
    let topology = Topology::generated_by(k, &x_sets);
    PointSpace {
        points,
        x_sets,
        topology,
        laws,
    }
}

/// Whenever `a ≰ b` some point contains `a` but not `b`. Fails with `[a, b]`.
pub fn frame_spatial_check(f: &FiniteFrame) -> Result<(), Witness> {
    let primes = meet_prime_elements(f);
    let n = f.len();
    let bad = (0..n).into_par_iter().find_map_first(|a| {
        (0..n)
            .find(|&b| !f.leq(a, b) && !primes.iter().any(|&m| f.leq(b, m) && !f.leq(a, m)))
            .map(|b| Witness::of([a, b]))
    });
    bad.map_or(Ok(()), Err)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_meet_primes() {
        let f = FiniteFrame::chain(3);
        assert_eq!(meet_prime_elements(&f), vec![0, 1]);
    }

    #[test]
    fn boolean_meet_primes_are_coatoms() {
        assert_eq!(meet_prime_elements(&FiniteFrame::boolean(2)), vec![1, 2]);
        assert_eq!(meet_prime_elements(&FiniteFrame::boolean(4)), vec![7, 11, 13, 14]);
    }

    #[test]
    fn one_element_frame_has_no_points() {
        let f = FiniteFrame::chain(1);
        assert!(enumerate_cp_filters(&f).is_empty());
        let pt = pt_topology(&f);
        assert!(pt.is_empty());
        assert!(pt.laws.is_pass());
    }

    #[test]
    fn chain_gives_sierpinski() {
        let f = FiniteFrame::chain(3);
        let pt = pt_topology(&f);
        assert!(pt.laws.is_pass());
        assert_eq!(pt.len(), 2);
        assert_eq!(pt.topology.opens(8).unwrap().len(), 3);
        let members: Vec<Vec<usize>> = pt.points.iter().map(|p| sets::members(&p.members(&f))).collect();
        assert_eq!(members, vec![vec![1, 2], vec![2]]);
    }

    #[test]
    fn boolean_gives_discrete() {
        let pt = pt_topology(&FiniteFrame::boolean(2));
        assert!(pt.topology.is_discrete());
    }

    #[test]
    fn members_round_trip() {
        let f = FiniteFrame::boolean(3);
        for p in enumerate_cp_filters(&f) {
            assert_eq!(cp_filter_from_members(&f, &p.members(&f)), Some(p));
        }
        assert_eq!(cp_filter_from_members(&f, &sets::set_of(8, [7])), None);
    }

    #[test]
    fn finite_frames_are_spatial() {
        assert!(frame_spatial_check(&FiniteFrame::chain(4)).is_ok());
        assert!(frame_spatial_check(&FiniteFrame::boolean(3)).is_ok());
    }
}
