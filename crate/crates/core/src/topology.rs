//! Finite topological spaces.
//!
//! A finite topology is determined by the least open neighbourhood of each
//! point; that is the stored form. The full open-set family is produced on
//! demand in canonical order.

use crate::error::{Error, Result};
use crate::report::{Report, Witness};
use crate::sets;
use fixedbitset::FixedBitSet;
use std::collections::HashSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    n: usize,
    nbhd: Vec<FixedBitSet>,
}

impl Topology {
    pub fn discrete(n: usize) -> Self {
        Topology {
            n,
            nbhd: (0..n).map(|x| sets::set_of(n, [x])).collect(),
        }
    }

    pub fn indiscrete(n: usize) -> Self {
        Topology {
            n,
            nbhd: vec![sets::full(n); n],
        }
    }

    /// The coarsest topology in which every member of `family` is open.
    pub fn generated_by(n: usize, family: &[FixedBitSet]) -> Self {
        let nbhd = (0..n)
            .map(|x| {
                let mut u = sets::full(n);
                for b in family.iter().filter(|b| b.contains(x)) {
                    u.intersect_with(b);
                }
                u
            })
            .collect();
        Topology { n, nbhd }
    }

    /// Accepts `family` only if it already is a topology.
    pub fn from_opens(n: usize, family: &[FixedBitSet]) -> std::result::Result<Self, Report> {
        let report = validate_open_family(n, family);
        if report.is_pass() {
            Ok(Topology::generated_by(n, family))
        } else {
            Err(report)
        }
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn neighbourhood(&self, x: usize) -> &FixedBitSet {
        &self.nbhd[x]
    }

    pub fn is_open(&self, u: &FixedBitSet) -> bool {
        u.ones().all(|x| self.nbhd[x].is_subset(u))
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.n).all(|x| self.nbhd[x].count_ones(..) == 1)
    }

    /// Smallest open set containing `u`.
    pub fn saturation(&self, u: &FixedBitSet) -> FixedBitSet {
        let mut s = sets::empty(self.n);
        for x in u.ones() {
            s.union_with(&self.nbhd[x]);
        }
        s
    }

    /// All open sets, smallest first. Fails once more than `limit` are found.
    pub fn opens(&self, limit: usize) -> Result<Vec<FixedBitSet>> {
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let mut all = vec![sets::empty(self.n)];
        seen.insert(sets::empty(self.n));
        let mut distinct: Vec<&FixedBitSet> = Vec::new();
        for x in 0..self.n {
            if !distinct.contains(&&self.nbhd[x]) {
                distinct.push(&self.nbhd[x]);
            }
        }
        for nb in distinct {
            let mut fresh = Vec::new();
            for u in &all {
                let v = sets::union(u, nb);
                if !seen.contains(&v) {
                    seen.insert(v.clone());
                    fresh.push(v);
                }
            }
            all.extend(fresh);
            if all.len() > limit {
                return Err(Error::bound("open-set family", all.len(), limit));
            }
        }
        all.sort_by(sets::canonical_cmp);
        Ok(all)
    }

    /// Subspace on `points`, renumbered by position in the slice.
    pub fn subspace(&self, points: &[usize]) -> Topology {
        let m = points.len();
        let nbhd = points
            .iter()
            .map(|&x| {
                sets::set_of(
                    m,
                    points
                        .iter()
                        .enumerate()
                        .filter(|(_, &y)| self.nbhd[x].contains(y))
                        .map(|(i, _)| i),
                )
            })
            .collect();
        Topology { n: m, nbhd }
    }

    /// A pair of distinct points with the same neighbourhoods, if any.
    pub fn t0_violation(&self) -> Option<(usize, usize)> {
        for x in 0..self.n {
            for y in x + 1..self.n {
                if self.nbhd[x].contains(y) && self.nbhd[y].contains(x) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

/// Laws for an explicitly listed open-set family; witnesses index `family`.
pub fn validate_open_family(n: usize, family: &[FixedBitSet]) -> Report {
    let mut report = Report::new();
    let index: HashSet<&FixedBitSet> = family.iter().collect();
    report.check("topology.empty_open", index.contains(&sets::empty(n)), || {
        Witness::of([]).with_note("the empty set is not listed")
    });
    report.check("topology.full_open", index.contains(&sets::full(n)), || {
        Witness::of([]).with_note("the full arrow set is not listed")
    });
    let pairs = || (0..family.len()).flat_map(move |i| (i + 1..family.len()).map(move |j| (i, j)));
    let union_gap = pairs().find(|&(i, j)| !index.contains(&sets::union(&family[i], &family[j])));
    report.record("topology.union_closed", union_gap.map(|(i, j)| Witness::of([i, j])));
    let meet_gap = pairs().find(|&(i, j)| !index.contains(&sets::intersection(&family[i], &family[j])));
    report.record(
        "topology.intersection_closed",
        meet_gap.map(|(i, j)| Witness::of([i, j])),
    );
    report
}

/// Returns a source point `x` such that the preimage of the open
/// neighbourhood of `map[x]` is not open, if `map` is discontinuous.
pub fn continuity_witness(map: &[usize], src: &Topology, dst: &Topology) -> Option<usize> {
    (0..src.points()).find(|&x| {
        let target = dst.neighbourhood(map[x]);
        src.neighbourhood(x).ones().any(|y| !target.contains(map[y]))
    })
}

pub fn is_continuous(map: &[usize], src: &Topology, dst: &Topology) -> bool {
    continuity_witness(map, src, dst).is_none()
}

/// Image of an open set is open, for every open set.
pub fn is_open_map(map: &[usize], src: &Topology, dst: &Topology) -> bool {
    open_map_witness(map, src, dst).is_none()
}

/// A source point whose neighbourhood has a non-open image.
pub fn open_map_witness(map: &[usize], src: &Topology, dst: &Topology) -> Option<usize> {
    // Every open set is a union of neighbourhoods, and images commute with unions.
    (0..src.points()).find(|&x| {
        let image = sets::set_of(dst.points(), src.neighbourhood(x).ones().map(|y| map[y]));
        !dst.is_open(&image)
    })
}

pub fn is_homeomorphism(map: &[usize], src: &Topology, dst: &Topology) -> bool {
    if src.points() != dst.points() {
        return false;
    }
    let mut inverse = vec![usize::MAX; dst.points()];
    for (x, &y) in map.iter().enumerate() {
        if y >= dst.points() || inverse[y] != usize::MAX {
            return false;
        }
        inverse[y] = x;
    }
    is_continuous(map, src, dst) && is_continuous(&inverse, dst, src)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sierpinski() -> Topology {
        Topology::generated_by(2, &[sets::set_of(2, [0])])
    }

    #[test]
    fn sierpinski_has_three_opens() {
        let opens = sierpinski().opens(16).unwrap();
        let listed: Vec<Vec<usize>> = opens.iter().map(sets::members).collect();
        assert_eq!(listed, vec![vec![], vec![0], vec![0, 1]]);
    }

    #[test]
    fn discrete_opens_are_power_set() {
        assert_eq!(Topology::discrete(4).opens(16).unwrap().len(), 16);
        assert!(Topology::discrete(5).opens(16).is_err());
    }

    #[test]
    fn identity_from_indiscrete_to_discrete_is_discontinuous() {
        let id = [0, 1, 2];
        assert!(is_continuous(&id, &Topology::discrete(3), &Topology::indiscrete(3)));
        assert_eq!(
            continuity_witness(&id, &Topology::indiscrete(3), &Topology::discrete(3)),
            Some(0)
        );
    }

    #[test]
    fn open_family_validation_names_the_gap() {
        let fam = vec![
            sets::empty(3),
            sets::set_of(3, [0]),
            sets::set_of(3, [1]),
            sets::full(3),
        ];
        let r = validate_open_family(3, &fam);
        assert!(r.failed("topology.union_closed"));
        assert_eq!(r.witness("topology.union_closed").unwrap().indices, vec![1, 2]);
        assert!(!r.failed("topology.intersection_closed"));
    }

    #[test]
    fn subspace_and_t0() {
        let t = Topology::indiscrete(3);
        assert_eq!(t.t0_violation(), Some((0, 1)));
        assert!(sierpinski().t0_violation().is_none());
        let s = sierpinski().subspace(&[1]);
        assert!(s.is_discrete());
    }

    #[test]
    fn homeomorphism_swap() {
        let t = Topology::discrete(2);
        assert!(is_homeomorphism(&[1, 0], &t, &t));
        assert!(!is_homeomorphism(&[1, 0], &sierpinski(), &sierpinski()));
    }
}
