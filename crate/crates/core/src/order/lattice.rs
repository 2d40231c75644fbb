use super::poset::{validate_poset, FinitePoset};
use crate::report::{Report, Witness};
use crate::sets;
use crate::table::Table;
use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use std::ops::Deref;

/// A finite bounded lattice with explicit meet and join tables.
#[derive(Debug, Clone)]
pub struct FiniteLattice {
    poset: FinitePoset,
    meet: Table,
    join: Table,
    bottom: usize,
    top: usize,
    down: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
}

fn cone_sets(p: &FinitePoset) -> (Vec<FixedBitSet>, Vec<FixedBitSet>) {
    let n = p.len();
    let down = (0..n).map(|i| p.down_set(i)).collect();
    let up = (0..n).map(|i| p.up_set(i)).collect();
    (down, up)
}

fn bounds(n: usize, down: &[FixedBitSet], up: &[FixedBitSet]) -> Option<(usize, usize)> {
    let bottom = (0..n).find(|&i| up[i].count_ones(..) == n)?;
    let top = (0..n).find(|&i| down[i].count_ones(..) == n)?;
    Some((bottom, top))
}

/// Element `g` of the down-set `cone` whose own down-set is all of `cone`.
fn generator(cone: &FixedBitSet, cones: &[FixedBitSet], sizes: &[usize]) -> Option<usize> {
    let size = cone.count_ones(..);
    cone.ones().find(|&g| sizes[g] == size && cones[g] == *cone)
}

impl FiniteLattice {
    /// Derives the meet and join tables from the order.
    pub fn from_poset(poset: FinitePoset) -> Result<Self, Report> {
        let mut report = validate_poset(&poset);
        if !report.is_pass() {
            return Err(report);
        }
        let n = poset.len();
        let (down, up) = cone_sets(&poset);
        let Some((bottom, top)) = bounds(n, &down, &up) else {
            report.fail("lattice.bounded", Witness::of([]).with_note("no bottom or no top"));
            return Err(report);
        };
        report.pass("lattice.bounded");
        let down_sizes: Vec<usize> = down.iter().map(|s| s.count_ones(..)).collect();
        let up_sizes: Vec<usize> = up.iter().map(|s| s.count_ones(..)).collect();
        let meet_of = |i: usize, j: usize| generator(&sets::intersection(&down[i], &down[j]), &down, &down_sizes);
        let join_of = |i: usize, j: usize| generator(&sets::intersection(&up[i], &up[j]), &up, &up_sizes);
        let missing = |f: &(dyn Fn(usize, usize) -> Option<usize> + Sync)| {
            (0..n)
                .into_par_iter()
                .find_map_first(|i| (0..n).find(|&j| f(i, j).is_none()).map(|j| Witness::of([i, j])))
        };
        report.record("lattice.meets_exist", missing(&meet_of));
        report.record("lattice.joins_exist", missing(&join_of));
        if !report.is_pass() {
            return Err(report);
        }
        let meet = Table::from_fn(n, |i, j| meet_of(i, j).expect("checked"));
        let join = Table::from_fn(n, |i, j| join_of(i, j).expect("checked"));
        Ok(FiniteLattice {
            poset,
            meet,
            join,
            bottom,
            top,
            down,
            up,
        })
    }

    /// Checks supplied meet and join tables against the order.
    pub fn with_tables(poset: FinitePoset, meet: Table, join: Table) -> Result<Self, Report> {
        let mut report = validate_poset(&poset);
        if !report.is_pass() {
            return Err(report);
        }
        let n = poset.len();
        if meet.size() != n || join.size() != n {
            report.fail(
                "lattice.table_shape",
                Witness::of([meet.size(), join.size()]).with_note("table size differs from order"),
            );
            return Err(report);
        }
        let (down, up) = cone_sets(&poset);
        let in_range = |t: &Table| (0..n).find_map(|i| (0..n).find(|&j| t.get(i, j) >= n).map(|j| Witness::of([i, j])));
        if let Some(w) = in_range(&meet).or_else(|| in_range(&join)) {
            report.fail("lattice.table_shape", w.with_note("entry out of range"));
            return Err(report);
        }
        let Some((bottom, top)) = bounds(n, &down, &up) else {
            report.fail("lattice.bounded", Witness::of([]).with_note("no bottom or no top"));
            return Err(report);
        };
        report.pass("lattice.bounded");
        let mismatch = |t: &Table, cones: &[FixedBitSet]| {
            (0..n).into_par_iter().find_map_first(|i| {
                (0..n)
                    .find(|&j| cones[t.get(i, j)] != sets::intersection(&cones[i], &cones[j]))
                    .map(|j| Witness::of([i, j]))
            })
        };
        report.record("lattice.meet_glb", mismatch(&meet, &down));
        report.record("lattice.join_lub", mismatch(&join, &up));
        if !report.is_pass() {
            return Err(report);
        }
        Ok(FiniteLattice {
            poset,
            meet,
            join,
            bottom,
            top,
            down,
            up,
        })
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet.get(a, b)
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join.get(a, b)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn meet_table(&self) -> &Table {
        &self.meet
    }

    pub fn join_table(&self) -> &Table {
        &self.join
    }

    /// `{x : x <= a}`
    pub fn down(&self, a: usize) -> &FixedBitSet {
        &self.down[a]
    }

    /// `{x : a <= x}`
    pub fn up(&self, a: usize) -> &FixedBitSet {
        &self.up[a]
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Upward closure of a subset.
    pub fn up_closure(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut s = sets::empty(self.len());
        for x in set.ones() {
            s.union_with(&self.up[x]);
        }
        s
    }

    /// Down-closure of a subset.
    pub fn down_closure(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut s = sets::empty(self.len());
        for x in set.ones() {
            s.union_with(&self.down[x]);
        }
        s
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| {
                if j == self.bottom {
                    return false;
                }
                let mut below = self.down[j].clone();
                below.set(j, false);
                self.join_all(below.ones()) != j
            })
            .collect()
    }
}

/// Finite distributivity `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` over all triples.
/// In a finite lattice this is the frame law.
pub fn is_frame(l: &FiniteLattice) -> Result<(), Witness> {
    let n = l.len();
    let bad = (0..n).into_par_iter().find_map_first(|x| {
        for y in 0..n {
            let xy = l.meet(x, y);
            for z in 0..n {
                if l.meet(x, l.join(y, z)) != l.join(xy, l.meet(x, z)) {
                    return Some(Witness::of([x, y, z]));
                }
            }
        }
        None
    });
    match bad {
        Some(w) => Err(w),
        None => Ok(()),
    }
}

/// A finite distributive lattice.
#[derive(Debug, Clone)]
pub struct FiniteFrame(FiniteLattice);

impl Deref for FiniteFrame {
    type Target = FiniteLattice;

    fn deref(&self) -> &FiniteLattice {
        &self.0
    }
}

impl FiniteFrame {
    pub fn new(lattice: FiniteLattice) -> Result<Self, Report> {
        match is_frame(&lattice) {
            Ok(()) => Ok(FiniteFrame(lattice)),
            Err(w) => {
                let mut report = Report::new();
                report.fail("frame.distributive", w);
                Err(report)
            }
        }
    }

    /// Runs the poset, lattice and frame layers in order, returning every
    /// check that ran.
    pub fn build(poset: FinitePoset, tables: Option<(Table, Table)>) -> (Report, Option<FiniteFrame>) {
        let lattice = match tables {
            Some((meet, join)) => FiniteLattice::with_tables(poset.clone(), meet, join),
            None => FiniteLattice::from_poset(poset.clone()),
        };
        let lattice = match lattice {
            Ok(l) => l,
            Err(report) => return (report, None),
        };
        let mut report = validate_poset(&poset);
        report.pass("lattice.bounded");
        report.pass("lattice.meet_glb");
        report.pass("lattice.join_lub");
        match is_frame(&lattice) {
            Ok(()) => {
                report.pass("frame.distributive");
                (report, Some(FiniteFrame(lattice)))
            }
            Err(w) => {
                report.fail("frame.distributive", w);
                (report, None)
            }
        }
    }

    pub fn from_poset(poset: FinitePoset) -> Result<Self, Report> {
        let (report, frame) = FiniteFrame::build(poset, None);
        frame.ok_or(report)
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.0
    }

    pub fn chain(n: usize) -> Self {
        FiniteFrame::from_poset(FinitePoset::chain(n)).expect("chains are frames")
    }

    /// Power set of a `k`-element set; element `i` is the subset with bitmask `i`.
    pub fn boolean(k: u32) -> Self {
        let n = 1usize << k;
        let poset = FinitePoset::from_fn(n, |i, j| i & j == i);
        let meet = Table::from_fn(n, |i, j| i & j);
        let join = Table::from_fn(n, |i, j| i | j);
        FiniteFrame(FiniteLattice::with_tables(poset, meet, join).expect("boolean lattice"))
    }

    pub fn product(&self, other: &FiniteFrame) -> Self {
        FiniteFrame::from_poset(self.poset().product(other.poset())).expect("products of frames are frames")
    }

    /// The sub-frame `a↓`, with the parent index of each of its elements.
    pub fn down_frame(&self, a: usize) -> (FiniteFrame, Vec<usize>) {
        let elems: Vec<usize> = self.down(a).ones().collect();
        let mut position = vec![usize::MAX; self.len()];
        for (i, &x) in elems.iter().enumerate() {
            position[x] = i;
        }
        let poset = self.poset().induced(&elems);
        let m = elems.len();
        let meet = Table::from_fn(m, |i, j| position[self.meet(elems[i], elems[j])]);
        let join = Table::from_fn(m, |i, j| position[self.join(elems[i], elems[j])]);
        let lattice = FiniteLattice::with_tables(poset, meet, join).expect("down-sets of frames");
        (FiniteFrame(lattice), elems)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 0, a, b, c, 1 with a, b, c pairwise incomparable.
    fn m3() -> FiniteLattice {
        let covers = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)];
        FiniteLattice::from_poset(FinitePoset::from_covers(5, &covers)).unwrap()
    }

    #[test]
    fn boolean_two_atoms_is_frame() {
        assert!(is_frame(FiniteFrame::boolean(2).lattice()).is_ok());
    }

    #[test]
    fn diamond_fails_with_abc() {
        assert_eq!(is_frame(&m3()).unwrap_err().indices, vec![1, 2, 3]);
    }

    #[test]
    fn chains_are_frames() {
        for n in 1..6 {
            assert!(is_frame(FiniteFrame::chain(n).lattice()).is_ok());
        }
    }

    #[test]
    fn non_lattice_reports_missing_meet() {
        // two incomparable minimal elements under a top
        let p = FinitePoset::from_covers(3, &[(0, 2), (1, 2)]);
        let r = FiniteLattice::from_poset(p).unwrap_err();
        assert!(r.failed("lattice.bounded"));
    }

    #[test]
    fn wrong_meet_cell_is_caught() {
        let f = FiniteFrame::boolean(2);
        let mut meet = f.meet_table().clone();
        meet.set(1, 2, 1);
        let r = FiniteLattice::with_tables(f.poset().clone(), meet, f.join_table().clone()).unwrap_err();
        assert_eq!(r.witness("lattice.meet_glb").unwrap().indices, vec![1, 2]);
    }

    #[test]
    fn derived_tables_match_boolean() {
        let f = FiniteFrame::boolean(3);
        let g = FiniteLattice::from_poset(f.poset().clone()).unwrap();
        assert_eq!(g.meet_table(), f.meet_table());
        assert_eq!(g.join_table(), f.join_table());
        assert_eq!((g.bottom(), g.top()), (0, 7));
    }

    #[test]
    fn join_irreducibles_of_boolean_are_atoms() {
        assert_eq!(FiniteFrame::boolean(3).join_irreducibles(), vec![1, 2, 4]);
        assert_eq!(FiniteFrame::chain(4).join_irreducibles(), vec![1, 2, 3]);
    }

    #[test]
    fn down_frame_of_boolean() {
        let f = FiniteFrame::boolean(3);
        let (d, elems) = f.down_frame(5);
        assert_eq!(elems, vec![0, 1, 4, 5]);
        assert_eq!(d.len(), 4);
        assert_eq!(d.top(), 3);
    }
}
