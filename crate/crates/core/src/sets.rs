//! Bit-set helpers. All sets over one universe share its length, so equality
//! and hashing of [`FixedBitSet`] are meaningful.

use fixedbitset::FixedBitSet;
use std::cmp::Ordering;

pub fn empty(n: usize) -> FixedBitSet {
    FixedBitSet::with_capacity(n)
}

pub fn full(n: usize) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    s.insert_range(..);
    s
}

pub fn set_of(n: usize, items: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    for i in items {
        s.insert(i);
    }
    s
}

pub fn union(a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut s = a.clone();
    s.union_with(b);
    s
}

pub fn intersection(a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut s = a.clone();
    s.intersect_with(b);
    s
}

pub fn complement(a: &FixedBitSet) -> FixedBitSet {
    let mut s = a.clone();
    s.toggle_range(..);
    s
}

pub fn members(a: &FixedBitSet) -> Vec<usize> {
    a.ones().collect()
}

/// Canonical order used for listing open sets: by size, then by members.
pub fn canonical_cmp(a: &FixedBitSet, b: &FixedBitSet) -> Ordering {
    a.count_ones(..)
        .cmp(&b.count_ones(..))
        .then_with(|| a.ones().cmp(b.ones()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_size_then_lexicographic() {
        let n = 4;
        let mut v = [set_of(n, [1, 2]), set_of(n, [3]), set_of(n, []), set_of(n, [0, 3])];
        v.sort_by(canonical_cmp);
        let listed: Vec<Vec<usize>> = v.iter().map(members).collect();
        assert_eq!(listed, vec![vec![], vec![3], vec![0, 3], vec![1, 2]]);
    }

    #[test]
    fn complement_stays_in_universe() {
        let s = set_of(5, [0, 4]);
        assert_eq!(members(&complement(&s)), vec![1, 2, 3]);
        assert_eq!(complement(&s).len(), 5);
    }
}
