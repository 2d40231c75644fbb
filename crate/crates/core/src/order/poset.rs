use crate::report::{Report, Witness};
use crate::sets;
use fixedbitset::FixedBitSet;

/// An order table, not yet known to satisfy the poset axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    n: usize,
    leq: Vec<bool>,
}

impl FinitePoset {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = f(i, j);
            }
        }
        FinitePoset { n, leq }
    }

    /// Takes the listed pairs `(i, j)`, meaning `i <= j`, literally.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut leq = vec![false; n * n];
        for &(i, j) in pairs {
            leq[i * n + j] = true;
        }
        FinitePoset { n, leq }
    }

    /// Reflexive-transitive closure of the listed covering pairs.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Self {
        let mut p = FinitePoset::from_pairs(n, covers);
        for i in 0..n {
            p.leq[i * n + i] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if p.leq[i * n + k] {
                    for j in 0..n {
                        if p.leq[k * n + j] {
                            p.leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        p
    }

    pub fn chain(n: usize) -> Self {
        FinitePoset::from_fn(n, |i, j| i <= j)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.leq[i * self.n + j] = value;
    }

    /// Every related pair, in row-major order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.leq(i, j))
            .collect()
    }

    /// Hasse diagram edges `(i, j)` with `i` covered by `j`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j
                    && self.leq(i, j)
                    && !(0..self.n).any(|k| k != i && k != j && self.leq(i, k) && self.leq(k, j))
                {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn down_set(&self, i: usize) -> FixedBitSet {
        sets::set_of(self.n, (0..self.n).filter(|&k| self.leq(k, i)))
    }

    pub fn up_set(&self, i: usize) -> FixedBitSet {
        sets::set_of(self.n, (0..self.n).filter(|&k| self.leq(i, k)))
    }

    /// Restriction of the order to `elems`, renumbered by position.
    pub fn induced(&self, elems: &[usize]) -> FinitePoset {
        FinitePoset::from_fn(elems.len(), |i, j| self.leq(elems[i], elems[j]))
    }

    /// Product order on pairs, pair `(i, j)` stored at `i * other.len() + j`.
    pub fn product(&self, other: &FinitePoset) -> FinitePoset {
        let m = other.n;
        FinitePoset::from_fn(self.n * m, |a, b| self.leq(a / m, b / m) && other.leq(a % m, b % m))
    }

    pub fn validate(&self) -> Report {
        validate_poset(self)
    }
}

/// Checks reflexivity, antisymmetry and transitivity, with a witness for each
/// violated axiom.
pub fn validate_poset(p: &FinitePoset) -> Report {
    let n = p.len();
    let mut report = Report::new();
    let refl = (0..n).find(|&i| !p.leq(i, i));
    report.record("poset.reflexive", refl.map(|i| Witness::of([i])));

    let antisym = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| p.leq(i, j) && p.leq(j, i));
    report.record("poset.antisymmetric", antisym.map(|(i, j)| Witness::of([i, j])));

    let ups: Vec<FixedBitSet> = (0..n).map(|i| p.up_set(i)).collect();
    let mut trans = None;
    'outer: for i in 0..n {
        for j in ups[i].ones() {
            if !ups[j].is_subset(&ups[i]) {
                let k = ups[j].difference(&ups[i]).next().expect("non-subset");
                trans = Some((i, j, k));
                break 'outer;
            }
        }
    }
    report.record("poset.transitive", trans.map(|(i, j, k)| Witness::of([i, j, k])));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_chain_passes() {
        assert!(FinitePoset::chain(2).validate().is_pass());
    }

    #[test]
    fn symmetric_pair_fails_antisymmetry() {
        let p = FinitePoset::from_pairs(2, &[(0, 0), (1, 1), (0, 1), (1, 0)]);
        let r = validate_poset(&p);
        assert_eq!(r.witness("poset.antisymmetric").unwrap().indices, vec![0, 1]);
        assert!(!r.failed("poset.transitive"));
    }

    #[test]
    fn missing_closure_fails_transitivity() {
        let p = FinitePoset::from_pairs(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]);
        let r = validate_poset(&p);
        assert_eq!(r.witness("poset.transitive").unwrap().indices, vec![0, 1, 2]);
    }

    #[test]
    fn missing_diagonal_fails_reflexivity() {
        let p = FinitePoset::from_pairs(2, &[(0, 0), (0, 1)]);
        assert_eq!(validate_poset(&p).witness("poset.reflexive").unwrap().indices, vec![1]);
    }

    #[test]
    fn covers_round_trip() {
        let p = FinitePoset::chain(2).product(&FinitePoset::chain(2));
        let q = FinitePoset::from_covers(4, &p.covers());
        assert_eq!(p, q);
        assert_eq!(p.covers().len(), 4);
    }
}
