use super::category::FiniteCategory;
use super::etale::TopCategory;
use crate::error::{Error, Result};
use crate::report::{Report, Witness};
use crate::sets;
use crate::topology::continuity_witness;
use fixedbitset::FixedBitSet;

pub fn identity_map(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// `f ∘ g`
pub fn compose_maps(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

/// Functoriality, then `d`- and `r`-bijectivity on each star.
pub fn validate_covering_functor(map: &[usize], c: &FiniteCategory, d: &FiniteCategory) -> Report {
    let mut report = Report::new();
    let shape = if map.len() != c.len() {
        Some(Witness::of([map.len()]).with_note("map is not defined on every arrow"))
    } else {
        (0..c.len())
            .find(|&a| map[a] >= d.len())
            .map(|a| Witness::of([a]).with_note("image out of range"))
    };
    report.record("functor.shape", shape);
    if !report.is_pass() {
        return report;
    }
    let n = c.len();
    let f = |a: usize| map[a];
    report.record(
        "functor.identities",
        c.identities()
            .iter()
            .find(|&&e| !d.is_identity(f(e)))
            .map(|&e| Witness::of([e])),
    );
    report.record(
        "functor.d",
        (0..n).find(|&a| f(c.d(a)) != d.d(f(a))).map(|a| Witness::of([a])),
    );
    report.record(
        "functor.r",
        (0..n).find(|&a| f(c.r(a)) != d.r(f(a))).map(|a| Witness::of([a])),
    );
    if !report.is_pass() {
        return report;
    }
    report.record(
        "functor.composition",
        c.composable_pairs()
            .find(|&(a, b)| d.comp(f(a), f(b)) != c.comp(a, b).map(f))
            .map(|(a, b)| Witness::of([a, b])),
    );
    for (inj, surj, side) in [
        (
            "functor.d_injective",
            "functor.d_surjective",
            FiniteCategory::d as fn(&FiniteCategory, usize) -> usize,
        ),
        ("functor.r_injective", "functor.r_surjective", FiniteCategory::r),
    ] {
        let clash = (0..n).find_map(|a| {
            (a + 1..n)
                .find(|&b| side(c, a) == side(c, b) && f(a) == f(b))
                .map(|b| Witness::of([a, b]))
        });
        report.record(inj, clash);
        let missing = c.identities().iter().find_map(|&e| {
            (0..d.len())
                .filter(|&y| side(d, y) == f(e))
                .find(|&y| !(0..n).any(|x| side(c, x) == e && f(x) == y))
                .map(|y| Witness::of([e, y]))
        });
        report.record(surj, missing);
    }
    report
}

pub fn is_covering_functor(map: &[usize], c: &FiniteCategory, d: &FiniteCategory) -> bool {
    validate_covering_functor(map, c, d).is_pass()
}

/// Fails with `[a]` when the preimage of the least neighbourhood of `F(a)` is
/// not open.
pub fn continuity_check(map: &[usize], src: &TopCategory, dst: &TopCategory) -> Result<(), Witness> {
    continuity_witness(map, src.topology(), dst.topology()).map_or(Ok(()), |a| Err(Witness::of([a])))
}

fn star_sizes(c: &FiniteCategory) -> Vec<(usize, usize)> {
    let mut sizes = vec![(0, 0); c.len()];
    for a in 0..c.len() {
        sizes[c.d(a)].0 += 1;
        sizes[c.r(a)].1 += 1;
    }
    sizes
}

/// Every continuous covering functor `c → d`, in lexicographic order of the
/// arrow map. Identities are assigned first; each further arrow has its `d`
/// and `r` images forced and must keep both stars injective.
pub fn covering_functors(c: &TopCategory, d: &TopCategory, limit: usize) -> Result<Vec<Vec<usize>>> {
    struct Search<'a> {
        c: &'a TopCategory,
        d: &'a TopCategory,
        order: Vec<usize>,
        map: Vec<usize>,
        by_d: Vec<FixedBitSet>,
        by_r: Vec<FixedBitSet>,
        c_sizes: Vec<(usize, usize)>,
        d_sizes: Vec<(usize, usize)>,
        out: Vec<Vec<usize>>,
        limit: usize,
    }

    impl Search<'_> {
        fn candidates(&self, a: usize) -> Vec<usize> {
            let (c, d) = (self.c, self.d);
            if c.is_identity(a) {
                d.identities()
                    .iter()
                    .copied()
                    .filter(|&f| self.d_sizes[f] == self.c_sizes[a])
                    .collect()
            } else {
                let (fd, fr) = (self.map[c.d(a)], self.map[c.r(a)]);
                (0..d.len())
                    .filter(|&y| d.d(y) == fd && d.r(y) == fr)
                    .filter(|&y| !self.by_d[c.d(a)].contains(y) && !self.by_r[c.r(a)].contains(y))
                    .collect()
            }
        }

        fn go(&mut self, depth: usize) -> Result<()> {
            if depth == self.order.len() {
                let (c, d) = (self.c, self.d);
                if is_covering_functor(&self.map, c, d) && continuity_check(&self.map, c, d).is_ok() {
                    self.out.push(self.map.clone());
                    if self.out.len() > self.limit {
                        return Err(Error::bound("covering functor hom-set", self.out.len(), self.limit));
                    }
                }
                return Ok(());
            }
            let a = self.order[depth];
            let (da, ra) = (self.c.d(a), self.c.r(a));
            for y in self.candidates(a) {
                self.map[a] = y;
                self.by_d[da].insert(y);
                self.by_r[ra].insert(y);
                self.go(depth + 1)?;
                self.by_d[da].set(y, false);
                self.by_r[ra].set(y, false);
            }
            Ok(())
        }
    }

    let n = c.len();
    let mut order: Vec<usize> = c.identities().to_vec();
    order.extend((0..n).filter(|&a| !c.is_identity(a)));
    let mut search = Search {
        c,
        d,
        order,
        map: vec![usize::MAX; n],
        by_d: vec![sets::empty(d.len()); n],
        by_r: vec![sets::empty(d.len()); n],
        c_sizes: star_sizes(c),
        d_sizes: star_sizes(d),
        out: Vec::new(),
        limit,
    };
    search.go(0)?;
    search.out.sort();
    Ok(search.out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::Topology;

    #[test]
    fn identity_is_covering() {
        let c = FiniteCategory::pair_groupoid(2);
        assert!(is_covering_functor(&identity_map(4), &c, &c));
    }

    #[test]
    fn collapse_to_trivial_monoid_is_not_d_injective() {
        let c = FiniteCategory::pair_groupoid(2);
        let t = FiniteCategory::discrete(1);
        let r = validate_covering_functor(&[0, 0, 0, 0], &c, &t);
        assert_eq!(r.witness("functor.d_injective").unwrap().indices, vec![0, 2]);
    }

    #[test]
    fn pair_groupoid_endofunctors() {
        let c = TopCategory::discrete(FiniteCategory::pair_groupoid(2));
        let all = covering_functors(&c, &c, 100).unwrap();
        assert_eq!(all, vec![vec![0, 1, 2, 3], vec![3, 2, 1, 0]]);
    }

    #[test]
    fn indiscrete_to_discrete_is_discontinuous() {
        let cat = FiniteCategory::discrete(2);
        let src = TopCategory::new(cat.clone(), Topology::indiscrete(2)).unwrap();
        let dst = TopCategory::discrete(cat);
        assert_eq!(continuity_check(&[0, 1], &src, &dst).unwrap_err().indices, vec![0]);
    }
}
