use super::lvee::LveeResult;
use super::monoid::Crm;
use crate::duality::validate_rqf_morphism;
use crate::error::{Error, Result};
use crate::report::{Report, Witness};
use crate::sets;
use std::collections::HashMap;

/// Monoid, zero and restriction preservation, and preservation of joins of
/// compatible pairs.
pub fn validate_crm_morphism(map: &[usize], s: &Crm, t: &Crm) -> Report {
    let mut report = Report::new();
    let n = s.len();
    let shape = if map.len() != n {
        Some(Witness::of([map.len()]).with_note("map is not defined on every element"))
    } else {
        (0..n)
            .find(|&a| map[a] >= t.len())
            .map(|a| Witness::of([a]).with_note("image out of range"))
    };
    report.record("crm_morphism.shape", shape);
    if !report.is_pass() {
        return report;
    }
    let f = |a: usize| map[a];
    report.record(
        "crm_morphism.multiplicative",
        (0..n).find_map(|a| {
            (0..n)
                .find(|&b| f(s.mul(a, b)) != t.mul(f(a), f(b)))
                .map(|b| Witness::of([a, b]))
        }),
    );
    report.check("crm_morphism.unit", f(s.unit()) == t.unit(), || Witness::of([s.unit()]));
    report.check("crm_morphism.zero", f(s.zero()) == t.zero(), || Witness::of([s.zero()]));
    report.record(
        "crm_morphism.star",
        (0..n).find(|&a| f(s.star(a)) != t.star(f(a))).map(|a| Witness::of([a])),
    );
    report.record(
        "crm_morphism.plus",
        (0..n).find(|&a| f(s.plus(a)) != t.plus(f(a))).map(|a| Witness::of([a])),
    );
    report.record(
        "crm_morphism.compatible_joins",
        (0..n).find_map(|a| {
            (a + 1..n)
                .filter(|&b| s.compatible(a, b))
                .find(|&b| s.lub(a, b).map(f) != t.lub(f(a), f(b)))
                .map(|b| Witness::of([a, b]))
        }),
    );
    report
}

/// Every element of `t` is the join of the elements below it that lie under
/// some image. Fails with `[t]`.
pub fn proper_check(map: &[usize], t: &Crm) -> Result<(), Witness> {
    let mut covered = sets::empty(t.len());
    for &y in map {
        covered.union_with(t.down(y));
    }
    match (0..t.len()).find(|&y| t.lub_of(sets::intersection(t.down(y), &covered).ones()) != Some(y)) {
        Some(y) => Err(Witness::of([y])),
        None => Ok(()),
    }
}

/// A proper morphism that also preserves binary meets.
pub fn validate_callitic(map: &[usize], s: &Crm, t: &Crm) -> Report {
    let mut report = validate_crm_morphism(map, s, t);
    if !report.is_pass() {
        return report;
    }
    let n = s.len();
    report.record(
        "crm_morphism.meets",
        (0..n).find_map(|a| {
            (a + 1..n)
                .find(|&b| map[s.meet(a, b)] != t.meet(map[a], map[b]))
                .map(|b| Witness::of([a, b]))
        }),
    );
    report.record("crm_morphism.proper", proper_check(map, t).err());
    report
}

pub fn is_callitic(map: &[usize], s: &Crm, t: &Crm) -> bool {
    validate_callitic(map, s, t).is_pass()
}

/// Every completely prime filter `↑g` of `t` contains the image of some
/// element. Fails with `[g]`.
pub fn filters_meet_image(map: &[usize], t: &Crm) -> Result<(), Witness> {
    let mut images = sets::empty(t.len());
    for &y in map {
        images.insert(y);
    }
    match super::sfilter::cp_generators(t)
        .into_iter()
        .find(|&g| !t.up(g).ones().any(|y| images.contains(y)))
    {
        Some(g) => Err(Witness::of([g])),
        None => Ok(()),
    }
}

/// `Θ(I) = ⋁ θ(I)` from `L^∨(S)` to `L^∨(T)`, with checks that computing it
/// from the maximal elements of `I` agrees, that it extends `θ` on principal
/// ideals, and that it is a morphism of restriction quantal frames.
pub fn theta_extension(map: &[usize], s: &Crm, lv_s: &LveeResult, t: &Crm, lv_t: &LveeResult) -> (Vec<usize>, Report) {
    let mut report = Report::new();
    let image = |items: &mut dyn Iterator<Item = usize>| -> usize {
        lv_t.index_of(&t.join_closure(&sets::set_of(t.len(), items.map(|a| map[a]))))
            .expect("join closures are ideals")
    };
    let theta: Vec<usize> = lv_s.ideals.iter().map(|i| image(&mut i.ones())).collect();
    let maximal = |i: &fixedbitset::FixedBitSet| -> Vec<usize> {
        i.ones().filter(|&a| i.ones().all(|b| b == a || !s.leq(a, b))).collect()
    };
    report.record(
        "theta.well_defined",
        lv_s.ideals
            .iter()
            .position(|i| image(&mut maximal(i).into_iter()) != theta[lv_s.index_of(i).expect("own ideal")])
            .map(|i| Witness::of([i])),
    );
    report.record(
        "theta.extends",
        (0..s.len())
            .find(|&a| theta[lv_s.principal[a]] != lv_t.principal[map[a]])
            .map(|a| Witness::of([a])),
    );
    report.extend(validate_rqf_morphism(&theta, &lv_s.rqf, &lv_t.rqf));
    (theta, report)
}

/// Every callitic morphism `s → t`, in lexicographic order. Values are
/// assigned to join-irreducibles by height, kept monotone and consistent
/// with meets, then extended by joins.
pub fn callitic_morphisms(s: &Crm, t: &Crm, limit: usize) -> Result<Vec<Vec<usize>>> {
    let mut irreducibles = s.join_irreducibles();
    irreducibles.sort_by_key(|&j| (s.down(j).count_ones(..), j));
    let below: Vec<Vec<usize>> = (0..s.len())
        .map(|a| irreducibles.iter().copied().filter(|&j| s.leq(j, a)).collect())
        .collect();

    struct Search<'a> {
        s: &'a Crm,
        t: &'a Crm,
        irreducibles: Vec<usize>,
        below: Vec<Vec<usize>>,
        values: HashMap<usize, usize>,
        out: Vec<Vec<usize>>,
        visited: usize,
        limit: usize,
    }

    impl Search<'_> {
        fn extend(&self, a: usize) -> Option<usize> {
            self.t
                .lub_of(self.below[a].iter().filter_map(|j| self.values.get(j).copied()))
        }

        fn go(&mut self, depth: usize) -> Result<()> {
            self.visited += 1;
            let budget = self.limit.saturating_mul(1000);
            if self.visited > budget {
                return Err(Error::bound("morphism search nodes", self.visited, budget));
            }
            let (s, t) = (self.s, self.t);
            if depth == self.irreducibles.len() {
                let map: Option<Vec<usize>> = (0..s.len()).map(|a| self.extend(a)).collect();
                if let Some(map) = map.filter(|m| is_callitic(m, s, t)) {
                    self.out.push(map);
                    if self.out.len() > self.limit {
                        return Err(Error::bound("callitic hom-set", self.out.len(), self.limit));
                    }
                }
                return Ok(());
            }
            let j = self.irreducibles[depth];
            for y in 0..t.len() {
                if s.is_projection(j) && !t.projections().contains(y) {
                    continue;
                }
                let consistent = self.irreducibles[..depth].iter().all(|&i| {
                    let yi = self.values[&i];
                    (!s.leq(i, j) || t.leq(yi, y)) && self.extend(s.meet(i, j)) == Some(t.meet(yi, y))
                });
                if !consistent {
                    continue;
                }
                self.values.insert(j, y);
                self.go(depth + 1)?;
                self.values.remove(&j);
            }
            Ok(())
        }
    }

    let mut search = Search {
        s,
        t,
        irreducibles,
        below,
        values: HashMap::new(),
        out: Vec::new(),
        visited: 0,
        limit,
    };
    search.go(0)?;
    search.out.sort();
    Ok(search.out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crm::monoid::tests::partial_bijections;

    #[test]
    fn identity_is_callitic() {
        let s = partial_bijections();
        let id: Vec<usize> = (0..s.len()).collect();
        assert!(is_callitic(&id, &s, &s));
        assert!(filters_meet_image(&id, &s).is_ok());
    }

    #[test]
    fn partial_bijection_automorphisms() {
        let s = partial_bijections();
        let all = callitic_morphisms(&s, &s, 1000).unwrap();
        assert_eq!(all.len(), 2);
    }
}
