use super::monoid::{pi_restriction_monoid, Crm};
use crate::duality::validate_rqf_morphism;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::order::FinitePoset;
use crate::quantale::{validate_rqf, QuantaleTables, Rqf};
use crate::report::{Report, Witness};
use crate::sets;
use crate::table::Table;
use fixedbitset::FixedBitSet;
use std::collections::{HashMap, VecDeque};
use std::ops::Deref;

/// `L^∨(S)`: down-sets of `S` containing the zero and closed under the joins
/// that exist, ordered by inclusion.
#[derive(Debug, Clone)]
pub struct LveeResult {
    pub rqf: Rqf,
    pub ideals: Vec<FixedBitSet>,
    /// Index of `s↓` for each element `s`.
    pub principal: Vec<usize>,
    pub report: Report,
    index: HashMap<FixedBitSet, usize>,
}

impl Deref for LveeResult {
    type Target = Rqf;

    fn deref(&self) -> &Rqf {
        &self.rqf
    }
}

impl LveeResult {
    pub fn index_of(&self, ideal: &FixedBitSet) -> Option<usize> {
        self.index.get(ideal).copied()
    }
}

pub fn l_vee(s: &Crm, limits: &Limits) -> Result<LveeResult> {
    let n = s.len();
    let start = s.join_closure(&sets::empty(n));
    let mut index: HashMap<FixedBitSet, usize> = HashMap::from([(start.clone(), 0)]);
    let mut ideals = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        for x in (0..n).filter(|&x| !i.contains(x)) {
            let mut grown = i.clone();
            grown.insert(x);
            let j = s.join_closure(&grown);
            if !index.contains_key(&j) {
                if ideals.len() == limits.max_elements {
                    return Err(Error::bound(
                        "join-closed ideals",
                        ideals.len() + 1,
                        limits.max_elements,
                    ));
                }
                index.insert(j.clone(), ideals.len());
                ideals.push(j.clone());
                queue.push_back(j);
            }
        }
    }
    ideals.sort_by(sets::canonical_cmp);
    let index: HashMap<FixedBitSet, usize> = ideals.iter().cloned().enumerate().map(|(i, u)| (u, i)).collect();
    let k = ideals.len();
    let find = |u: &FixedBitSet| index[&s.join_closure(u)];
    let poset = FinitePoset::from_fn(k, |a, b| ideals[a].is_subset(&ideals[b]));
    let meet = Table::from_fn(k, |a, b| index[&sets::intersection(&ideals[a], &ideals[b])]);
    let join = Table::from_fn(k, |a, b| find(&sets::union(&ideals[a], &ideals[b])));
    let mul = Table::from_fn(k, |a, b| {
        let products = ideals[a]
            .ones()
            .flat_map(|x| ideals[b].ones().map(move |y| s.mul(x, y)));
        find(&sets::set_of(n, products))
    });
    let image = |f: &dyn Fn(usize) -> usize| -> Vec<usize> {
        (0..k)
            .map(|a| find(&sets::set_of(n, ideals[a].ones().map(f))))
            .collect()
    };
    let tables = QuantaleTables {
        mul,
        unit: index[s.down(s.unit())],
        star: image(&|x| s.star(x)),
        plus: image(&|x| s.plus(x)),
    };
    let (report, rqf) = validate_rqf(poset, Some((meet, join)), tables);
    let Some(rqf) = rqf else {
        return Err(Error::rejected("join-closed ideals", report));
    };
    let principal = (0..n).map(|x| index[s.down(x)]).collect();
    Ok(LveeResult {
        rqf,
        ideals,
        principal,
        report,
        index,
    })
}

/// Checks that `map` is a bijection `s → t` preserving order both ways, the
/// multiplication, unit and both restrictions.
pub fn crm_isomorphism_check(map: &[usize], s: &Crm, t: &Crm) -> Report {
    let mut report = Report::new();
    let n = s.len();
    let mut hit = sets::empty(t.len());
    let bijective = map.len() == n && n == t.len() && map.iter().all(|&y| y < t.len() && !hit.put(y));
    report.check("iso.bijective", bijective, || Witness::of([map.len(), t.len()]));
    if !bijective {
        return report;
    }
    report.record(
        "iso.order",
        (0..n).find_map(|a| {
            (0..n)
                .find(|&b| s.leq(a, b) != t.leq(map[a], map[b]))
                .map(|b| Witness::of([a, b]))
        }),
    );
    report.record(
        "iso.mul",
        (0..n).find_map(|a| {
            (0..n)
                .find(|&b| map[s.mul(a, b)] != t.mul(map[a], map[b]))
                .map(|b| Witness::of([a, b]))
        }),
    );
    report.check("iso.unit", map[s.unit()] == t.unit(), || Witness::of([s.unit()]));
    report.record(
        "iso.star",
        (0..n)
            .find(|&a| map[s.star(a)] != t.star(map[a]))
            .map(|a| Witness::of([a])),
    );
    report.record(
        "iso.plus",
        (0..n)
            .find(|&a| map[s.plus(a)] != t.plus(map[a]))
            .map(|a| Witness::of([a])),
    );
    report
}

/// Checks that `map` is a bijective morphism `q → r`; a bijective
/// join- and meet-preserving map of lattices is an order isomorphism.
pub fn rqf_isomorphism_check(map: &[usize], q: &Rqf, r: &Rqf) -> Report {
    let mut report = Report::new();
    let mut hit = sets::empty(r.len());
    let bijective = map.len() == q.len() && q.len() == r.len() && map.iter().all(|&y| y < r.len() && !hit.put(y));
    report.check("iso.bijective", bijective, || Witness::of([map.len(), r.len()]));
    if bijective {
        report.extend(validate_rqf_morphism(map, q, r));
    }
    report
}

/// `s ↦ s↓` from `S` onto the partial isometries of `L^∨(S)`.
pub fn roundtrip_monoid(s: &Crm, lv: &LveeResult) -> Report {
    let (mut report, pi, carrier) = pi_restriction_monoid(&lv.rqf);
    let Some(pi) = pi else {
        return report;
    };
    let mut position = vec![usize::MAX; lv.len()];
    for (i, &a) in carrier.iter().enumerate() {
        position[a] = i;
    }
    let map: Vec<usize> = lv.principal.iter().map(|&i| position[i]).collect();
    report.check(
        "roundtrip.principal_are_pi",
        map.iter().all(|&i| i != usize::MAX),
        || Witness::of([map.iter().position(|&i| i == usize::MAX).unwrap_or(0)]),
    );
    if report.is_pass() {
        report.extend(crm_isomorphism_check(&map, s, &pi));
    }
    report
}

/// `a ↦ {p ∈ PI(Q) : p ≤ a}` from `Q` to `L^∨(PI(Q))`.
pub fn roundtrip_quantale(q: &Rqf, limits: &Limits) -> Result<(Report, Vec<usize>)> {
    let (mut report, pi, carrier) = pi_restriction_monoid(q);
    let Some(pi) = pi else {
        return Ok((report, Vec::new()));
    };
    let lv = l_vee(&pi, limits)?;
    let k = carrier.len();
    let map: Option<Vec<usize>> = (0..q.len())
        .map(|a| lv.index_of(&sets::set_of(k, (0..k).filter(|&i| q.leq(carrier[i], a)))))
        .collect();
    report.check("roundtrip.below_sets_closed", map.is_some(), || Witness::of([]));
    let map = map.unwrap_or_default();
    if report.is_pass() {
        report.extend(rqf_isomorphism_check(&map, q, &lv.rqf));
    }
    Ok((report, map))
}
