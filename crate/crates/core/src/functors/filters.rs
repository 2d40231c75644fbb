use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::order::{cp_filter_from_members, enumerate_cp_filters, pt_topology, CpFilter};
use crate::quantale::Rqf;
use crate::report::{Report, Witness};
use crate::sets;
use crate::topcat::{etale_report, CategoryData, FiniteCategory, TopCategory};
use crate::topology::{is_homeomorphism, Topology};
use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use std::collections::HashMap;
use std::ops::Deref;

/// `(A*)↑`
pub fn filter_star(q: &Rqf, a: &FixedBitSet) -> FixedBitSet {
    q.up_closure(&sets::set_of(q.len(), a.ones().map(|x| q.star(x))))
}

/// `(A⁺)↑`
pub fn filter_plus(q: &Rqf, a: &FixedBitSet) -> FixedBitSet {
    q.up_closure(&sets::set_of(q.len(), a.ones().map(|x| q.plus(x))))
}

/// `(AB)↑`, defined when `d(A) = r(B)`.
pub fn filter_product(q: &Rqf, a: &FixedBitSet, b: &FixedBitSet) -> Option<FixedBitSet> {
    if filter_star(q, a) != filter_plus(q, b) {
        return None;
    }
    Some(product_closure(q, a, b))
}

fn product_closure(q: &Rqf, a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut s = sets::empty(q.len());
    for x in a.ones() {
        for y in b.ones() {
            s.insert(q.mul(x, y));
        }
    }
    q.up_closure(&s)
}

/// `C(Q)`: completely prime filters as arrows, identities the filters that
/// contain a projection, topology generated by `X_a` for partial isometries `a`.
#[derive(Debug, Clone)]
pub struct FilterCategoryResult {
    pub topcat: TopCategory,
    pub filters: Vec<CpFilter>,
    pub members: Vec<FixedBitSet>,
    /// `X_a` for every element `a`, as a set of arrows.
    pub x_sets: Vec<FixedBitSet>,
    pub laws: Report,
    by_cogenerator: HashMap<usize, usize>,
}

impl Deref for FilterCategoryResult {
    type Target = TopCategory;

    fn deref(&self) -> &TopCategory {
        &self.topcat
    }
}

impl FilterCategoryResult {
    pub fn arrow_of(&self, filter: CpFilter) -> Option<usize> {
        self.by_cogenerator.get(&filter.cogenerator).copied()
    }

    /// The arrow whose member set is `members`, if that set is a completely
    /// prime filter.
    pub fn arrow_with_members(&self, q: &Rqf, members: &FixedBitSet) -> Option<usize> {
        cp_filter_from_members(q, members).and_then(|f| self.arrow_of(f))
    }
}

pub fn c_object(q: &Rqf, limits: &Limits) -> Result<FilterCategoryResult> {
    if q.len() > limits.max_elements {
        return Err(Error::bound("quantale handed to C", q.len(), limits.max_elements));
    }
    let filters = enumerate_cp_filters(q);
    let k = filters.len();
    let members: Vec<FixedBitSet> = filters.iter().map(|f| f.members(q)).collect();
    let by_cogenerator: HashMap<usize, usize> = filters.iter().enumerate().map(|(i, f)| (f.cogenerator, i)).collect();
    let arrow = |s: &FixedBitSet| cp_filter_from_members(q, s).map(|f| by_cogenerator[&f.cogenerator]);

    let mut laws = Report::new();
    let d: Vec<Option<usize>> = members.iter().map(|a| arrow(&filter_star(q, a))).collect();
    let r: Vec<Option<usize>> = members.iter().map(|a| arrow(&filter_plus(q, a))).collect();
    laws.record(
        "filters.d_completely_prime",
        d.iter().position(Option::is_none).map(|i| Witness::of([i])),
    );
    laws.record(
        "filters.r_completely_prime",
        r.iter().position(Option::is_none).map(|i| Witness::of([i])),
    );
    if !laws.is_pass() {
        return Err(Error::rejected("filter category", laws));
    }
    let d: Vec<usize> = d.into_iter().flatten().collect();
    let r: Vec<usize> = r.into_iter().flatten().collect();
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|a| (0..k).map(move |b| (a, b)))
        .filter(|&(a, b)| d[a] == r[b])
        .collect();
    let products: Vec<Option<usize>> = pairs
        .par_iter()
        .map(|&(a, b)| arrow(&product_closure(q, &members[a], &members[b])))
        .collect();
    laws.record(
        "filters.product_completely_prime",
        products
            .iter()
            .position(Option::is_none)
            .map(|i| Witness::of([pairs[i].0, pairs[i].1])),
    );
    if !laws.is_pass() {
        return Err(Error::rejected("filter category", laws));
    }
    let comp = pairs
        .iter()
        .zip(&products)
        .map(|(&(a, b), c)| [a, b, c.expect("checked")])
        .collect();
    let identities: Vec<usize> = (0..k).filter(|&i| !members[i].is_disjoint(q.projections())).collect();
    let data = CategoryData {
        arrows: k,
        identities,
        d,
        r,
        comp,
    };
    let cat = match FiniteCategory::new(&data) {
        Ok(c) => c,
        Err(report) => {
            laws.extend(report);
            return Err(Error::rejected("filter category", laws));
        }
    };
    laws.pass("filters.category");

    let n = q.len();
    let x_sets: Vec<FixedBitSet> = (0..n)
        .map(|a| sets::set_of(k, (0..k).filter(|&i| members[i].contains(a))))
        .collect();
    let base: Vec<FixedBitSet> = q.pi_list().iter().map(|&p| x_sets[p].clone()).collect();
    let topology = Topology::generated_by(k, &base);
    x_laws(q, &cat, &topology, &x_sets, &mut laws);

    let topcat = match TopCategory::new(cat, topology) {
        Ok(tc) => tc,
        Err(report) => {
            laws.extend(report);
            return Err(Error::rejected("filter category", laws));
        }
    };
    laws.extend(etale_report(&topcat));
    Ok(FilterCategoryResult {
        topcat,
        filters,
        members,
        x_sets,
        laws,
        by_cogenerator,
    })
}

/// The laws of the sets `X_a`, and `d(X_s) = X_{s*}`, `r(X_s) = X_{s⁺}`.
fn x_laws(q: &Rqf, cat: &FiniteCategory, topology: &Topology, x: &[FixedBitSet], laws: &mut Report) {
    let n = q.len();
    let k = cat.len();
    laws.check("filters.x_top", x[q.top()].count_ones(..) == k, || {
        Witness::of([q.top()])
    });
    laws.check("filters.x_bottom", x[q.bottom()].is_clear(), || {
        Witness::of([q.bottom()])
    });
    laws.check("filters.x_unit", x[q.unit()] == *cat.identity_set(), || {
        Witness::of([q.unit()])
    });
    let pair = |bad: &(dyn Fn(usize, usize) -> bool + Sync)| {
        (0..n)
            .into_par_iter()
            .find_map_first(|a| (0..n).find(|&b| bad(a, b)).map(|b| Witness::of([a, b])))
    };
    laws.record(
        "filters.x_meet",
        pair(&|a, b| x[q.meet(a, b)] != sets::intersection(&x[a], &x[b])),
    );
    laws.record(
        "filters.x_join",
        pair(&|a, b| x[q.join(a, b)] != sets::union(&x[a], &x[b])),
    );
    let union_formula = (0..n).find(|&a| {
        let mut u = sets::empty(k);
        for p in q.down(a).ones().filter(|&p| q.is_pi(p)) {
            u.union_with(&x[p]);
        }
        u != x[a]
    });
    laws.record("filters.x_union", union_formula.map(|a| Witness::of([a])));
    laws.record(
        "filters.x_open",
        (0..n).find(|&a| !topology.is_open(&x[a])).map(|a| Witness::of([a])),
    );
    laws.record(
        "filters.d_image",
        (0..n)
            .find(|&s| cat.set_d(&x[s]) != x[q.star(s)])
            .map(|s| Witness::of([s])),
    );
    laws.record(
        "filters.r_image",
        (0..n)
            .find(|&s| cat.set_r(&x[s]) != x[q.plus(s)])
            .map(|s| Witness::of([s])),
    );
}

/// The filter calculus on every filter of `C(Q)`:
/// `a A* ⊆ A`; `A = (a A*)↑` for a partial isometry `a ∈ A`;
/// `(aA)↑` is a completely prime filter with `d = A` for an identity filter
/// `A` and a partial isometry `a` with `a* ∈ A`;
/// filters sharing a partial isometry and `d` coincide;
/// `d(AB) = d(B)`, `r(AB) = r(A)`, `A d(A) = A = r(A) A`.
pub fn filter_calculus_laws(q: &Rqf, c: &FilterCategoryResult) -> Report {
    let k = c.len();
    let m = &c.members;
    let mut laws = Report::new();
    let star_sets: Vec<FixedBitSet> = m
        .iter()
        .map(|a| sets::set_of(q.len(), a.ones().map(|x| q.star(x))))
        .collect();
    let absorbs = (0..k).find_map(|i| {
        m[i].ones()
            .find(|&a| star_sets[i].ones().any(|s| !m[i].contains(q.mul(a, s))))
            .map(|a| Witness::of([i, a]))
    });
    laws.record("filters.absorbs_star", absorbs);
    let generated = (0..k).find_map(|i| {
        m[i].ones()
            .filter(|&a| q.is_pi(a))
            .find(|&a| {
                let s = sets::set_of(q.len(), star_sets[i].ones().map(|s| q.mul(a, s)));
                q.up_closure(&s) != m[i]
            })
            .map(|a| Witness::of([i, a]))
    });
    laws.record("filters.pi_generates", generated);
    let translate = (0..k).filter(|&i| c.is_identity(i)).find_map(|i| {
        q.pi_list()
            .iter()
            .copied()
            .filter(|&a| m[i].contains(q.star(a)))
            .find(|&a| {
                let s = q.up_closure(&sets::set_of(q.len(), m[i].ones().map(|x| q.mul(a, x))));
                match c.arrow_with_members(q, &s) {
                    Some(j) => c.d(j) != i,
                    None => true,
                }
            })
            .map(|a| Witness::of([i, a]))
    });
    laws.record("filters.translate", translate);
    let shared = (0..k).find_map(|i| {
        (i + 1..k)
            .find(|&j| c.d(i) == c.d(j) && q.pi_list().iter().any(|&p| m[i].contains(p) && m[j].contains(p)))
            .map(|j| Witness::of([i, j]))
    });
    laws.record("filters.shared_pi", shared);
    let composites: Vec<(usize, usize, usize)> = c
        .composable_pairs()
        .map(|(a, b)| (a, b, c.comp(a, b).expect("composable")))
        .collect();
    laws.record(
        "filters.product_d",
        composites
            .iter()
            .find(|&&(a, b, ab)| c.d(ab) != c.d(b) || c.r(ab) != c.r(a))
            .map(|&(a, b, _)| Witness::of([a, b])),
    );
    laws.record(
        "filters.unit_laws",
        (0..k)
            .find(|&a| c.comp(a, c.d(a)) != Some(a) || c.comp(c.r(a), a) != Some(a))
            .map(|a| Witness::of([a])),
    );
    laws.record(
        "filters.product_formula",
        composites
            .iter()
            .find(|&&(a, b, ab)| filter_product(q, &m[a], &m[b]).as_ref() != Some(&m[ab]))
            .map(|&(a, b, _)| Witness::of([a, b])),
    );
    laws
}

/// The identity filters of `C(Q)` as a subspace, against the points of `e↓`:
/// `A ↦ A ∩ e↓` is a homeomorphism with inverse `F ↦ F↑`.
pub fn identity_space_vs_pt(q: &Rqf, c: &FilterCategoryResult) -> Report {
    let mut laws = Report::new();
    let (down, elems) = q.down_frame(q.unit());
    let pt = pt_topology(&down);
    let ids = c.identities();
    let mut position = vec![usize::MAX; q.len()];
    for (i, &x) in elems.iter().enumerate() {
        position[x] = i;
    }
    let restricted: Vec<Option<usize>> = ids
        .iter()
        .map(|&a| {
            let s = sets::set_of(
                elems.len(),
                c.members[a]
                    .ones()
                    .filter_map(|x| (position[x] != usize::MAX).then_some(position[x])),
            );
            cp_filter_from_members(&down, &s).and_then(|f| pt.points.iter().position(|&p| p == f))
        })
        .collect();
    laws.record(
        "points.identity_restriction",
        restricted
            .iter()
            .position(Option::is_none)
            .map(|i| Witness::of([ids[i]])),
    );
    if !laws.is_pass() {
        return laws;
    }
    let map: Vec<usize> = restricted.into_iter().flatten().collect();
    let space = c.topology().subspace(ids);
    laws.check(
        "points.identity_homeomorphism",
        is_homeomorphism(&map, &space, &pt.topology),
        || Witness::of([ids.len(), pt.len()]),
    );
    let lift = pt.points.iter().enumerate().find_map(|(i, f)| {
        let lifted = q.up_closure(&sets::set_of(q.len(), f.members(&down).ones().map(|x| elems[x])));
        match c.arrow_with_members(q, &lifted) {
            Some(a) if c.is_identity(a) && map[ids.binary_search(&a).expect("identity")] == i => None,
            _ => Some(Witness::of([i])),
        }
    });
    laws.record("points.lift", lift);
    laws
}
