use super::lvee::LveeResult;
use super::monoid::Crm;
use crate::error::{Error, Result};
use crate::functors::FilterCategoryResult;
use crate::report::{Report, Witness};
use crate::sets;
use crate::topcat::{etale_report, validate_covering_functor, CategoryData, FiniteCategory, TopCategory};
use crate::topology::{is_homeomorphism, Topology};
use fixedbitset::FixedBitSet;
use std::ops::Deref;

/// Generators `g ≠ 0` whose up-set `g↑` is completely prime: no `t ≥ g` is
/// the join of the elements below it that are not above `g`.
pub fn cp_generators(s: &Crm) -> Vec<usize> {
    (0..s.len())
        .filter(|&g| g != s.zero())
        .filter(|&g| {
            s.up(g).ones().all(|t| {
                let mut outside = s.down(t).clone();
                outside.difference_with(s.up(g));
                s.lub_of(outside.ones()) != Some(t)
            })
        })
        .collect()
}

/// The category of completely prime filters of `S`, each stored by its
/// least element.
#[derive(Debug, Clone)]
pub struct SFilterCategory {
    pub topcat: TopCategory,
    pub generators: Vec<usize>,
    pub members: Vec<FixedBitSet>,
    /// `X'_a` for every element `a`, as a set of arrows.
    pub x_sets: Vec<FixedBitSet>,
    pub laws: Report,
}

impl Deref for SFilterCategory {
    type Target = TopCategory;

    fn deref(&self) -> &TopCategory {
        &self.topcat
    }
}

impl SFilterCategory {
    pub fn arrow_of(&self, generator: usize) -> Option<usize> {
        self.generators.binary_search(&generator).ok()
    }

    /// The arrow whose member set is `members`, if it is one.
    pub fn arrow_with_members(&self, s: &Crm, members: &FixedBitSet) -> Option<usize> {
        let g = members.ones().find(|&g| s.up(g) == members)?;
        self.arrow_of(g)
    }
}

pub fn s_filters(s: &Crm) -> Result<SFilterCategory> {
    let generators = cp_generators(s);
    let k = generators.len();
    let position = |g: usize| generators.binary_search(&g).ok();
    let mut laws = Report::new();
    let d: Vec<Option<usize>> = generators.iter().map(|&g| position(s.star(g))).collect();
    let r: Vec<Option<usize>> = generators.iter().map(|&g| position(s.plus(g))).collect();
    laws.record(
        "sfilters.d_completely_prime",
        d.iter().position(Option::is_none).map(|i| Witness::of([i])),
    );
    laws.record(
        "sfilters.r_completely_prime",
        r.iter().position(Option::is_none).map(|i| Witness::of([i])),
    );
    if !laws.is_pass() {
        return Err(Error::rejected("S-filter category", laws));
    }
    let d: Vec<usize> = d.into_iter().flatten().collect();
    let r: Vec<usize> = r.into_iter().flatten().collect();
    let mut comp = Vec::new();
    let mut missing = None;
    for a in 0..k {
        for b in (0..k).filter(|&b| d[a] == r[b]) {
            match position(s.mul(generators[a], generators[b])) {
                Some(c) => comp.push([a, b, c]),
                None => missing = missing.or(Some(Witness::of([a, b]))),
            }
        }
    }
    laws.record("sfilters.product_completely_prime", missing);
    if !laws.is_pass() {
        return Err(Error::rejected("S-filter category", laws));
    }
    let identities: Vec<usize> = (0..k).filter(|&i| s.is_projection(generators[i])).collect();
    let data = CategoryData {
        arrows: k,
        identities,
        d,
        r,
        comp,
    };
    let cat = FiniteCategory::new(&data).map_err(|report| Error::rejected("S-filter category", report))?;
    let x_sets: Vec<FixedBitSet> = (0..s.len())
        .map(|a| sets::set_of(k, (0..k).filter(|&i| s.leq(generators[i], a))))
        .collect();
    let topology = Topology::generated_by(k, &x_sets);
    let topcat = TopCategory::new(cat, topology).map_err(|report| Error::rejected("S-filter category", report))?;
    laws.extend(etale_report(&topcat));
    let members = generators.iter().map(|&g| s.up(g).clone()).collect();
    Ok(SFilterCategory {
        topcat,
        generators,
        members,
        x_sets,
        laws,
    })
}

/// `A' ↦ (A')↑ = {I : A' ∩ I ≠ ∅}` into `C(L^∨(S))`, if every image is an arrow.
pub fn lift_map(sf: &SFilterCategory, lv: &LveeResult, c: &FilterCategoryResult) -> Option<Vec<usize>> {
    sf.generators
        .iter()
        .map(|&g| {
            let members = sets::set_of(lv.len(), (0..lv.len()).filter(|&i| lv.ideals[i].contains(g)));
            c.arrow_with_members(&lv.rqf, &members)
        })
        .collect()
}

/// The lift is a bijection and an isomorphism of topological categories,
/// sends `X'_a` to `X_{a↓}`, and `d`, `r`, `*`, `⁺` transfer through `↓`.
pub fn s_filter_correspondence(s: &Crm, sf: &SFilterCategory, lv: &LveeResult, c: &FilterCategoryResult) -> Report {
    let mut report = Report::new();
    let lift = lift_map(sf, lv, c);
    report.check("sfilter.lift_lands", lift.is_some(), || Witness::of([]));
    let Some(lift) = lift else {
        return report;
    };
    let k = sf.len();
    let mut hit = sets::empty(c.len());
    let bijective = k == c.len() && lift.iter().all(|&y| !hit.put(y));
    report.check("sfilter.bijection", bijective, || Witness::of([k, c.len()]));
    if !bijective {
        return report;
    }
    let functor = validate_covering_functor(&lift, sf.category(), c.category());
    report.record(
        "sfilter.functor",
        functor
            .failures()
            .next()
            .map(|f| f.witness.clone().unwrap_or_else(|| Witness::of([])).with_note(f.law)),
    );
    report.check(
        "sfilter.homeomorphism",
        is_homeomorphism(&lift, sf.topology(), c.topology()),
        || Witness::of([]),
    );
    report.record(
        "sfilter.x_sets",
        (0..s.len())
            .find(|&a| sets::set_of(c.len(), sf.x_sets[a].ones().map(|i| lift[i])) != c.x_sets[lv.principal[a]])
            .map(|a| Witness::of([a])),
    );
    let lowered = |arrow: usize| {
        sets::set_of(
            s.len(),
            (0..s.len()).filter(|&x| c.members[arrow].contains(lv.principal[x])),
        )
    };
    report.record(
        "sfilter.members_transfer",
        (0..k)
            .find(|&i| lowered(lift[i]) != sf.members[i])
            .map(|i| Witness::of([i])),
    );
    report.record(
        "sfilter.d_transfer",
        (0..k)
            .find(|&i| sf.members[sf.d(i)] != lowered(c.d(lift[i])))
            .map(|i| Witness::of([i])),
    );
    report.record(
        "sfilter.r_transfer",
        (0..k)
            .find(|&i| sf.members[sf.r(i)] != lowered(c.r(lift[i])))
            .map(|i| Witness::of([i])),
    );
    report.record(
        "sfilter.star_transfer",
        (0..k).find_map(|i| {
            sf.members[i]
                .ones()
                .find(|&a| !c.members[c.d(lift[i])].contains(lv.principal[s.star(a)]))
                .map(|a| Witness::of([i, a]))
        }),
    );
    report.record(
        "sfilter.product_transfer",
        sf.category()
            .composable_pairs()
            .find(|&(a, b)| {
                let products = sf.members[a]
                    .ones()
                    .flat_map(|x| sf.members[b].ones().map(move |y| s.mul(x, y)));
                let mut up = sets::empty(s.len());
                for p in products {
                    up.union_with(s.up(p));
                }
                sf.category().comp(a, b).map(|ab| &sf.members[ab]) != Some(&up)
            })
            .map(|(a, b)| Witness::of([a, b])),
    );
    report
}
