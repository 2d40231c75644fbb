//! Brute-force oracles written directly from the definitions, sharing no code
//! with the library's search routines.
#![allow(dead_code)]

use etale_core::order::FiniteLattice;
use etale_core::quantale::Rqf;
use etale_core::topcat::{FiniteCategory, TopCategory};
use etale_core::workbench::{generate_corpus, Corpus};
use etale_core::Limits;
use fixedbitset::FixedBitSet;
use std::sync::OnceLock;

pub fn corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| generate_corpus(0, &Limits::default()).expect("default corpus"))
}

fn is_cp_filter(l: &FiniteLattice, f: &FixedBitSet) -> bool {
    let n = l.len();
    if !f.contains(l.top()) || f.contains(l.bottom()) {
        return false;
    }
    (0..n).all(|x| {
        (0..n).all(|y| {
            let up = !(f.contains(x) && l.leq(x, y)) || f.contains(y);
            let meets = !(f.contains(x) && f.contains(y)) || f.contains(l.meet(x, y));
            let prime = !f.contains(l.join(x, y)) || f.contains(x) || f.contains(y);
            up && meets && prime
        })
    })
}

/// Every completely prime filter, found by a search over subsets that decides
/// elements from the top down and prunes only sets that are not up-closed or
/// not closed under meets. Member sets come back sorted.
pub fn brute_cp_filters(l: &FiniteLattice) -> Vec<Vec<usize>> {
    let n = l.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (0..n).filter(|&y| l.leq(x, y)).count());
    let mut chosen = FixedBitSet::with_capacity(n);
    let mut out = Vec::new();
    fn go(l: &FiniteLattice, order: &[usize], i: usize, chosen: &mut FixedBitSet, out: &mut Vec<Vec<usize>>) {
        let n = l.len();
        if i == order.len() {
            if is_cp_filter(l, chosen) {
                out.push(chosen.ones().collect());
            }
            return;
        }
        let z = order[i];
        let above_in = (0..n).all(|y| y == z || !l.leq(z, y) || chosen.contains(y));
        let forced = chosen.ones().any(|x| chosen.ones().any(|y| l.meet(x, y) == z));
        if above_in {
            chosen.insert(z);
            go(l, order, i + 1, chosen, out);
            chosen.set(z, false);
        }
        if !forced {
            go(l, order, i + 1, chosen, out);
        }
    }
    go(l, &order, 0, &mut chosen, &mut out);
    out.sort();
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Partial injections of an `n`-set: choose domain and image of size `k`,
/// then a bijection between them.
pub fn partial_injections(n: u64) -> u64 {
    (0..=n).map(|k| binomial(n, k).pow(2) * (1..=k).product::<u64>()).sum()
}

/// No two distinct arrows share a domain or share a codomain.
pub fn is_local_bisection(c: &FiniteCategory, u: &FixedBitSet) -> bool {
    let arrows: Vec<usize> = u.ones().collect();
    arrows
        .iter()
        .enumerate()
        .all(|(i, &a)| arrows[i + 1..].iter().all(|&b| c.d(a) != c.d(b) && c.r(a) != c.r(b)))
}

/// Calls `f` on every map `{0..n} → {0..m}`; returns false without calling
/// anything when there are more than `cap` of them.
pub fn for_each_map(n: usize, m: usize, cap: u64, mut f: impl FnMut(&[usize])) -> bool {
    let count = (m as u64).checked_pow(n as u32);
    if count.is_none_or(|c| c > cap) {
        return false;
    }
    if m == 0 {
        if n == 0 {
            f(&[]);
        }
        return true;
    }
    let mut map = vec![0; n];
    loop {
        f(&map);
        let mut i = 0;
        loop {
            if i == n {
                return true;
            }
            map[i] += 1;
            if map[i] < m {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

/// Preserves bottom, top, binary joins and meets, multiplication, unit,
/// star, plus and partial isometries.
pub fn is_rqf_morphism(map: &[usize], q: &Rqf, r: &Rqf) -> bool {
    let t = |a: usize| map[a];
    let n = q.len();
    t(q.bottom()) == r.bottom()
        && t(q.top()) == r.top()
        && t(q.unit()) == r.unit()
        && (0..n).all(|a| t(q.star(a)) == r.star(t(a)) && t(q.plus(a)) == r.plus(t(a)))
        && q.pi_list().iter().all(|&a| r.is_pi(t(a)))
        && (0..n).all(|a| {
            (0..n).all(|b| {
                t(q.join(a, b)) == r.join(t(a), t(b))
                    && t(q.meet(a, b)) == r.meet(t(a), t(b))
                    && t(q.mul(a, b)) == r.mul(t(a), t(b))
            })
        })
}

/// A functor that is bijective on every domain star and every codomain star
/// and pulls open sets back to open sets.
pub fn is_continuous_covering_functor(map: &[usize], c: &TopCategory, d: &TopCategory) -> bool {
    let (cc, dc) = (c.category(), d.category());
    let f = |a: usize| map[a];
    let functor = cc.identities().iter().all(|&e| dc.is_identity(f(e)))
        && (0..cc.len()).all(|a| f(cc.d(a)) == dc.d(f(a)) && f(cc.r(a)) == dc.r(f(a)))
        && (0..cc.len()).all(|a| {
            (0..cc.len()).all(|b| match cc.comp(a, b) {
                Some(ab) => dc.comp(f(a), f(b)) == Some(f(ab)),
                None => true,
            })
        });
    if !functor {
        return false;
    }
    let stars_bijective = |side: fn(&FiniteCategory, usize) -> usize| {
        cc.identities().iter().all(|&e| {
            let mut image: Vec<usize> = (0..cc.len()).filter(|&a| side(cc, a) == e).map(f).collect();
            image.sort_unstable();
            let before = image.len();
            image.dedup();
            let target: Vec<usize> = (0..dc.len()).filter(|&y| side(dc, y) == f(e)).collect();
            image.len() == before && image == target
        })
    };
    let continuous = (0..dc.len()).all(|y| {
        let nbhd = d.topology().neighbourhood(y);
        let mut pre = FixedBitSet::with_capacity(cc.len());
        for a in (0..cc.len()).filter(|&a| nbhd.contains(f(a))) {
            pre.insert(a);
        }
        c.topology().is_open(&pre)
    });
    stars_bijective(FiniteCategory::d) && stars_bijective(FiniteCategory::r) && continuous
}

/// Counts morphisms by trying every map, when there are at most `cap` maps.
pub fn count_rqf_morphisms(q: &Rqf, r: &Rqf, cap: u64) -> Option<usize> {
    let mut count = 0;
    for_each_map(q.len(), r.len(), cap, |m| {
        count += usize::from(is_rqf_morphism(m, q, r))
    })
    .then_some(count)
}

pub fn count_covering_functors(c: &TopCategory, d: &TopCategory, cap: u64) -> Option<usize> {
    let mut count = 0;
    for_each_map(c.category().len(), d.category().len(), cap, |m| {
        count += usize::from(is_continuous_covering_functor(m, c, d))
    })
    .then_some(count)
}
