use super::{laws, EhresmannQuantale, Rqf};
use crate::report::Witness;
use crate::sets;
use fixedbitset::FixedBitSet;
use rayon::prelude::*;

/// `{a : b = b⁺ a = a b* for every b ≤ a}`
pub fn partial_isometries(q: &EhresmannQuantale) -> FixedBitSet {
    let n = q.len();
    let members: Vec<usize> = (0..n)
        .into_par_iter()
        .filter(|&a| {
            q.down(a)
                .ones()
                .all(|b| q.mul(q.plus(b), a) == b && q.mul(a, q.star(b)) == b)
        })
        .collect();
    sets::set_of(n, members)
}

/// Fails with `[b, a]` where `b ≤ a`, `a` is a partial isometry and `b` is not.
pub fn pi_is_order_ideal(q: &EhresmannQuantale) -> Result<(), Witness> {
    let pi = partial_isometries(q);
    let bad = pi
        .ones()
        .find_map(|a| q.down(a).ones().find(|&b| !pi.contains(b)).map(|b| Witness::of([b, a])));
    bad.map_or(Ok(()), Err)
}

pub fn compatible(q: &EhresmannQuantale, a: usize, b: usize) -> bool {
    laws::compatible(&q.ops(), a, b)
}

/// `a ∨ b` is a partial isometry exactly when `a ∼ b`, for partial
/// isometries `a` and `b`.
pub fn compatibility_lemma_check(q: &Rqf) -> Result<(), Witness> {
    let pi = q.pi_list();
    let bad = pi.par_iter().find_map_first(|&a| {
        pi.iter()
            .find(|&&b| q.is_pi(q.join(a, b)) != compatible(q, a, b))
            .map(|&b| Witness::of([a, b]))
    });
    bad.map_or(Ok(()), Err)
}

/// Fails with `[x]` when `x` is not the join of the partial isometries below it.
pub fn every_element_is_join_of_pi(q: &EhresmannQuantale) -> Result<(), Witness> {
    let pi = partial_isometries(q);
    let bad = (0..q.len()).find(|&x| q.join_all(q.down(x).intersection(&pi)) != x);
    bad.map_or(Ok(()), |x| Err(Witness::of([x])))
}
