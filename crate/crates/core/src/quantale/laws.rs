//! Ehresmann and restriction laws over bare operation tables, shared by
//! quantal frames and complete restriction monoids.

use crate::report::{Report, Witness};
use crate::table::Table;
use fixedbitset::FixedBitSet;
use rayon::prelude::*;

pub(crate) struct Ops<'a> {
    pub mul: &'a Table,
    pub star: &'a [usize],
    pub plus: &'a [usize],
    pub projections: &'a FixedBitSet,
}

impl Ops<'_> {
    fn n(&self) -> usize {
        self.mul.size()
    }

    #[inline]
    fn m(&self, a: usize, b: usize) -> usize {
        self.mul.get(a, b)
    }
}

fn first_pair(n: usize, bad: impl Fn(usize, usize) -> bool + Sync) -> Option<Witness> {
    (0..n)
        .into_par_iter()
        .find_map_first(|a| (0..n).find(|&b| bad(a, b)).map(|b| Witness::of([a, b])))
}

fn first(n: usize, bad: impl Fn(usize) -> bool) -> Option<Witness> {
    (0..n).find(|&a| bad(a)).map(|a| Witness::of([a]))
}

/// Projections are commuting idempotents fixed by both unary operations; the
/// unary operations land in the projections; `a a* = a`, `a⁺ a = a`,
/// `(ab)* = (a* b)*` and `(ab)⁺ = (a b⁺)⁺`.
pub(crate) fn ehresmann_laws(ops: &Ops<'_>, report: &mut Report) {
    let n = ops.n();
    let p = ops.projections;
    report.record(
        "ehresmann.projections_idempotent",
        p.ones().find(|&f| ops.m(f, f) != f).map(|f| Witness::of([f])),
    );
    report.record(
        "ehresmann.projections_commute",
        p.ones().find_map(|f| {
            p.ones()
                .find(|&g| ops.m(f, g) != ops.m(g, f))
                .map(|g| Witness::of([f, g]))
        }),
    );
    report.record("ehresmann.star_in_projections", first(n, |a| !p.contains(ops.star[a])));
    report.record("ehresmann.plus_in_projections", first(n, |a| !p.contains(ops.plus[a])));
    report.record(
        "ehresmann.star_fixes_projections",
        p.ones().find(|&f| ops.star[f] != f).map(|f| Witness::of([f])),
    );
    report.record(
        "ehresmann.plus_fixes_projections",
        p.ones().find(|&f| ops.plus[f] != f).map(|f| Witness::of([f])),
    );
    report.record("ehresmann.right_unit_star", first(n, |a| ops.m(a, ops.star[a]) != a));
    report.record("ehresmann.left_unit_plus", first(n, |a| ops.m(ops.plus[a], a) != a));
    report.record(
        "ehresmann.star_congruence",
        first_pair(n, |a, b| ops.star[ops.m(a, b)] != ops.star[ops.m(ops.star[a], b)]),
    );
    report.record(
        "ehresmann.plus_congruence",
        first_pair(n, |a, b| ops.plus[ops.m(a, b)] != ops.plus[ops.m(a, ops.plus[b])]),
    );
}

/// `f a = a (f a)*` and `a f = (a f)⁺ a` for projections `f` and every `a`
/// in `over`. Witnesses are `[f, a]` and `[a, f]`.
pub(crate) fn restriction_laws(
    ops: &Ops<'_>,
    over: &FixedBitSet,
    names: (&'static str, &'static str),
    report: &mut Report,
) {
    let p = ops.projections;
    let left = p.ones().find_map(|f| {
        over.ones()
            .find(|&a| {
                let fa = ops.m(f, a);
                fa != ops.m(a, ops.star[fa])
            })
            .map(|a| Witness::of([f, a]))
    });
    report.record(names.0, left);
    let right = over.ones().find_map(|a| {
        p.ones()
            .find(|&f| {
                let af = ops.m(a, f);
                af != ops.m(ops.plus[af], a)
            })
            .map(|f| Witness::of([a, f]))
    });
    report.record(names.1, right);
}

/// `a b* = b a*` and `b⁺ a = a⁺ b`.
#[inline]
pub(crate) fn compatible(ops: &Ops<'_>, a: usize, b: usize) -> bool {
    ops.m(a, ops.star[b]) == ops.m(b, ops.star[a]) && ops.m(ops.plus[b], a) == ops.m(ops.plus[a], b)
}
