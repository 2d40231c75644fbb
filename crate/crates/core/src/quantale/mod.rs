//! Unital quantales on finite frames, Ehresmann structure and restriction
//! quantal frames.

mod cat;
pub(crate) mod laws;
mod pi;

pub use cat::cat_of_ehresmann;
pub use pi::{
    compatibility_lemma_check, compatible, every_element_is_join_of_pi, partial_isometries, pi_is_order_ideal,
};

use crate::order::{FiniteFrame, FinitePoset};
use crate::report::{Report, Witness};
use crate::sets;
use crate::table::Table;
use fixedbitset::FixedBitSet;
use laws::Ops;
use rayon::prelude::*;
use std::ops::Deref;

/// A frame with an associative, unital multiplication distributing over
/// finite joins on both sides.
#[derive(Debug, Clone)]
pub struct FiniteQuantale {
    frame: FiniteFrame,
    mul: Table,
    unit: usize,
}

impl Deref for FiniteQuantale {
    type Target = FiniteFrame;

    fn deref(&self) -> &FiniteFrame {
        &self.frame
    }
}

fn first_triple(n: usize, bad: impl Fn(usize, usize, usize) -> bool + Sync) -> Option<Witness> {
    (0..n).into_par_iter().find_map_first(|a| {
        for b in 0..n {
            for c in 0..n {
                if bad(a, b, c) {
                    return Some(Witness::of([a, b, c]));
                }
            }
        }
        None
    })
}

impl FiniteQuantale {
    pub fn build(frame: FiniteFrame, mul: Table, unit: usize) -> (Report, Option<Self>) {
        let n = frame.len();
        let mut report = Report::new();
        let shape = if mul.size() != n {
            Some(Witness::of([mul.size()]).with_note("mul table size differs from carrier"))
        } else if unit >= n {
            Some(Witness::of([unit]).with_note("unit out of range"))
        } else {
            (0..n).find_map(|a| {
                (0..n)
                    .find(|&b| mul.get(a, b) >= n)
                    .map(|b| Witness::of([a, b]).with_note("product out of range"))
            })
        };
        report.record("quantale.table_shape", shape);
        if !report.is_pass() {
            return (report, None);
        }
        let m = |a, b| mul.get(a, b);
        let j = |a, b| frame.join(a, b);
        report.record(
            "quantale.associative",
            first_triple(n, |a, b, c| m(m(a, b), c) != m(a, m(b, c))),
        );
        report.record(
            "quantale.unit",
            (0..n)
                .find(|&a| m(unit, a) != a || m(a, unit) != a)
                .map(|a| Witness::of([a])),
        );
        let zero = frame.bottom();
        report.record(
            "quantale.zero",
            (0..n)
                .find(|&a| m(a, zero) != zero || m(zero, a) != zero)
                .map(|a| Witness::of([a])),
        );
        report.record(
            "quantale.left_distributive",
            first_triple(n, |a, b, c| m(a, j(b, c)) != j(m(a, b), m(a, c))),
        );
        report.record(
            "quantale.right_distributive",
            first_triple(n, |a, b, c| m(j(b, c), a) != j(m(b, a), m(c, a))),
        );
        let ok = report.is_pass();
        (report, ok.then_some(FiniteQuantale { frame, mul, unit }))
    }

    pub fn frame(&self) -> &FiniteFrame {
        &self.frame
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.get(a, b)
    }

    pub fn mul_table(&self) -> &Table {
        &self.mul
    }

    pub fn unit(&self) -> usize {
        self.unit
    }
}

/// A quantal frame with star and plus; the projections are `e↓`.
#[derive(Debug, Clone)]
pub struct EhresmannQuantale {
    quantale: FiniteQuantale,
    star: Vec<usize>,
    plus: Vec<usize>,
    projections: FixedBitSet,
}

impl Deref for EhresmannQuantale {
    type Target = FiniteQuantale;

    fn deref(&self) -> &FiniteQuantale {
        &self.quantale
    }
}

impl EhresmannQuantale {
    pub fn build(quantale: FiniteQuantale, star: Vec<usize>, plus: Vec<usize>) -> (Report, Option<Self>) {
        let report = validate_ehresmann(&quantale, &star, &plus);
        if !report.is_pass() {
            return (report, None);
        }
        let projections = quantale.down(quantale.unit()).clone();
        (
            report,
            Some(EhresmannQuantale {
                quantale,
                star,
                plus,
                projections,
            }),
        )
    }

    /// A frame read as a quantale: `mul = ∧`, `e = 1`, star and plus the identity.
    pub fn from_frame(frame: FiniteFrame) -> Self {
        let n = frame.len();
        let mul = frame.meet_table().clone();
        let unit = frame.top();
        let (_, q) = FiniteQuantale::build(frame, mul, unit);
        let q = q.expect("meet is a quantale multiplication on a frame");
        let (_, eq) = EhresmannQuantale::build(q, (0..n).collect(), (0..n).collect());
        eq.expect("identity star and plus on a frame")
    }

    pub fn quantale(&self) -> &FiniteQuantale {
        &self.quantale
    }

    #[inline]
    pub fn star(&self, a: usize) -> usize {
        self.star[a]
    }

    #[inline]
    pub fn plus(&self, a: usize) -> usize {
        self.plus[a]
    }

    pub fn star_map(&self) -> &[usize] {
        &self.star
    }

    pub fn plus_map(&self) -> &[usize] {
        &self.plus
    }

    pub fn projections(&self) -> &FixedBitSet {
        &self.projections
    }

    pub fn is_projection(&self, a: usize) -> bool {
        self.projections.contains(a)
    }

    pub(crate) fn ops(&self) -> Ops<'_> {
        Ops {
            mul: self.mul_table(),
            star: &self.star,
            plus: &self.plus,
            projections: &self.projections,
        }
    }
}

/// Every Ehresmann law, plus join preservation of star and plus, over all
/// elements and pairs.
pub fn validate_ehresmann(q: &FiniteQuantale, star: &[usize], plus: &[usize]) -> Report {
    let n = q.len();
    let mut report = Report::new();
    let shape = [star, plus].iter().find_map(|map| {
        if map.len() != n {
            Some(Witness::of([map.len()]).with_note("map length differs from carrier"))
        } else {
            (0..n)
                .find(|&a| map[a] >= n)
                .map(|a| Witness::of([a]).with_note("image out of range"))
        }
    });
    report.record("ehresmann.table_shape", shape);
    if !report.is_pass() {
        return report;
    }
    let projections = q.down(q.unit()).clone();
    let ops = Ops {
        mul: q.mul_table(),
        star,
        plus,
        projections: &projections,
    };
    laws::ehresmann_laws(&ops, &mut report);
    for (law, map) in [("ehresmann.star_join", star), ("ehresmann.plus_join", plus)] {
        let witness = if map[q.bottom()] != q.bottom() {
            Some(Witness::of([q.bottom()]).with_note("empty join"))
        } else {
            (0..n).into_par_iter().find_map_first(|a| {
                (0..n)
                    .find(|&b| map[q.join(a, b)] != q.join(map[a], map[b]))
                    .map(|b| Witness::of([a, b]))
            })
        };
        report.record(law, witness);
    }
    report
}

/// An étale Ehresmann quantal frame satisfying the restriction identities,
/// with partial isometries closed under multiplication.
#[derive(Debug, Clone)]
pub struct Rqf {
    eq: EhresmannQuantale,
    pi: FixedBitSet,
    pi_list: Vec<usize>,
}

impl Deref for Rqf {
    type Target = EhresmannQuantale;

    fn deref(&self) -> &EhresmannQuantale {
        &self.eq
    }
}

impl Rqf {
    /// The restriction identities are checked with `a` ranging over the
    /// partial isometries.
    pub fn build(eq: EhresmannQuantale) -> (Report, Option<Self>) {
        let mut report = Report::new();
        let pi = partial_isometries(&eq);
        laws::restriction_laws(
            &eq.ops(),
            &pi,
            ("rqf.restriction_left", "rqf.restriction_right"),
            &mut report,
        );
        let top = eq.top();
        report.check("rqf.etale", eq.join_all(pi.ones()) == top, || {
            Witness::of([top]).with_note("top is not a join of partial isometries")
        });
        let unclosed = pi.ones().find_map(|a| {
            pi.ones()
                .find(|&b| !pi.contains(eq.mul(a, b)))
                .map(|b| Witness::of([a, b]))
        });
        report.record("rqf.pi_closed", unclosed);
        if !report.is_pass() {
            return (report, None);
        }
        let pi_list = sets::members(&pi);
        (report, Some(Rqf { eq, pi, pi_list }))
    }

    pub fn ehresmann(&self) -> &EhresmannQuantale {
        &self.eq
    }

    pub fn pi(&self) -> &FixedBitSet {
        &self.pi
    }

    pub fn pi_list(&self) -> &[usize] {
        &self.pi_list
    }

    pub fn is_pi(&self, a: usize) -> bool {
        self.pi.contains(a)
    }

    pub fn from_frame(frame: FiniteFrame) -> Self {
        let (_, r) = Rqf::build(EhresmannQuantale::from_frame(frame));
        r.expect("frames are restriction quantal frames")
    }
}

/// The operation tables of a candidate quantal frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantaleTables {
    pub mul: Table,
    pub unit: usize,
    pub star: Vec<usize>,
    pub plus: Vec<usize>,
}

/// Runs the frame, quantale, Ehresmann and restriction layers in order,
/// stopping after the first layer that fails.
pub fn validate_rqf(
    poset: FinitePoset,
    lattice_tables: Option<(Table, Table)>,
    tables: QuantaleTables,
) -> (Report, Option<Rqf>) {
    let (mut report, frame) = FiniteFrame::build(poset, lattice_tables);
    let Some(frame) = frame else {
        return (report, None);
    };
    let (r, q) = FiniteQuantale::build(frame, tables.mul, tables.unit);
    report.extend(r);
    let Some(q) = q else {
        return (report, None);
    };
    let (r, eq) = EhresmannQuantale::build(q, tables.star, tables.plus);
    report.extend(r);
    let Some(eq) = eq else {
        return (report, None);
    };
    let (r, rqf) = Rqf::build(eq);
    report.extend(r);
    (report, rqf)
}

impl Rqf {
    pub fn tables(&self) -> QuantaleTables {
        QuantaleTables {
            mul: self.mul_table().clone(),
            unit: self.unit(),
            star: self.star_map().to_vec(),
            plus: self.plus_map().to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 0 < e < 1 with 1·1 = 1 and 1* = 1⁺ = e: Ehresmann but not étale.
    fn three_chain_quantale() -> (FinitePoset, QuantaleTables) {
        let mul = Table::from_fn(3, |a, b| if a == 0 || b == 0 { 0 } else { a.max(b) });
        let tables = QuantaleTables {
            mul,
            unit: 1,
            star: vec![0, 1, 1],
            plus: vec![0, 1, 1],
        };
        (FinitePoset::chain(3), tables)
    }

    #[test]
    fn non_etale_chain_is_rejected() {
        let (p, t) = three_chain_quantale();
        let (report, rqf) = validate_rqf(p, None, t);
        assert!(rqf.is_none());
        assert!(report.failed("rqf.etale"));
        assert!(!report.failed("ehresmann.star_congruence"));
    }

    #[test]
    fn frame_as_quantale_passes() {
        let r = Rqf::from_frame(FiniteFrame::boolean(2));
        assert_eq!(r.pi_list().len(), 4);
        let one = Rqf::from_frame(FiniteFrame::chain(1));
        assert_eq!(one.len(), 1);
    }

    #[test]
    fn broken_associativity_is_witnessed() {
        let (p, mut t) = three_chain_quantale();
        t.mul.set(2, 2, 1);
        let (report, _) = validate_rqf(p, None, t);
        assert!(report.failed("quantale.associative") || report.failed("quantale.left_distributive"));
    }

    #[test]
    fn layers_short_circuit() {
        let (_, t) = three_chain_quantale();
        let p = FinitePoset::from_covers(3, &[(0, 2), (1, 2)]);
        let (report, _) = validate_rqf(p, None, t);
        assert!(report.get("quantale.associative").is_none());
        assert!(report.failed("lattice.bounded"));
    }
}
