use crate::order::{validate_poset, FinitePoset};
use crate::quantale::laws::{self, Ops};
use crate::quantale::Rqf;
use crate::report::{Report, Witness};
use crate::sets;
use crate::table::Table;
use fixedbitset::FixedBitSet;
use rayon::prelude::*;

const NONE: u32 = u32::MAX;

/// Tables of a candidate complete restriction monoid. Without a meet table
/// the meets are derived from the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrmData {
    pub order: FinitePoset,
    pub mul: Table,
    pub unit: usize,
    pub star: Vec<usize>,
    pub plus: Vec<usize>,
    pub meet: Option<Table>,
}

/// A complete restriction monoid with binary meets. Projections are `e↓`.
#[derive(Debug, Clone)]
pub struct Crm {
    order: FinitePoset,
    down: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
    meet: Table,
    lub: Vec<u32>,
    mul: Table,
    unit: usize,
    zero: usize,
    star: Vec<usize>,
    plus: Vec<usize>,
    projections: FixedBitSet,
}

/// The least element `g` of `bounds` (an up-set), if `bounds = g↑`.
fn least(bounds: &FixedBitSet, up: &[FixedBitSet]) -> Option<usize> {
    bounds.ones().find(|&g| up[g] == *bounds)
}

fn shape(data: &CrmData) -> Option<Witness> {
    let n = data.order.len();
    if data.mul.size() != n {
        return Some(Witness::of([data.mul.size()]).with_note("mul table size differs from carrier"));
    }
    if data.unit >= n {
        return Some(Witness::of([data.unit]).with_note("unit out of range"));
    }
    for map in [&data.star, &data.plus] {
        if map.len() != n {
            return Some(Witness::of([map.len()]).with_note("map length differs from carrier"));
        }
        if let Some(a) = (0..n).find(|&a| map[a] >= n) {
            return Some(Witness::of([a]).with_note("image out of range"));
        }
    }
    let tables = std::iter::once(&data.mul).chain(data.meet.as_ref());
    for t in tables {
        if t.size() != n {
            return Some(Witness::of([t.size()]).with_note("table size differs from carrier"));
        }
        if let Some(w) = (0..n).find_map(|a| (0..n).find(|&b| t.get(a, b) >= n).map(|b| Witness::of([a, b]))) {
            return Some(w.with_note("entry out of range"));
        }
    }
    None
}

/// Poset laws, then table shape, zero and meets, then the algebra: monoid,
/// Ehresmann and restriction laws, the natural order, and completeness.
///
/// Completeness is checked exactly through three finite conditions: every
/// compatible pair has a join; if `a, b, c` are pairwise compatible then
/// `a ∨ b ∼ c`; and multiplication distributes over joins of compatible
/// pairs. By induction on size these give a join for every compatible subset
/// and distributivity over it.
pub fn validate_crm(data: &CrmData) -> (Report, Option<Crm>) {
    let mut report = validate_poset(&data.order);
    if !report.is_pass() {
        return (report, None);
    }
    report.record("crm.table_shape", shape(data));
    if !report.is_pass() {
        return (report, None);
    }
    let n = data.order.len();
    let down: Vec<FixedBitSet> = (0..n).map(|i| data.order.down_set(i)).collect();
    let up: Vec<FixedBitSet> = (0..n).map(|i| data.order.up_set(i)).collect();
    let zero = (0..n).find(|&z| up[z].count_ones(..) == n);
    report.check("crm.zero", zero.is_some(), || {
        Witness::of([]).with_note("no least element")
    });
    let glb = |a: usize, b: usize| least(&sets::intersection(&down[a], &down[b]), &down);
    let meet_gap = match &data.meet {
        Some(t) => (0..n).find_map(|a| {
            (0..n)
                .find(|&b| glb(a, b) != Some(t.get(a, b)))
                .map(|b| Witness::of([a, b]))
        }),
        None => (0..n).find_map(|a| (0..n).find(|&b| glb(a, b).is_none()).map(|b| Witness::of([a, b]))),
    };
    report.record("crm.meets", meet_gap);
    if !report.is_pass() {
        return (report, None);
    }
    let meet = match &data.meet {
        Some(t) => t.clone(),
        None => Table::from_fn(n, |a, b| glb(a, b).expect("checked")),
    };
    let lub: Vec<u32> = (0..n * n)
        .into_par_iter()
        .map(|k| least(&sets::intersection(&up[k / n], &up[k % n]), &up).map_or(NONE, |g| g as u32))
        .collect();
    let crm = Crm {
        projections: down[data.unit].clone(),
        order: data.order.clone(),
        down,
        up,
        meet,
        lub,
        mul: data.mul.clone(),
        unit: data.unit,
        zero: zero.expect("checked"),
        star: data.star.clone(),
        plus: data.plus.clone(),
    };
    algebra_laws(&crm, &mut report);
    let ok = report.is_pass();
    (report, ok.then_some(crm))
}

fn algebra_laws(s: &Crm, report: &mut Report) {
    let n = s.len();
    let m = |a, b| s.mul(a, b);
    let assoc = (0..n).into_par_iter().find_map_first(|a| {
        for b in 0..n {
            for c in 0..n {
                if m(m(a, b), c) != m(a, m(b, c)) {
                    return Some(Witness::of([a, b, c]));
                }
            }
        }
        None
    });
    report.record("crm.associative", assoc);
    report.record(
        "crm.unit",
        (0..n)
            .find(|&a| m(s.unit, a) != a || m(a, s.unit) != a)
            .map(|a| Witness::of([a])),
    );
    report.record(
        "crm.zero_absorbing",
        (0..n)
            .find(|&a| m(s.zero, a) != s.zero || m(a, s.zero) != s.zero)
            .map(|a| Witness::of([a])),
    );
    let ops = s.ops();
    laws::ehresmann_laws(&ops, report);
    laws::restriction_laws(
        &ops,
        &sets::full(n),
        ("crm.restriction_left", "crm.restriction_right"),
        report,
    );
    let natural = (0..n).find_map(|a| {
        (0..n)
            .find(|&b| s.leq(a, b) != (a == m(b, s.star(a))))
            .map(|b| Witness::of([a, b]))
    });
    report.record("crm.natural_order", natural);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| s.compatible(a, b))
        .collect();
    let joinless = pairs.iter().find(|&&(a, b)| s.lub(a, b).is_none());
    report.record("crm.compatible_joins", joinless.map(|&(a, b)| Witness::of([a, b])));
    if joinless.is_some() {
        return;
    }
    let closure = pairs.par_iter().find_map_first(|&(a, b)| {
        let j = s.lub(a, b).expect("checked");
        (0..n)
            .find(|&c| s.compatible(a, c) && s.compatible(b, c) && !s.compatible(j, c))
            .map(|c| Witness::of([a, b, c]))
    });
    report.record("crm.compatible_join_closure", closure);
    let distributive = pairs.par_iter().find_map_first(|&(b, c)| {
        let j = s.lub(b, c).expect("checked");
        (0..n)
            .find(|&a| s.lub(m(a, b), m(a, c)) != Some(m(a, j)) || s.lub(m(b, a), m(c, a)) != Some(m(j, a)))
            .map(|a| Witness::of([a, b, c]))
    });
    report.record("crm.join_distributive", distributive);
}

impl Crm {
    pub fn new(data: &CrmData) -> Result<Self, Report> {
        let (report, crm) = validate_crm(data);
        crm.ok_or(report)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &FinitePoset {
        &self.order
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.leq(a, b)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.get(a, b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet.get(a, b)
    }

    #[inline]
    pub fn star(&self, a: usize) -> usize {
        self.star[a]
    }

    #[inline]
    pub fn plus(&self, a: usize) -> usize {
        self.plus[a]
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn projections(&self) -> &FixedBitSet {
        &self.projections
    }

    pub fn is_projection(&self, a: usize) -> bool {
        self.projections.contains(a)
    }

    pub fn down(&self, a: usize) -> &FixedBitSet {
        &self.down[a]
    }

    pub fn up(&self, a: usize) -> &FixedBitSet {
        &self.up[a]
    }

    /// Join of two elements, when it exists.
    #[inline]
    pub fn lub(&self, a: usize, b: usize) -> Option<usize> {
        let g = self.lub[a * self.len() + b];
        (g != NONE).then_some(g as usize)
    }

    /// Join of a set, when it exists; the empty join is the zero.
    pub fn lub_of(&self, items: impl IntoIterator<Item = usize>) -> Option<usize> {
        let mut bounds = sets::full(self.len());
        for x in items {
            bounds.intersect_with(&self.up[x]);
        }
        least(&bounds, &self.up)
    }

    pub fn compatible(&self, a: usize, b: usize) -> bool {
        laws::compatible(&self.ops(), a, b)
    }

    /// Smallest subset containing `set`, the zero, and closed downward and
    /// under existing joins.
    pub fn join_closure(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut s = sets::set_of(self.len(), [self.zero]);
        for x in set.ones() {
            s.union_with(&self.down[x]);
        }
        loop {
            let members: Vec<usize> = s.ones().collect();
            let mut grown = false;
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    if let Some(j) = self.lub(a, b) {
                        if !s.contains(j) {
                            s.union_with(&self.down[j]);
                            grown = true;
                        }
                    }
                }
            }
            if !grown {
                return s;
            }
        }
    }

    /// Elements that are not the join of the elements strictly below them.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| {
                let mut below = self.down[a].clone();
                below.set(a, false);
                self.lub_of(below.ones()) != Some(a)
            })
            .collect()
    }

    pub fn data(&self) -> CrmData {
        CrmData {
            order: self.order.clone(),
            mul: self.mul.clone(),
            unit: self.unit,
            star: self.star.clone(),
            plus: self.plus.clone(),
            meet: Some(self.meet.clone()),
        }
    }

    pub(crate) fn ops(&self) -> Ops<'_> {
        Ops {
            mul: &self.mul,
            star: &self.star,
            plus: &self.plus,
            projections: &self.projections,
        }
    }
}

/// The partial isometries of `q` with the restricted operations, and the
/// element of `q` behind each carrier index.
pub fn pi_restriction_monoid(q: &Rqf) -> (Report, Option<Crm>, Vec<usize>) {
    let carrier = q.pi_list().to_vec();
    let mut position = vec![usize::MAX; q.len()];
    for (i, &a) in carrier.iter().enumerate() {
        position[a] = i;
    }
    let k = carrier.len();
    let data = CrmData {
        order: q.poset().induced(&carrier),
        mul: Table::from_fn(k, |i, j| position[q.mul(carrier[i], carrier[j])]),
        unit: position[q.unit()],
        star: carrier.iter().map(|&a| position[q.star(a)]).collect(),
        plus: carrier.iter().map(|&a| position[q.plus(a)]).collect(),
        meet: Some(Table::from_fn(k, |i, j| position[q.meet(carrier[i], carrier[j])])),
    };
    let (report, crm) = validate_crm(&data);
    (report, crm, carrier)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::functors::omega_object;
    use crate::limits::Limits;
    use crate::topcat::{FiniteCategory, TopCategory};

    pub(crate) fn partial_bijections() -> Crm {
        let tc = TopCategory::discrete(FiniteCategory::pair_groupoid(2));
        let om = omega_object(&tc, &Limits::default()).unwrap();
        let (report, crm, _) = pi_restriction_monoid(&om.rqf);
        assert!(report.is_pass(), "{report}");
        crm.unwrap()
    }

    #[test]
    fn partial_bijections_on_two_points() {
        let s = partial_bijections();
        assert_eq!(s.len(), 7);
        assert_eq!(s.projections().count_ones(..), 4);
    }

    #[test]
    fn trivial_monoid() {
        let data = CrmData {
            order: FinitePoset::chain(1),
            mul: Table::from_fn(1, |_, _| 0),
            unit: 0,
            star: vec![0],
            plus: vec![0],
            meet: None,
        };
        let (report, s) = validate_crm(&data);
        assert!(report.is_pass());
        assert_eq!(s.unwrap().join_irreducibles(), Vec::<usize>::new());
    }
}
