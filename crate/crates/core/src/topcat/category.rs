use crate::error::{Error, Result};
use crate::report::{Report, Witness};
use crate::sets;
use crate::table::Table;
use fixedbitset::FixedBitSet;
use rayon::prelude::*;

const UNDEFINED: u32 = u32::MAX;

/// Arrow tables as read from a document; `comp` lists `[a, b, ab]`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CategoryData {
    pub arrows: usize,
    pub identities: Vec<usize>,
    pub d: Vec<usize>,
    pub r: Vec<usize>,
    pub comp: Vec<[usize; 3]>,
}

/// A finite category. `ab` is defined exactly when `d(a) = r(b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    n: usize,
    identity: FixedBitSet,
    identities: Vec<usize>,
    d: Vec<usize>,
    r: Vec<usize>,
    comp: Vec<u32>,
}

fn shape_witness(data: &CategoryData) -> Option<Witness> {
    let n = data.arrows;
    if data.d.len() != n || data.r.len() != n {
        return Some(Witness::of([data.d.len(), data.r.len()]).with_note("d or r has the wrong length"));
    }
    if let Some(a) = (0..n).find(|&a| data.d[a] >= n || data.r[a] >= n) {
        return Some(Witness::of([a]).with_note("d or r out of range"));
    }
    let mut seen = sets::empty(n);
    for &e in &data.identities {
        if e >= n || seen.put(e) {
            return Some(Witness::of([e]).with_note("identity out of range or repeated"));
        }
    }
    let mut table = vec![UNDEFINED; n * n];
    for (i, &[a, b, c]) in data.comp.iter().enumerate() {
        if a >= n || b >= n || c >= n {
            return Some(Witness::of([i]).with_note("composition entry out of range"));
        }
        let cell = &mut table[a * n + b];
        if *cell != UNDEFINED && *cell != c as u32 {
            return Some(Witness::of([a, b]).with_note("composite listed twice"));
        }
        *cell = c as u32;
    }
    None
}

/// Checks every category law exhaustively.
pub fn validate_category(data: &CategoryData) -> Report {
    let mut report = Report::new();
    report.record("category.shape", shape_witness(data));
    if !report.is_pass() {
        return report;
    }
    let c = FiniteCategory::assemble(data);
    let n = c.n;
    report.record(
        "category.identity_fixed",
        c.identities
            .iter()
            .find(|&&e| c.d[e] != e || c.r[e] != e)
            .map(|&e| Witness::of([e])),
    );
    report.record(
        "category.d_is_identity",
        (0..n).find(|&a| !c.identity.contains(c.d[a])).map(|a| Witness::of([a])),
    );
    report.record(
        "category.r_is_identity",
        (0..n).find(|&a| !c.identity.contains(c.r[a])).map(|a| Witness::of([a])),
    );
    let pair = |bad: &(dyn Fn(usize, usize) -> bool + Sync)| {
        (0..n)
            .into_par_iter()
            .find_map_first(|a| (0..n).find(|&b| bad(a, b)).map(|b| Witness::of([a, b])))
    };
    report.record(
        "category.composition_domain",
        pair(&|a, b| c.comp(a, b).is_some() != (c.d[a] == c.r[b])),
    );
    if !report.is_pass() {
        return report;
    }
    report.record(
        "category.composite_d",
        pair(&|a, b| c.comp(a, b).is_some_and(|ab| c.d[ab] != c.d[b])),
    );
    report.record(
        "category.composite_r",
        pair(&|a, b| c.comp(a, b).is_some_and(|ab| c.r[ab] != c.r[a])),
    );
    report.record(
        "category.identity_laws",
        (0..n)
            .find(|&a| c.comp(a, c.d[a]) != Some(a) || c.comp(c.r[a], a) != Some(a))
            .map(|a| Witness::of([a])),
    );
    if !report.is_pass() {
        return report;
    }
    let assoc = (0..n).into_par_iter().find_map_first(|a| {
        for b in (0..n).filter(|&b| c.d[a] == c.r[b]) {
            let ab = c.comp(a, b)?;
            for x in (0..n).filter(|&x| c.d[b] == c.r[x]) {
                let bx = c.comp(b, x)?;
                if c.comp(ab, x) != c.comp(a, bx) {
                    return Some(Witness::of([a, b, x]));
                }
            }
        }
        None
    });
    report.record("category.associative", assoc);
    report
}

impl FiniteCategory {
    fn assemble(data: &CategoryData) -> Self {
        let n = data.arrows;
        let mut comp = vec![UNDEFINED; n * n];
        for &[a, b, c] in &data.comp {
            comp[a * n + b] = c as u32;
        }
        let mut identities = data.identities.clone();
        identities.sort_unstable();
        FiniteCategory {
            n,
            identity: sets::set_of(n, identities.iter().copied()),
            identities,
            d: data.d.clone(),
            r: data.r.clone(),
            comp,
        }
    }

    pub fn new(data: &CategoryData) -> std::result::Result<Self, Report> {
        validate_category(data).into_result()?;
        Ok(FiniteCategory::assemble(data))
    }

    /// Builds from total maps; `compose(a, b)` is consulted when `d(a) = r(b)`.
    fn from_maps(
        identities: Vec<usize>,
        d: Vec<usize>,
        r: Vec<usize>,
        compose: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let n = d.len();
        let mut comp = Vec::new();
        for (a, &da) in d.iter().enumerate() {
            for (b, &rb) in r.iter().enumerate() {
                if da == rb {
                    comp.push([a, b, compose(a, b)]);
                }
            }
        }
        let data = CategoryData {
            arrows: n,
            identities,
            d,
            r,
            comp,
        };
        FiniteCategory::new(&data).unwrap_or_else(|r| panic!("built-in category invalid: {r}"))
    }

    pub fn empty() -> Self {
        FiniteCategory::from_maps(vec![], vec![], vec![], |_, _| 0)
    }

    /// Only identity arrows.
    pub fn discrete(objects: usize) -> Self {
        let ids: Vec<usize> = (0..objects).collect();
        FiniteCategory::from_maps(ids.clone(), ids.clone(), ids, |a, _| a)
    }

    /// The pair groupoid on `n` points: arrow `(x, y)` at index `x * n + y`,
    /// with `d(x, y) = (y, y)`, `r(x, y) = (x, x)` and `(x, y)(y, z) = (x, z)`.
    pub fn pair_groupoid(n: usize) -> Self {
        let ids = (0..n).map(|x| x * n + x).collect();
        let d = (0..n * n).map(|a| (a % n) * n + a % n).collect();
        let r = (0..n * n).map(|a| (a / n) * n + a / n).collect();
        FiniteCategory::from_maps(ids, d, r, |a, b| (a / n) * n + b % n)
    }

    /// A monoid as a one-object category.
    pub fn monoid(mul: &Table, unit: usize) -> Self {
        let n = mul.size();
        FiniteCategory::from_maps(vec![unit], vec![unit; n], vec![unit; n], |a, b| mul.get(a, b))
    }

    /// Free category on a finite acyclic graph with edges `(source, target)`.
    /// Identities come first, then paths by length; the label of a path lists
    /// its edges in traversal order.
    pub fn free(objects: usize, edges: &[(usize, usize)]) -> Result<(Self, Vec<String>)> {
        if let Some(i) = edges.iter().position(|&(s, t)| s >= objects || t >= objects) {
            return Err(Error::semantic(format!("edges[{i}]"), "object out of range"));
        }
        // paths as (source, target, edge list)
        let mut paths: Vec<(usize, usize, Vec<usize>)> = (0..objects).map(|x| (x, x, Vec::new())).collect();
        let mut frontier: Vec<usize> = Vec::new();
        for (i, &(s, t)) in edges.iter().enumerate() {
            frontier.push(paths.len());
            paths.push((s, t, vec![i]));
        }
        let mut length = 1;
        while !frontier.is_empty() {
            if length > edges.len() {
                return Err(Error::semantic("edges", "graph has a cycle"));
            }
            let mut next = Vec::new();
            for &p in &frontier {
                for (i, &(s, t)) in edges.iter().enumerate() {
                    if s == paths[p].1 {
                        let mut route = paths[p].2.clone();
                        route.push(i);
                        next.push(paths.len());
                        paths.push((paths[p].0, t, route));
                    }
                }
            }
            frontier = next;
            length += 1;
        }
        let index = |s: usize, route: &[usize]| {
            if route.is_empty() {
                s
            } else {
                paths
                    .iter()
                    .position(|p| p.2 == route)
                    .expect("paths are closed under concatenation")
            }
        };
        let d: Vec<usize> = paths.iter().map(|p| p.0).collect();
        let r: Vec<usize> = paths.iter().map(|p| p.1).collect();
        let cat = FiniteCategory::from_maps((0..objects).collect(), d, r, |a, b| {
            // `ab` traverses `b` first
            let mut route = paths[b].2.clone();
            route.extend(&paths[a].2);
            index(paths[b].0, &route)
        });
        let labels = paths
            .iter()
            .map(|(s, _, route)| {
                if route.is_empty() {
                    format!("id{s}")
                } else {
                    route.iter().map(|e| format!("e{e}")).collect::<Vec<_>>().join("")
                }
            })
            .collect();
        Ok((cat, labels))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn d(&self, a: usize) -> usize {
        self.d[a]
    }

    #[inline]
    pub fn r(&self, a: usize) -> usize {
        self.r[a]
    }

    pub fn d_map(&self) -> &[usize] {
        &self.d
    }

    pub fn r_map(&self) -> &[usize] {
        &self.r
    }

    #[inline]
    pub fn is_identity(&self, a: usize) -> bool {
        self.identity.contains(a)
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn identity_set(&self) -> &FixedBitSet {
        &self.identity
    }

    /// `ab`, when `d(a) = r(b)`.
    #[inline]
    pub fn comp(&self, a: usize, b: usize) -> Option<usize> {
        let c = self.comp[a * self.n + b];
        (c != UNDEFINED).then_some(c as usize)
    }

    pub fn composable_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| {
            (0..self.n)
                .filter(move |&b| self.d[a] == self.r[b])
                .map(move |b| (a, b))
        })
    }

    /// `AB = {ab : a ∈ A, b ∈ B, d(a) = r(b)}`
    pub fn set_product(&self, a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
        let mut out = sets::empty(self.n);
        for x in a.ones() {
            for y in b.ones() {
                if let Some(xy) = self.comp(x, y) {
                    out.insert(xy);
                }
            }
        }
        out
    }

    pub fn set_d(&self, a: &FixedBitSet) -> FixedBitSet {
        sets::set_of(self.n, a.ones().map(|x| self.d[x]))
    }

    pub fn set_r(&self, a: &FixedBitSet) -> FixedBitSet {
        sets::set_of(self.n, a.ones().map(|x| self.r[x]))
    }

    pub fn data(&self) -> CategoryData {
        CategoryData {
            arrows: self.n,
            identities: self.identities.clone(),
            d: self.d.clone(),
            r: self.r.clone(),
            comp: self
                .composable_pairs()
                .map(|(a, b)| [a, b, self.comp(a, b).expect("composable")])
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_groupoid_two() {
        let c = FiniteCategory::pair_groupoid(2);
        assert_eq!(c.len(), 4);
        assert_eq!(c.identities(), &[0, 3]);
        // (0,1)(1,0) = (0,0)
        assert_eq!(c.comp(1, 2), Some(0));
        assert_eq!(c.comp(1, 1), None);
    }

    #[test]
    fn monoid_with_absorbing_element() {
        let mul = Table::from_rows(&[vec![0, 1], vec![1, 1]]).unwrap();
        let c = FiniteCategory::monoid(&mul, 0);
        assert_eq!(c.identities(), &[0]);
        assert_eq!(c.comp(1, 1), Some(1));
    }

    #[test]
    fn bad_domain_is_witnessed() {
        let mut data = FiniteCategory::pair_groupoid(2).data();
        data.comp.push([1, 1, 1]);
        let r = validate_category(&data);
        assert_eq!(r.witness("category.composition_domain").unwrap().indices, vec![1, 1]);
    }

    #[test]
    fn broken_associativity_is_witnessed() {
        let mul = Table::from_rows(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        let mut data = FiniteCategory::monoid(&mul, 0).data();
        for entry in data.comp.iter_mut() {
            if entry[0] == 1 && entry[1] == 2 {
                entry[2] = 1;
            }
        }
        let r = validate_category(&data);
        assert!(r.failed("category.associative"));
    }

    #[test]
    fn free_category_on_a_triangle() {
        let (c, labels) = FiniteCategory::free(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(c.len(), 7);
        assert_eq!(labels[6], "e0e1");
        assert!(FiniteCategory::free(2, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn empty_and_discrete() {
        assert!(FiniteCategory::empty().is_empty());
        assert_eq!(FiniteCategory::discrete(3).identities().len(), 3);
    }
}
