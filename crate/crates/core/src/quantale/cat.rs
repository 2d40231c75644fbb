use super::EhresmannQuantale;
use crate::topcat::{CategoryData, FiniteCategory, TopCategory};

/// Elements as arrows, projections as identities, `d(a) = a*`, `r(a) = a⁺`,
/// and `a · b = ab` whenever `a* = b⁺`. Carries the discrete topology.
pub fn cat_of_ehresmann(q: &EhresmannQuantale) -> TopCategory {
    let n = q.len();
    let mut comp = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if q.star(a) == q.plus(b) {
                comp.push([a, b, q.mul(a, b)]);
            }
        }
    }
    let data = CategoryData {
        arrows: n,
        identities: q.projections().ones().collect(),
        d: q.star_map().to_vec(),
        r: q.plus_map().to_vec(),
        comp,
    };
    let cat = FiniteCategory::new(&data).unwrap_or_else(|r| panic!("Ehresmann category: {r}"));
    TopCategory::discrete(cat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::FiniteFrame;

    #[test]
    fn frame_gives_only_identities() {
        let q = EhresmannQuantale::from_frame(FiniteFrame::chain(3));
        let c = cat_of_ehresmann(&q);
        assert_eq!(c.identities().len(), 3);
    }
}
