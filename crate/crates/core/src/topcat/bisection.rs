use super::category::FiniteCategory;
use crate::error::{Error, Result};
use crate::sets;
use fixedbitset::FixedBitSet;

/// `d` and `r` are both injective on `a`.
pub fn is_local_bisection(c: &FiniteCategory, a: &FixedBitSet) -> bool {
    let mut ds = sets::empty(c.len());
    let mut rs = sets::empty(c.len());
    a.ones().all(|x| !ds.put(c.d(x)) && !rs.put(c.r(x)))
}

/// Every local bisection, in canonical order. Fails once more than `limit`
/// are found.
pub fn local_bisections(c: &FiniteCategory, limit: usize) -> Result<Vec<FixedBitSet>> {
    fn go(
        c: &FiniteCategory,
        next: usize,
        current: &mut FixedBitSet,
        used: &mut (FixedBitSet, FixedBitSet),
        out: &mut Vec<FixedBitSet>,
        limit: usize,
    ) -> Result<()> {
        if next == c.len() {
            out.push(current.clone());
            if out.len() > limit {
                return Err(Error::bound("local bisections", out.len(), limit));
            }
            return Ok(());
        }
        go(c, next + 1, current, used, out, limit)?;
        let (d, r) = (c.d(next), c.r(next));
        if !used.0.contains(d) && !used.1.contains(r) {
            current.insert(next);
            used.0.insert(d);
            used.1.insert(r);
            go(c, next + 1, current, used, out, limit)?;
            current.set(next, false);
            used.0.set(d, false);
            used.1.set(r, false);
        }
        Ok(())
    }
    let n = c.len();
    let mut out = Vec::new();
    go(
        c,
        0,
        &mut sets::empty(n),
        &mut (sets::empty(n), sets::empty(n)),
        &mut out,
        limit,
    )?;
    out.sort_by(sets::canonical_cmp);
    Ok(out)
}
