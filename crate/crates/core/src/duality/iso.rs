use crate::topcat::{covering_functors, TopCategory};
use crate::topology::is_homeomorphism;

/// An isomorphism of topological categories `c → d`, if one exists. Every
/// isomorphism is a continuous covering functor, so the search runs over
/// those and keeps the first bijective homeomorphism.
pub fn category_isomorphism(c: &TopCategory, d: &TopCategory) -> Option<Vec<usize>> {
    if c.len() != d.len() || c.identities().len() != d.identities().len() {
        return None;
    }
    let candidates = covering_functors(c, d, usize::MAX).ok()?;
    candidates
        .into_iter()
        .find(|f| is_homeomorphism(f, c.topology(), d.topology()))
}
