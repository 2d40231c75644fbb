use super::morphism::is_rqf_morphism;
use crate::error::{Error, Result};
use crate::functors::{c_morphism, c_object, omega_morphism, omega_object, FilterCategoryResult, OmegaResult};
use crate::limits::Limits;
use crate::quantale::Rqf;
use crate::report::{Report, Witness};
use crate::sets;
use crate::topcat::{compose_maps, covering_functors, TopCategory};
use fixedbitset::FixedBitSet;
use std::collections::HashMap;

/// Every morphism `q → r` of restriction quantal frames, in lexicographic
/// order. A join-preserving map is fixed by its values on join-irreducibles;
/// these are assigned in order of height, kept monotone and compatible with
/// meets, then extended and checked in full.
pub fn rqf_morphisms(q: &Rqf, r: &Rqf, limit: usize) -> Result<Vec<Vec<usize>>> {
    let mut irreducibles = q.join_irreducibles();
    irreducibles.sort_by_key(|&j| (q.down(j).count_ones(..), j));
    let extend =
        |values: &HashMap<usize, usize>, a: usize| r.join_all(q.down(a).ones().filter_map(|j| values.get(&j).copied()));
    let mut out = Vec::new();
    let mut values: HashMap<usize, usize> = HashMap::new();
    let mut visited = 0usize;
    let budget = limit.saturating_mul(1000);

    #[allow(clippy::too_many_arguments)]
    fn go(
        depth: usize,
        q: &Rqf,
        r: &Rqf,
        irreducibles: &[usize],
        values: &mut HashMap<usize, usize>,
        extend: &dyn Fn(&HashMap<usize, usize>, usize) -> usize,
        out: &mut Vec<Vec<usize>>,
        visited: &mut usize,
        limits: (usize, usize),
    ) -> Result<()> {
        *visited += 1;
        if *visited > limits.1 {
            return Err(Error::bound("morphism search nodes", *visited, limits.1));
        }
        if depth == irreducibles.len() {
            let map: Vec<usize> = (0..q.len()).map(|a| extend(values, a)).collect();
            if is_rqf_morphism(&map, q, r) {
                out.push(map);
                if out.len() > limits.0 {
                    return Err(Error::bound("morphism hom-set", out.len(), limits.0));
                }
            }
            return Ok(());
        }
        let j = irreducibles[depth];
        let candidates: Vec<usize> = if q.is_pi(j) {
            r.pi_list().to_vec()
        } else {
            (0..r.len()).collect()
        };
        for t in candidates {
            if q.leq(j, q.unit()) && !r.leq(t, r.unit()) {
                continue;
            }
            let consistent = irreducibles[..depth].iter().all(|&i| {
                let ti = values[&i];
                (!q.leq(i, j) || r.leq(ti, t)) && extend(values, q.meet(i, j)) == r.meet(ti, t)
            });
            if !consistent {
                continue;
            }
            values.insert(j, t);
            go(depth + 1, q, r, irreducibles, values, extend, out, visited, limits)?;
            values.remove(&j);
        }
        Ok(())
    }

    go(
        0,
        q,
        r,
        &irreducibles,
        &mut values,
        &extend,
        &mut out,
        &mut visited,
        (limit, budget),
    )?;
    out.sort();
    Ok(out)
}

/// `α ↦ α⁻¹χ`: `a ↦ {x : a ∈ α(x)}`, an element of `Ω(C)` when it is open.
pub fn transpose_forward(
    alpha: &[usize],
    q: &Rqf,
    c_q: &FilterCategoryResult,
    omega_c: &OmegaResult,
) -> Option<Vec<usize>> {
    let n = alpha.len();
    (0..q.len())
        .map(|a| omega_c.index_of(&sets::set_of(n, (0..n).filter(|&x| c_q.members[alpha[x]].contains(a)))))
        .collect()
}

/// `β ↦ β⁻¹ω`: `x ↦ {a : x ∈ β(a)}`, an arrow of `C(Q)` when it is a
/// completely prime filter.
pub fn transpose_backward(
    beta: &[usize],
    q: &Rqf,
    c_q: &FilterCategoryResult,
    omega_c: &OmegaResult,
) -> Option<Vec<usize>> {
    let arrows = omega_c.opens.first().map_or(0, FixedBitSet::len);
    (0..arrows)
        .map(|x| {
            let members = sets::set_of(q.len(), (0..q.len()).filter(|&a| omega_c.open(beta[a]).contains(x)));
            c_q.arrow_with_members(q, &members)
        })
        .collect()
}

/// Both hom-sets of the first adjunction and the checks made on them.
#[derive(Debug, Clone)]
pub struct AdjunctionReport {
    pub functors: Vec<Vec<usize>>,
    pub morphisms: Vec<Vec<usize>>,
    pub report: Report,
}

/// Enumerates every continuous covering functor `C → C(Q)` and every
/// morphism `Q → Ω(C)`, checks that the transposes are mutually inverse
/// bijections, and checks naturality against the endomorphisms of `C` and `Q`.
pub fn verify_adjunction_i(c: &TopCategory, q: &Rqf, limits: &Limits) -> Result<AdjunctionReport> {
    if c.len() > limits.hom_arrows {
        return Err(Error::bound(
            "category in hom-set enumeration",
            c.len(),
            limits.hom_arrows,
        ));
    }
    if q.len() > limits.hom_elements {
        return Err(Error::bound(
            "quantale in hom-set enumeration",
            q.len(),
            limits.hom_elements,
        ));
    }
    let omega_c = omega_object(c, limits)?;
    let c_q = c_object(q, limits)?;
    let functors = covering_functors(c, &c_q, limits.hom_size)?;
    let morphisms = rqf_morphisms(q, &omega_c, limits.hom_size)?;
    let mut report = Report::new();
    report.check("adjunction.cardinality", functors.len() == morphisms.len(), || {
        Witness::of([functors.len(), morphisms.len()])
    });
    let forward: Vec<Option<Vec<usize>>> = functors
        .iter()
        .map(|a| transpose_forward(a, q, &c_q, &omega_c))
        .collect();
    let backward: Vec<Option<Vec<usize>>> = morphisms
        .iter()
        .map(|b| transpose_backward(b, q, &c_q, &omega_c))
        .collect();
    report.record(
        "adjunction.forward_lands",
        forward
            .iter()
            .position(|f| !f.as_ref().is_some_and(|b| morphisms.binary_search(b).is_ok()))
            .map(|i| Witness::of([i])),
    );
    report.record(
        "adjunction.backward_lands",
        backward
            .iter()
            .position(|g| !g.as_ref().is_some_and(|a| functors.binary_search(a).is_ok()))
            .map(|j| Witness::of([j])),
    );
    report.record(
        "adjunction.backward_forward",
        forward
            .iter()
            .enumerate()
            .position(|(i, f)| {
                f.as_ref()
                    .and_then(|b| transpose_backward(b, q, &c_q, &omega_c))
                    .as_ref()
                    != Some(&functors[i])
            })
            .map(|i| Witness::of([i])),
    );
    report.record(
        "adjunction.forward_backward",
        backward
            .iter()
            .enumerate()
            .position(|(j, g)| {
                g.as_ref()
                    .and_then(|a| transpose_forward(a, q, &c_q, &omega_c))
                    .as_ref()
                    != Some(&morphisms[j])
            })
            .map(|j| Witness::of([j])),
    );
    naturality(c, q, &c_q, &omega_c, &functors, &forward, limits, &mut report)?;
    Ok(AdjunctionReport {
        functors,
        morphisms,
        report,
    })
}

/// `(α ∘ F)ᵗ = Ω(F) ∘ αᵗ` for covering endofunctors `F` of `C`, and
/// `(C(φ) ∘ α)ᵗ = αᵗ ∘ φ` for endomorphisms `φ` of `Q`.
#[allow(clippy::too_many_arguments)]
fn naturality(
    c: &TopCategory,
    q: &Rqf,
    c_q: &FilterCategoryResult,
    omega_c: &OmegaResult,
    functors: &[Vec<usize>],
    forward: &[Option<Vec<usize>>],
    limits: &Limits,
    report: &mut Report,
) -> Result<()> {
    let endo_c = covering_functors(c, c, limits.hom_size)?;
    let mut in_category = None;
    'c: for (k, f) in endo_c.iter().enumerate() {
        let omega_f = omega_morphism(f, omega_c, omega_c)?;
        for (i, alpha) in functors.iter().enumerate() {
            let (Some(t), Some(lhs)) = (&forward[i], transpose_forward(&compose_maps(alpha, f), q, c_q, omega_c))
            else {
                in_category = Some(Witness::of([i, k]));
                break 'c;
            };
            if lhs != compose_maps(&omega_f, t) {
                in_category = Some(Witness::of([i, k]));
                break 'c;
            }
        }
    }
    report.record("adjunction.natural_in_category", in_category);
    let endo_q = rqf_morphisms(q, q, limits.hom_size)?;
    let mut in_quantale = None;
    'q: for (k, phi) in endo_q.iter().enumerate() {
        let c_phi = c_morphism(phi, q, c_q, c_q)?;
        for (i, alpha) in functors.iter().enumerate() {
            let (Some(t), Some(lhs)) = (
                &forward[i],
                transpose_forward(&compose_maps(&c_phi, alpha), q, c_q, omega_c),
            ) else {
                in_quantale = Some(Witness::of([i, k]));
                break 'q;
            };
            if lhs != compose_maps(t, phi) {
                in_quantale = Some(Witness::of([i, k]));
                break 'q;
            }
        }
    }
    report.record("adjunction.natural_in_quantale", in_quantale);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topcat::FiniteCategory;

    fn pair2() -> TopCategory {
        TopCategory::discrete(FiniteCategory::pair_groupoid(2))
    }

    #[test]
    fn pair_groupoid_against_its_opens() {
        let limits = Limits::default();
        let om = omega_object(&pair2(), &limits).unwrap();
        let adj = verify_adjunction_i(&pair2(), &om.rqf, &limits).unwrap();
        assert_eq!((adj.functors.len(), adj.morphisms.len()), (2, 2));
        assert!(adj.report.is_pass(), "{}", adj.report);
    }

    #[test]
    fn empty_category_has_singleton_hom_sets() {
        let limits = Limits::default();
        let om = omega_object(&pair2(), &limits).unwrap();
        let empty = TopCategory::discrete(FiniteCategory::empty());
        let adj = verify_adjunction_i(&empty, &om.rqf, &limits).unwrap();
        assert_eq!((adj.functors.len(), adj.morphisms.len()), (1, 1));
        assert!(adj.report.is_pass());
    }
}
