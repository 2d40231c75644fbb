use super::lvee::l_vee;
use super::monoid::{pi_restriction_monoid, Crm};
use super::morphism::callitic_morphisms;
use super::sfilter::{lift_map, s_filters, SFilterCategory};
use crate::duality::{transpose_backward, verify_adjunction_i};
use crate::error::{Error, Result};
use crate::functors::{c_object, omega_object, OmegaResult};
use crate::limits::Limits;
use crate::report::{Report, Witness};
use crate::sets;
use crate::topcat::{compose_maps, covering_functors, TopCategory};

/// Both hom-sets of the second adjunction, the checks made on them, and the
/// hom-set sizes found by the first adjunction on `(C, L^∨(S))`.
#[derive(Debug, Clone)]
pub struct AdjunctionIIReport {
    pub functors: Vec<Vec<usize>>,
    pub morphisms: Vec<Vec<usize>>,
    pub first: (usize, usize),
    pub report: Report,
}

struct Sides<'a> {
    s: &'a Crm,
    sf: &'a SFilterCategory,
    omega: &'a OmegaResult,
    carrier: &'a [usize],
    position: Vec<usize>,
}

impl Sides<'_> {
    /// `α ↦ (s ↦ {x : s ∈ α(x)})`, landing in the partial isometries of `Ω(C)`.
    fn forward(&self, alpha: &[usize]) -> Option<Vec<usize>> {
        let n = alpha.len();
        (0..self.s.len())
            .map(|a| {
                let open = sets::set_of(n, (0..n).filter(|&x| self.sf.members[alpha[x]].contains(a)));
                self.omega
                    .index_of(&open)
                    .map(|i| self.position[i])
                    .filter(|&p| p != usize::MAX)
            })
            .collect()
    }

    /// `θ ↦ (x ↦ {s : x ∈ θ(s)})`, landing in the S-filters.
    fn backward(&self, theta: &[usize], arrows: usize) -> Option<Vec<usize>> {
        (0..arrows)
            .map(|x| {
                let members = sets::set_of(
                    self.s.len(),
                    (0..self.s.len()).filter(|&a| self.omega.open(self.carrier[theta[a]]).contains(x)),
                );
                self.sf.arrow_with_members(self.s, &members)
            })
            .collect()
    }
}

/// Enumerates continuous covering functors `C → C'(S)` and callitic
/// morphisms `S → PI(Ω(C))`, checks the transposes are inverse bijections,
/// and compares with the first adjunction on `(C, L^∨(S))`, including that
/// each transpose factors through it.
pub fn verify_adjunction_ii(c: &TopCategory, s: &Crm, limits: &Limits) -> Result<AdjunctionIIReport> {
    if c.len() > limits.hom_arrows {
        return Err(Error::bound(
            "category in hom-set enumeration",
            c.len(),
            limits.hom_arrows,
        ));
    }
    if s.len() > limits.hom_elements {
        return Err(Error::bound(
            "monoid in hom-set enumeration",
            s.len(),
            limits.hom_elements,
        ));
    }
    let omega = omega_object(c, limits)?;
    let (pi_report, t, carrier) = pi_restriction_monoid(&omega.rqf);
    let t = t.ok_or_else(|| Error::rejected("partial isometries of the opens", pi_report))?;
    let sf = s_filters(s)?;
    let mut position = vec![usize::MAX; omega.len()];
    for (i, &a) in carrier.iter().enumerate() {
        position[a] = i;
    }
    let sides = Sides {
        s,
        sf: &sf,
        omega: &omega,
        carrier: &carrier,
        position,
    };
    let functors = covering_functors(c, &sf, limits.hom_size)?;
    let morphisms = callitic_morphisms(s, &t, limits.hom_size)?;
    let mut report = Report::new();
    report.check("adjunction2.cardinality", functors.len() == morphisms.len(), || {
        Witness::of([functors.len(), morphisms.len()])
    });
    let forward: Vec<Option<Vec<usize>>> = functors.iter().map(|a| sides.forward(a)).collect();
    let backward: Vec<Option<Vec<usize>>> = morphisms.iter().map(|t| sides.backward(t, c.len())).collect();
    report.record(
        "adjunction2.forward_lands",
        forward
            .iter()
            .position(|f| !f.as_ref().is_some_and(|t| morphisms.binary_search(t).is_ok()))
            .map(|i| Witness::of([i])),
    );
    report.record(
        "adjunction2.backward_lands",
        backward
            .iter()
            .position(|g| !g.as_ref().is_some_and(|a| functors.binary_search(a).is_ok()))
            .map(|j| Witness::of([j])),
    );
    report.record(
        "adjunction2.backward_forward",
        (0..functors.len())
            .find(|&i| forward[i].as_ref().and_then(|t| sides.backward(t, c.len())).as_ref() != Some(&functors[i]))
            .map(|i| Witness::of([i])),
    );
    report.record(
        "adjunction2.forward_backward",
        (0..morphisms.len())
            .find(|&j| backward[j].as_ref().and_then(|a| sides.forward(a)).as_ref() != Some(&morphisms[j]))
            .map(|j| Witness::of([j])),
    );

    let lv = l_vee(s, limits)?;
    let first = verify_adjunction_i(c, &lv.rqf, limits)?;
    let sizes = (first.functors.len(), first.morphisms.len());
    report.check("adjunction2.first_passes", first.report.is_pass(), || {
        Witness::of([]).with_note(first.report.summary())
    });
    report.check(
        "adjunction2.matches_first",
        sizes == (functors.len(), morphisms.len()),
        || Witness::of([sizes.0, sizes.1, functors.len(), morphisms.len()]),
    );
    let c_lv = c_object(&lv.rqf, limits)?;
    let lift = lift_map(&sf, &lv, &c_lv);
    let factors = |j: usize| -> bool {
        let theta = &morphisms[j];
        let beta: Option<Vec<usize>> = lv
            .ideals
            .iter()
            .map(|ideal| {
                let mut open = sets::empty(c.len());
                for a in ideal.ones() {
                    open.union_with(omega.open(carrier[theta[a]]));
                }
                omega.index_of(&open)
            })
            .collect();
        let (Some(beta), Some(lift), Some(alpha)) = (beta, &lift, &backward[j]) else {
            return false;
        };
        first.morphisms.binary_search(&beta).is_ok()
            && transpose_backward(&beta, &lv.rqf, &c_lv, &omega).as_ref() == Some(&compose_maps(lift, alpha))
    };
    report.record(
        "adjunction2.through_first",
        (0..morphisms.len()).find(|&j| !factors(j)).map(|j| Witness::of([j])),
    );
    Ok(AdjunctionIIReport {
        functors,
        morphisms,
        first: sizes,
        report,
    })
}
