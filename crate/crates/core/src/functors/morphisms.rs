use super::filters::FilterCategoryResult;
use super::omega::OmegaResult;
use crate::error::{Error, Result};
use crate::quantale::Rqf;
use crate::report::{Report, Witness};
use crate::sets;

/// `Ω(F) : Ω(D) → Ω(C)`, `U ↦ F⁻¹(U)`, for a continuous functor `F : C → D`.
pub fn omega_morphism(f: &[usize], omega_c: &OmegaResult, omega_d: &OmegaResult) -> Result<Vec<usize>> {
    let n = f.len();
    omega_d
        .opens
        .iter()
        .enumerate()
        .map(|(i, u)| {
            let pre = sets::set_of(n, (0..n).filter(|&x| u.contains(f[x])));
            omega_c.index_of(&pre).ok_or_else(|| {
                let mut report = Report::new();
                report.fail(
                    "functor.continuous",
                    Witness::of([i]).with_note("preimage of this open is not open"),
                );
                Error::rejected("functor", report)
            })
        })
        .collect()
}

/// `C(φ) : C(S) → C(R)`, `B ↦ φ⁻¹(B)`, for a morphism `φ : R → S`.
pub fn c_morphism(
    phi: &[usize],
    r: &Rqf,
    c_r: &FilterCategoryResult,
    c_s: &FilterCategoryResult,
) -> Result<Vec<usize>> {
    (0..c_s.len())
        .map(|b| {
            let pre = sets::set_of(r.len(), (0..r.len()).filter(|&a| c_s.members[b].contains(phi[a])));
            c_r.arrow_with_members(r, &pre).ok_or_else(|| {
                let mut report = Report::new();
                report.fail(
                    "morphism.preimage_completely_prime",
                    Witness::of([b]).with_note("preimage of this filter is not completely prime"),
                );
                Error::rejected("morphism", report)
            })
        })
        .collect()
}
