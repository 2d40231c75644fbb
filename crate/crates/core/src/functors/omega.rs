use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::order::FinitePoset;
use crate::quantale::{validate_rqf, QuantaleTables, Rqf};
use crate::report::Report;
use crate::sets;
use crate::table::Table;
use crate::topcat::{etale_report, TopCategory};
use fixedbitset::FixedBitSet;
use std::collections::HashMap;
use std::ops::Deref;

/// `Ω(C)`: the open sets of an étale category under inclusion, with the set
/// product, `U* = d(U)`, `U⁺ = r(U)` and unit `C_o`.
#[derive(Debug, Clone)]
pub struct OmegaResult {
    pub rqf: Rqf,
    pub opens: Vec<FixedBitSet>,
    pub report: Report,
    index: HashMap<FixedBitSet, usize>,
}

impl Deref for OmegaResult {
    type Target = Rqf;

    fn deref(&self) -> &Rqf {
        &self.rqf
    }
}

impl OmegaResult {
    pub fn index_of(&self, u: &FixedBitSet) -> Option<usize> {
        self.index.get(u).copied()
    }

    pub fn open(&self, i: usize) -> &FixedBitSet {
        &self.opens[i]
    }
}

pub fn omega_object(tc: &TopCategory, limits: &Limits) -> Result<OmegaResult> {
    if tc.len() > limits.max_arrows {
        return Err(Error::bound("category handed to Ω", tc.len(), limits.max_arrows));
    }
    let etale = etale_report(tc);
    if !etale.is_pass() {
        return Err(Error::rejected("category", etale));
    }
    let opens = tc.topology().opens(limits.max_elements)?;
    let n = opens.len();
    let index: HashMap<FixedBitSet, usize> = opens.iter().enumerate().map(|(i, u)| (u.clone(), i)).collect();
    let at = |u: &FixedBitSet| -> usize {
        *index
            .get(u)
            .expect("the open sets of an étale category are closed under the operations")
    };
    let poset = FinitePoset::from_fn(n, |i, j| opens[i].is_subset(&opens[j]));
    let meet = Table::from_fn(n, |i, j| at(&sets::intersection(&opens[i], &opens[j])));
    let join = Table::from_fn(n, |i, j| at(&sets::union(&opens[i], &opens[j])));
    let mul = Table::from_fn(n, |i, j| at(&tc.set_product(&opens[i], &opens[j])));
    let tables = QuantaleTables {
        mul,
        unit: at(tc.identity_set()),
        star: opens.iter().map(|u| at(&tc.set_d(u))).collect(),
        plus: opens.iter().map(|u| at(&tc.set_r(u))).collect(),
    };
    let (report, rqf) = validate_rqf(poset, Some((meet, join)), tables);
    let rqf = rqf.ok_or_else(|| Error::rejected("Ω of the category", report.clone()))?;
    Ok(OmegaResult {
        rqf,
        opens,
        report,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::Table;
    use crate::topcat::FiniteCategory;

    #[test]
    fn pair_groupoid_two() {
        let om = omega_object(
            &TopCategory::discrete(FiniteCategory::pair_groupoid(2)),
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(om.len(), 16);
        assert_eq!(om.pi_list().len(), 7);
        assert!(om.report.is_pass());
    }

    #[test]
    fn empty_category_gives_one_element() {
        let om = omega_object(&TopCategory::discrete(FiniteCategory::empty()), &Limits::default()).unwrap();
        assert_eq!(om.len(), 1);
        assert_eq!(om.unit(), om.top());
    }

    #[test]
    fn monoid_with_zero_gives_four() {
        let mul = Table::from_rows(&[vec![0, 1], vec![1, 1]]).unwrap();
        let tc = TopCategory::discrete(FiniteCategory::monoid(&mul, 0));
        assert_eq!(omega_object(&tc, &Limits::default()).unwrap().len(), 4);
    }

    #[test]
    fn oversized_input_is_refused() {
        let limits = Limits {
            max_arrows: 3,
            ..Limits::default()
        };
        let tc = TopCategory::discrete(FiniteCategory::pair_groupoid(2));
        assert!(matches!(omega_object(&tc, &limits), Err(Error::BoundExceeded { .. })));
    }
}
