mod common;

use common::{
    brute_cp_filters, count_covering_functors, count_rqf_morphisms, for_each_map, is_local_bisection,
    partial_injections,
};
use etale_core::crm::{callitic_morphisms, is_callitic, l_vee, pi_restriction_monoid, theta_extension};
use etale_core::functors::{c_object, omega_morphism, omega_object};
use etale_core::order::{enumerate_cp_filters, FiniteFrame};
use etale_core::quantale::Rqf;
use etale_core::sets;
use etale_core::topcat::{covering_functors, FiniteCategory, TopCategory};
use etale_core::Limits;

fn members(l: &FiniteFrame) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = enumerate_cp_filters(l)
        .iter()
        .map(|f| f.members(l).ones().collect())
        .collect();
    out.sort();
    out
}

#[test]
fn three_chain_has_two_filters() {
    let chain = FiniteFrame::chain(3);
    let expected = vec![vec![1, 2], vec![2]];
    assert_eq!(brute_cp_filters(&chain), expected);
    assert_eq!(members(&chain), expected);
}

#[test]
fn power_set_of_four_has_one_filter_per_point() {
    let b = FiniteFrame::boolean(4);
    let expected: Vec<Vec<usize>> = {
        let mut v: Vec<Vec<usize>> = (0..4).map(|c| (0..16).filter(|s| s >> c & 1 == 1).collect()).collect();
        v.sort();
        v
    };
    assert_eq!(brute_cp_filters(&b), expected);
    assert_eq!(members(&b), expected);
}

#[test]
fn one_element_frame_has_no_filters() {
    let one = FiniteFrame::chain(1);
    assert!(brute_cp_filters(&one).is_empty());
    assert!(members(&one).is_empty());
}

#[test]
fn product_frames_against_search() {
    let frames = [
        FiniteFrame::chain(2).product(&FiniteFrame::chain(3)),
        FiniteFrame::boolean(2).product(&FiniteFrame::chain(4)),
        FiniteFrame::chain(3)
            .product(&FiniteFrame::chain(3))
            .product(&FiniteFrame::chain(2)),
    ];
    for f in &frames {
        assert_eq!(brute_cp_filters(f), members(f));
    }
}

#[test]
fn partial_bijections_of_pair_groupoid_by_subsets() {
    for n in 1..=3 {
        let c = FiniteCategory::pair_groupoid(n);
        let arrows = c.len();
        let count = (0..1usize << arrows)
            .filter(|mask| is_local_bisection(&c, &sets::set_of(arrows, (0..arrows).filter(|i| mask >> i & 1 == 1))))
            .count();
        assert_eq!(count as u64, partial_injections(n as u64));
    }
    assert_eq!(partial_injections(2), 7);
    assert_eq!(partial_injections(3), 34);
}

#[test]
fn incompatible_partial_bijections() {
    let om = omega_object(
        &TopCategory::discrete(FiniteCategory::pair_groupoid(2)),
        &Limits::default(),
    )
    .unwrap();
    let a = om.index_of(&sets::set_of(4, [1])).unwrap();
    let b = om.index_of(&sets::set_of(4, [0])).unwrap();
    assert_ne!(om.mul(om.plus(b), a), om.mul(om.plus(a), b));
    assert!(!om.is_pi(om.join(a, b)));
    let swap = om.index_of(&sets::set_of(4, [1, 2])).unwrap();
    let back = om.index_of(&sets::set_of(4, [2])).unwrap();
    assert_eq!(om.join(a, back), swap);
    assert!(om.is_pi(swap));
}

#[test]
fn pair_groupoid_endofunctors_by_brute_force() {
    let tc = TopCategory::discrete(FiniteCategory::pair_groupoid(2));
    let searched = covering_functors(&tc, &tc, 1000).unwrap();
    assert_eq!(count_covering_functors(&tc, &tc, 1 << 20), Some(searched.len()));
    assert_eq!(searched.len(), 2);
}

#[test]
fn small_quantale_morphisms_by_brute_force() {
    let limits = Limits::default();
    let cases: Vec<(Rqf, Rqf)> = vec![
        (
            Rqf::from_frame(FiniteFrame::chain(3)),
            Rqf::from_frame(FiniteFrame::boolean(2)),
        ),
        (
            Rqf::from_frame(FiniteFrame::boolean(2)),
            Rqf::from_frame(FiniteFrame::boolean(2)),
        ),
        (
            omega_object(&TopCategory::discrete(FiniteCategory::discrete(2)), &limits)
                .unwrap()
                .rqf,
            Rqf::from_frame(FiniteFrame::chain(2).product(&FiniteFrame::chain(3))),
        ),
    ];
    for (q, r) in &cases {
        let searched = etale_core::duality::rqf_morphisms(q, r, 10_000).unwrap();
        assert_eq!(count_rqf_morphisms(q, r, 1 << 22), Some(searched.len()));
    }
}

#[test]
fn callitic_automorphisms_of_partial_bijections_by_brute_force() {
    let om = omega_object(
        &TopCategory::discrete(FiniteCategory::pair_groupoid(2)),
        &Limits::default(),
    )
    .unwrap();
    let s = pi_restriction_monoid(&om).1.unwrap();
    assert_eq!(s.len(), 7);
    let mut count = 0;
    assert!(for_each_map(7, 7, 1 << 20, |m| count += usize::from(is_callitic(m, &s, &s))));
    assert_eq!(callitic_morphisms(&s, &s, 1000).unwrap().len(), count);
    assert_eq!(count, 2);
}

#[test]
fn swap_induces_involutions_everywhere() {
    let limits = Limits::default();
    let tc = TopCategory::discrete(FiniteCategory::pair_groupoid(2));
    let swap: Vec<usize> = (0..4).map(|a| (1 - a / 2) * 2 + (1 - a % 2)).collect();
    let om = omega_object(&tc, &limits).unwrap();
    let phi = omega_morphism(&swap, &om, &om).unwrap();
    assert_ne!(phi, (0..16).collect::<Vec<_>>());
    assert!((0..16).all(|u| phi[phi[u]] == u));

    let (_, s, carrier) = pi_restriction_monoid(&om);
    let s = s.unwrap();
    let mut position = vec![usize::MAX; om.len()];
    for (i, &a) in carrier.iter().enumerate() {
        position[a] = i;
    }
    let theta: Vec<usize> = carrier.iter().map(|&a| position[phi[a]]).collect();
    assert!(is_callitic(&theta, &s, &s));
    let lv = l_vee(&s, &limits).unwrap();
    let (big, report) = theta_extension(&theta, &s, &lv, &s, &lv);
    assert!(report.is_pass(), "{}", report.summary());
    assert_eq!(big.len(), 16);
    assert!((0..16).all(|i| big[big[i]] == i));
    assert_ne!(big, (0..16).collect::<Vec<_>>());

    let c = c_object(&om, &limits).unwrap();
    assert_eq!(c.len(), 4);
}
