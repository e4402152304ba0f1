mod common;

use std::collections::BTreeMap;

use common::{lens_d_recursive, staircase_v, Q, T25, T34, TREFOIL};
use floer_core::alexander::knot_h_from_alexander;
use floer_core::invariants::{
    casson_surgery, d_large_surgery_knot, d_lens, d_one_surgery_bound, mu123_squared, sublink_a2,
    triple_linking_d_verdict, BoundKind, Coefficients, InvariantError, TripleLinkingVerdict,
};
use floer_core::lattice::{unknot_h, Provenance};
use floer_core::{Catalog, HModel, HPrimeTable, LaurentPoly, NormalizedAlexander, SublinkId};
use proptest::prelude::*;

const BUNDLED: &str = include_str!("../../../data/catalog.json");

fn knot_h(terms: &[(i64, i64)]) -> HPrimeTable {
    let p = LaurentPoly::from_terms(1, terms.iter().map(|&(e, c)| (vec![2 * e as i32], c))).unwrap();
    knot_h_from_alexander(&NormalizedAlexander::new(p).unwrap()).unwrap()
}

#[test]
fn lens_d_matches_recursion() {
    for m in 1..=12 {
        for i in 0..m {
            assert_eq!(d_lens(m, i).unwrap(), lens_d_recursive(m, 1, i), "L({m},1), i = {i}");
            assert_eq!(d_lens(m, i).unwrap(), d_lens(m, (m - i) % m).unwrap());
        }
        assert_eq!(d_lens(m, 0).unwrap(), Q::new(m - 1, 4));
    }
    assert_eq!(d_lens(0, 0), Err(InvariantError::BadModulus(0)));
    assert_eq!(d_lens(5, 5), Err(InvariantError::IndexOutOfRange { m: 5, i: 5 }));
}

#[test]
fn large_surgery_uses_v() {
    for poly in [TREFOIL, T25, T34] {
        let h = knot_h(poly);
        let v = staircase_v(poly);
        let g = *v.keys().last().unwrap() - 1;
        for m in (2 * g - 1).max(1)..=2 * g + 4 {
            for i in 0..m {
                let k = i.min(m - i);
                let want = lens_d_recursive(m, 1, k) - Q::from_integer(2 * v[&k.min(g + 1)]);
                let got = d_large_surgery_knot(&h, m, i).unwrap();
                assert_eq!(got.kind, BoundKind::Exact);
                assert_eq!(got.value, want, "m = {m}, i = {i}");
            }
        }
    }
    // +1 surgery on the trefoil is the Poincare sphere.
    assert_eq!(d_large_surgery_knot(&knot_h(TREFOIL), 1, 0).unwrap().value, Q::from_integer(-2));
    assert!(matches!(
        d_large_surgery_knot(&knot_h(T34), 4, 0),
        Err(InvariantError::NotLarge { .. })
    ));
}

#[test]
fn unknot_h_is_the_lens_shift() {
    for s in -3..=3 {
        assert_eq!(unknot_h(s), if s < 0 { -s } else { 0 });
    }
}

fn borromean_a2() -> BTreeMap<SublinkId, i64> {
    let catalog = Catalog::load_str(BUNDLED).unwrap();
    let r = catalog.record("borromean").unwrap();
    let m = catalog.model(r).unwrap();
    sublink_a2(&m, &catalog.sublink_chi(r)).unwrap()
}

#[test]
fn casson_is_multilinear() {
    let a2s = borromean_a2();
    let f = |q: [i64; 3]| casson_surgery(&a2s, &q).unwrap();
    for base in [[0, 0, 0], [1, -2, 3], [-1, -1, 4]] {
        let mut mixed = 0;
        for mask in 0..8 {
            let mut q = base;
            let mut sign = 1;
            for (i, qi) in q.iter_mut().enumerate() {
                if mask >> i & 1 == 1 {
                    *qi += 1;
                } else {
                    sign = -sign;
                }
            }
            mixed += sign * f(q);
        }
        assert_eq!(mixed, a2s[&SublinkId::full(3)]);
    }
    assert_eq!(f([1, 1, 1]), 1);
    assert_eq!(f([2, 3, 5]), 30);
}

#[test]
fn casson_needs_every_sublink() {
    let mut a2s = borromean_a2();
    a2s.remove(&"1,2".parse().unwrap());
    assert!(matches!(
        casson_surgery(&a2s, &[1, 1, 1]),
        Err(InvariantError::MissingSublinkData(_))
    ));
}

#[test]
fn one_surgery_bounds() {
    let b = HModel::brunnian(HPrimeTable::delta(3), Provenance::Manual).unwrap();
    let d = d_one_surgery_bound(&b, true);
    assert_eq!((d.value, d.kind), (Q::from_integer(-2), BoundKind::Exact));
    assert_eq!(d_one_surgery_bound(&b, false).kind, BoundKind::UpperBound);
    assert_eq!(d_one_surgery_bound(&HModel::unlink(3), true).value, Q::from_integer(0));
}

#[test]
fn triple_linking_verdicts() {
    match triple_linking_d_verdict(3, Some(3), true) {
        TripleLinkingVerdict::Bound { bound, coefficients, .. } => {
            assert_eq!(bound.value, Q::from_integer(-2));
            assert_eq!(bound.kind, BoundKind::UpperBound);
            assert!(coefficients.contains(&Coefficients::F2));
        }
        other => panic!("{other:?}"),
    }
    match triple_linking_d_verdict(3, Some(2), true) {
        TripleLinkingVerdict::Bound { coefficients, .. } => assert!(!coefficients.contains(&Coefficients::F2)),
        other => panic!("{other:?}"),
    }
    for (n, mu, pairs) in [(2, Some(1), true), (3, Some(0), true), (3, Some(1), false), (3, None, true)] {
        assert!(matches!(
            triple_linking_d_verdict(n, mu, pairs),
            TripleLinkingVerdict::NotApplicable(_)
        ));
    }
}

fn arb_symmetric3() -> impl Strategy<Value = HPrimeTable> {
    prop::collection::vec((prop::collection::vec(-2i64..=2, 3), 1i64..=3), 0..5).prop_map(|pts| {
        let mut t = HPrimeTable::new(3);
        for (p, v) in pts {
            let neg: Vec<i64> = p.iter().map(|x| -x).collect();
            t.add(p.clone(), v);
            if neg != p {
                t.add(neg, v);
            }
        }
        t
    })
}

proptest! {
    #[test]
    fn brunnian_mu_is_sum_h(t in arb_symmetric3()) {
        let m = HModel::brunnian(t, Provenance::Manual).unwrap();
        let mu = mu123_squared(&m, None, false).unwrap();
        let direct: i64 = m.full_table().entries().map(|(_, v)| v).sum();
        prop_assert_eq!(mu.squared, direct.abs());
        prop_assert_eq!(Some(mu.squared), m.total_h().map(i64::abs));
        // Off-origin values come in pairs.
        let h0 = m.eval_h(&[0, 0, 0]).unwrap();
        prop_assert_eq!((direct - h0).rem_euclid(2), 0);
        let mut a2s = BTreeMap::new();
        for id in SublinkId::full(3).nonempty_subsets() {
            a2s.insert(id, if id == SublinkId::full(3) { direct } else { 0 });
        }
        prop_assert_eq!(casson_surgery(&a2s, &[1, 1, 1]).unwrap(), direct);
    }
}
