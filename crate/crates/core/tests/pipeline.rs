//! End-to-end checks that cross module boundaries.

use kummer_core::arith::vp;
use kummer_core::core_alg::{CyclicActionModule, Modulus};
use kummer_core::cyclic_cohomology::{h_i, to_gmodule, CyclicGroupAction};
use kummer_core::field_tower::{build_tower, descent_iso_check};
use kummer_core::group_oracle::{
    brute_cohomology, brute_cohomology_with_limits, cyclic, sylow_catalog, verify_prop_1_4,
    GModule, Limits,
};

#[test]
fn tower_over_f7() {
    let t = build_tower(7, 3, 2).unwrap();
    assert_eq!((t.s, t.deg_ml), (1, 3));
    assert!(descent_iso_check(&t).verified());
}

#[test]
fn trivial_z9_under_c3_both_ways() {
    let m = Modulus::new(3, 2).unwrap();
    let a = CyclicActionModule::cyclic(m, 2, 1, 3).unwrap();
    let act = CyclicGroupAction::new(a.clone());
    let gm = to_gmodule(&a, 3, &a.action).unwrap();
    for i in 1..=2 {
        assert_eq!(h_i(&act, i).unwrap().invariants, vec![1]);
        assert_eq!(brute_cohomology(&gm, i).unwrap().invariants, vec![1]);
    }
}

#[test]
fn z15_on_trivial_z5() {
    let gm = GModule::trivial(cyclic(15), 5, vec![1]).unwrap();
    let limits = Limits {
        max_group_order: 15,
        ..Limits::default()
    };
    assert_eq!(
        brute_cohomology_with_limits(&gm, 1, &limits)
            .unwrap()
            .invariants,
        vec![1]
    );
}

#[test]
fn sylow_catalog_agrees() {
    let mut checked = 0;
    for g in sylow_catalog() {
        let order = g.order as u64;
        for p in [3u64, 5, 7] {
            let k = vp(order, p).unwrap_or(0);
            for s in (1..p).filter(|s| (p - 1) % s == 0 && k > 0 && s * p.pow(k) == order) {
                assert!(
                    verify_prop_1_4(&g, p, s).unwrap().agree,
                    "{} p={p} s={s}",
                    g.name
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}
