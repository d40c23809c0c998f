//! Property tests for the invariants each module promises.

use kummer_core::arith::{is_prime, mult_order_naive, prime_power};
use kummer_core::core_alg::{
    dual_decompose, eigen_decompose_all, enumerate_characters, twist, twist_fixed_identity,
    CyclicActionModule,
};
use kummer_core::cyclic_cohomology::{h_i, herbrand_check, CyclicGroupAction};
use kummer_core::fields::{ExactField, FiniteField};
use kummer_core::sweeps::instances::modules_of_order_dividing;
use kummer_core::symbol_calculus::{
    build_symbol, cyclicity_witness, galois_eigenclass, relabel_iso, CyclicAlgebraPresentation,
    FormalSymbolClass,
};
use kummer_core::valuation_engine::{
    classify_kummer_case, extend_to_l, is_pth_power, lex_cmp, symbol_division_test, valuate,
    DivisionType, KummerCase, LaurentElement, Residue, ValuedFieldDescriptor,
};
use proptest::prelude::*;
use std::cmp::Ordering;
use std::sync::OnceLock;

fn f4() -> &'static FiniteField {
    static F: OnceLock<FiniteField> = OnceLock::new();
    F.get_or_init(|| FiniteField::new(2, 2).unwrap())
}

/// Truncated elements of F_4((x))((y)) with a few terms near the origin.
fn laurent() -> impl Strategy<Value = LaurentElement<FiniteField>> {
    (
        prop::collection::vec(((-3i64..4, -3i64..4), 1u128..4), 1..5),
        6i64..10,
    )
        .prop_map(|(terms, prec)| {
            let f = f4();
            let terms = terms
                .into_iter()
                .map(|((a, b), c)| (vec![a, b], f.element_from_index(c)))
                .collect();
            LaurentElement::from_terms(f, 2, terms, vec![0, prec]).unwrap()
        })
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentElement<FiniteField>> {
    laurent().prop_filter("nonzero at precision", |e| valuate(e).is_ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn valuation_is_multiplicative(a in nonzero_laurent(), b in nonzero_laurent()) {
        let f = f4();
        let (va, ca) = valuate(&a).unwrap();
        let (vb, cb) = valuate(&b).unwrap();
        let (vab, cab) = valuate(&a.mul(f, &b)).unwrap();
        prop_assert_eq!(vab, va.iter().zip(&vb).map(|(x, y)| x + y).collect::<Vec<_>>());
        prop_assert_eq!(cab, f.mul(&ca, &cb));
    }

    #[test]
    fn valuation_is_ultrametric(a in nonzero_laurent(), b in nonzero_laurent()) {
        let f = f4();
        let (va, _) = valuate(&a).unwrap();
        let (vb, _) = valuate(&b).unwrap();
        let low = if lex_cmp(&va, &vb) == Ordering::Greater { vb.clone() } else { va.clone() };
        if let Ok((vs, _)) = valuate(&a.add(f, &b)) {
            prop_assert_ne!(lex_cmp(&vs, &low), Ordering::Less);
            if va != vb {
                prop_assert_eq!(vs, low);
            }
        }
    }
}

#[test]
fn extension_count_identity_over_small_fields() {
    for q in (2..200u64).filter(|&q| prime_power(q).is_some()) {
        let (ell, d) = prime_power(q).unwrap();
        for p in [3u64, 5, 7].into_iter().filter(|&p| p != ell) {
            let desc = ValuedFieldDescriptor::laurent(Residue::finite(ell, d).unwrap(), 2);
            let ext = extend_to_l(&desc, p).unwrap();
            // [V̄(μ_p):V̄] is the order of q mod p, computed independently.
            assert_eq!(
                ext.residue_degree,
                mult_order_naive(q % p, p).unwrap(),
                "q={q} p={p}"
            );
            assert_eq!(ext.ell * ext.residue_degree, ext.l_over_f, "q={q} p={p}");
        }
    }
}

#[test]
fn pth_powers_have_index_p() {
    for q in
        (2..200u64).filter(|&q| prime_power(q).is_some_and(|(ell, d)| ell.pow(d) <= 64 || d == 1))
    {
        let (ell, d) = prime_power(q).unwrap();
        let field = FiniteField::new(ell, d).unwrap();
        for p in [3u64, 5, 7].into_iter().filter(|&p| (q - 1) % p == 0) {
            let powers = (1..q as u128)
                .filter(|&i| is_pth_power(&field, &field.element_from_index(i), p).unwrap())
                .count() as u64;
            assert_eq!(powers * p, q - 1, "q={q} p={p}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn kummer_cases_partition(c in nonzero_laurent()) {
        let f = f4();
        let (w, lead) = valuate(&c).unwrap();
        let r = classify_kummer_case(f, 3, &c).unwrap();
        let expected = if w.iter().any(|x| x.rem_euclid(3) != 0) {
            KummerCase::I
        } else if !is_pth_power(f, &lead, 3).unwrap() {
            KummerCase::II
        } else {
            KummerCase::III
        };
        prop_assert_eq!(r.case, expected);
    }

    #[test]
    fn type1_is_stable_under_pth_powers(
        wa in (-4i64..5, -4i64..5),
        wb in (-4i64..5, -4i64..5),
        ua in 1u128..4,
        ub in 1u128..4,
        t in nonzero_laurent(),
        slot in 0usize..2,
    ) {
        let f = f4();
        let rank2 = (wa.0 * wb.1 - wa.1 * wb.0).rem_euclid(3) != 0;
        prop_assume!(rank2);
        let a = LaurentElement::monomial(f, &[wa.0, wa.1], f.element_from_index(ua));
        let b = LaurentElement::monomial(f, &[wb.0, wb.1], f.element_from_index(ub));
        let base = symbol_division_test(f, 3, &a, &b).unwrap();
        prop_assert_eq!(base.classification, DivisionType::Type1);
        let cube = t.pow(f, 3);
        let (a2, b2) = if slot == 0 { (a.mul(f, &cube), b) } else { (a, b.mul(f, &cube)) };
        let moved = symbol_division_test(f, 3, &a2, &b2).unwrap();
        prop_assert_eq!(moved.classification, DivisionType::Type1);
        prop_assert_eq!(moved.value_group, base.value_group);
    }
}

fn small_modules() -> &'static [CyclicActionModule] {
    static M: OnceLock<Vec<CyclicActionModule>> = OnceLock::new();
    M.get_or_init(|| {
        let mut out = Vec::new();
        for (p, s) in [(3u64, 2u64), (5, 4), (7, 3), (7, 6)] {
            out.extend(modules_of_order_dividing(p, 81, s));
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn eigen_decomposition_is_direct(idx in any::<prop::sample::Index>()) {
        let a = &small_modules()[idx.index(small_modules().len())];
        let d = eigen_decompose_all(a).unwrap();
        prop_assert!(d.verified());
        let total: u32 = d.components.iter().map(|c| a.span_log_order(&c.submodule.gens)).sum();
        prop_assert_eq!(total, a.log_order());
    }

    #[test]
    fn twists_cancel_and_fix_eigenmodules(idx in any::<prop::sample::Index>(), k in any::<prop::sample::Index>()) {
        let a = &small_modules()[idx.index(small_modules().len())];
        let chars = enumerate_characters(a.modulus, a.acting_order).unwrap();
        let chi = chars[k.index(chars.len())];
        let back = twist(&twist(a, &chi).unwrap(), &chi.inverse()).unwrap();
        prop_assert!(a.is_zero_map(&back.action.sub(&a.action, &a.ring())));
        prop_assert!(twist_fixed_identity(a, &chi).unwrap());
    }

    #[test]
    fn dual_eigenmodules_match(idx in any::<prop::sample::Index>()) {
        let a = &small_modules()[idx.index(small_modules().len())];
        prop_assert!(dual_decompose(a).unwrap().verified());
    }

    #[test]
    fn herbrand_quotient_is_one(idx in any::<prop::sample::Index>()) {
        let a = &small_modules()[idx.index(small_modules().len())];
        let act = CyclicGroupAction::new(a.clone());
        prop_assert!(herbrand_check(&act).passed);
        for i in 1..=2 {
            prop_assert!(h_i(&act, i).unwrap().log_order <= a.log_order());
        }
    }
}

#[test]
fn relabelings_compose() {
    let field = FiniteField::new(11, 1).unwrap();
    for m in [2u64, 5] {
        let zeta = field.root_of_unity(m).unwrap();
        let alg = build_symbol(&field, m, &field.from_i64(2), &field.from_i64(3), &zeta).unwrap();
        for k1 in (1..m as i64).filter(|k| kummer_core::arith::gcd(*k as u64, m) == 1) {
            for k2 in (1..m as i64).filter(|k| kummer_core::arith::gcd(*k as u64, m) == 1) {
                let r1 = relabel_iso(&alg, k1).unwrap();
                let r2 = relabel_iso(&r1.target, k2).unwrap();
                let r12 = relabel_iso(&alg, k1 * k2).unwrap();
                assert!(r1.verified() && r2.verified() && r12.verified());
                // k1·k2 = q·m + k with i^m = a, so the relabelings agree up to powers of a.
                let q = r1.k * r2.k / m;
                let a_q = field.pow(&alg.a, q);
                assert_eq!(r2.target.a, field.mul(&r12.target.a, &field.pow(&a_q, m)));
                assert_eq!(r2.target.zeta, r12.target.zeta);
                for x in 0..r12.target.dim() {
                    let scale = field.pow(&a_q, x as u64 / m);
                    let via = r1.apply(&r2.images[x]);
                    assert_eq!(
                        via,
                        alg.scale(&scale, &r12.images[x]),
                        "m={m} k1={k1} k2={k2} basis {x}"
                    );
                }
            }
        }
    }
}

#[test]
fn eigenclasses_are_bimultiplicative() {
    let m = kummer_core::core_alg::Modulus::new(7, 2).unwrap();
    let chars = enumerate_characters(m, 6).unwrap();
    let alpha = chars[1];
    for x in &chars {
        for y in &chars {
            for x2 in &chars {
                for y2 in &chars {
                    let c1 = FormalSymbolClass::new(*x, *y, alpha).unwrap();
                    let c2 = FormalSymbolClass::new(*x2, *y2, alpha).unwrap();
                    let e1 = galois_eigenclass(&c1).character;
                    let e2 = galois_eigenclass(&c2).character;
                    let e12 = galois_eigenclass(&c1.slot_product(&c2)).character;
                    // χψα^{-1} · χ'ψ'α^{-1} is the class of the product twisted once more by α^{-1}.
                    assert_eq!(e1.mul(&e2), e12.mul(&alpha.inverse()));
                }
            }
        }
    }
}

#[test]
fn cyclicity_witness_iff_not_pth_power() {
    for ell in (2..60u64).filter(|&l| is_prime(l)) {
        for p in [2u64, 3, 5].into_iter().filter(|&p| p != ell) {
            for b in 1..ell {
                let pres = CyclicAlgebraPresentation { ell, p, n: 1, b };
                let is_power = (1..ell).any(|d| kummer_core::arith::pow_mod(d, p, ell) == b);
                match cyclicity_witness(&pres) {
                    Ok(w) => {
                        assert!(!is_power, "ell={ell} p={p} b={b}");
                        assert!(w.gamma_power_is_b && w.conjugation_is_sigma);
                    }
                    Err(_) => assert!(is_power, "ell={ell} p={p} b={b}"),
                }
            }
        }
    }
}
