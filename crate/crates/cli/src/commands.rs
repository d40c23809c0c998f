//! One report builder per subcommand.

use crate::input::{self, DescriptorFile};
use kummer_core::arith::gcd;
use kummer_core::core_alg::{dual_decompose, eigen_decompose_all, CyclicActionModule, Modulus};
use kummer_core::cyclic_cohomology::{
    h_i, herbrand_check, mu_size_direct, mu_size_formula, to_gmodule, CyclicGroupAction,
};
use kummer_core::error::{Error, Result};
use kummer_core::field_tower::{build_tower, cor25_surjectivity, descent_iso_check};
use kummer_core::fields::{CyclotomicField, ExactField, FiniteField};
use kummer_core::group_oracle::{
    brute_cohomology, by_name, catalog_upto_24, sweep_character_subgroups, verify_prop_1_4, Limits,
};
use kummer_core::report::{Check, Report};
use kummer_core::sweeps::sweep_report;
use kummer_core::symbol_calculus::{build_symbol, relabel_iso};
use kummer_core::valuation_engine::{
    count_extensions_along, extend_to_l, predict_fp_extension, symbol_division_test, DivisionType,
    LaurentElement, Residue,
};
use serde_json::{json, Value};

pub fn tower(q: u64, p: u64, n: u32) -> Result<Report> {
    let t = build_tower(q, p, n)?;
    let mut r = Report::new("tower", json!({ "q": q, "p": p, "n": n }))
        .with_outputs(serde_json::to_value(&t).expect("tower serializes"));
    r.push(Check::new(
        "degree_formula",
        t.degree_formula_holds(),
        json!({ "formula": t.deg_ml, "direct": t.deg_ml_direct }),
    ));
    let mut sizes = Vec::new();
    for k in 1..=n {
        let direct = mu_size_direct(&t, k)?;
        let formula = mu_size_formula(p, n, k, t.c)?;
        let pass = p.pow(direct.h1_log) == formula && p.pow(direct.h2_log) == formula;
        sizes.push(json!({ "k": k, "formula": formula, "h1_log": direct.h1_log, "h2_log": direct.h2_log, "pass": pass }));
    }
    let acyclic = sizes
        .last()
        .is_some_and(|s| s["h1_log"] == 0 && s["h2_log"] == 0);
    r.push(Check::new(
        "mu_cohomology",
        sizes.iter().all(|s| s["pass"] == true),
        Value::Array(sizes),
    ));
    r.push(Check::bare("top_level_acyclic", acyclic));
    let descent = descent_iso_check(&t);
    r.push(Check::new(
        "descent",
        descent.verified(),
        serde_json::to_value(&descent).expect("descent serializes"),
    ));
    let cor = cor25_surjectivity(q, p, n)?;
    r.push(Check::new(
        "theta_surjection",
        cor.surjective,
        json!({ "theta": cor.theta, "theta_prime": cor.theta_prime, "image_log": cor.image_log }),
    ));
    Ok(r)
}

fn module(spec: &str, action: &str, order: u64) -> Result<CyclicActionModule> {
    let (p, parts) = input::module_shape(spec)?;
    let n = *parts.iter().max().expect("nonempty");
    let modulus = Modulus::new(p, n)?;
    let t = input::matrix(action, parts.len(), modulus.value)?;
    CyclicActionModule::new(modulus, parts, t, order)
}

pub fn eigen(spec: &str, action: &str, s: u64) -> Result<Report> {
    let a = module(spec, action, s)?;
    let d = eigen_decompose_all(&a)?;
    let components: Vec<Value> = d
        .components
        .iter()
        .map(|c| {
            json!({
                "gamma": c.character.gamma,
                "invariants": a.invariants(&c.submodule),
                "generators": c.submodule.gens,
            })
        })
        .collect();
    let mut r = Report::new("eigen", json!({ "module": spec, "action": action, "s": s }))
        .with_outputs(
            json!({ "p": a.modulus.p, "cyclic_parts": a.cyclic_parts, "components": components }),
        );
    r.push(Check::new(
        "decomposition",
        d.verified(),
        json!({ "orders_sum": d.orders_sum, "direct": d.direct, "stable": d.stable }),
    ));
    r.push(Check::bare("dual_orders", dual_decompose(&a)?.verified()));
    Ok(r)
}

pub fn cohom(n: u64, spec: &str, action: &str) -> Result<Report> {
    let a = module(spec, action, n)?;
    let act = CyclicGroupAction::new(a.clone());
    let h1 = h_i(&act, 1)?;
    let h2 = h_i(&act, 2)?;
    let mut r = Report::new("cohom", json!({ "N": n, "module": spec, "action": action }))
        .with_outputs(json!({
            "p": a.modulus.p,
            "h1": h1.invariants,
            "h2": h2.invariants,
        }));
    r.push(Check::bare("herbrand", herbrand_check(&act).passed));
    let limits = Limits::default();
    if n as usize <= limits.max_group_order && u128::from(a.order()) <= limits.max_module_order {
        let gm = to_gmodule(&a, n, &a.action)?;
        for (i, cyc) in [(1, &h1), (2, &h2)] {
            let brute = brute_cohomology(&gm, i)?;
            let strip = |v: &[u32]| -> Vec<u32> { v.iter().copied().filter(|&e| e > 0).collect() };
            r.push(Check::new(
                format!("oracle_h{i}"),
                strip(&brute.invariants) == strip(&cyc.invariants),
                json!({ "brute": brute.invariants, "method": brute.method }),
            ));
        }
    }
    Ok(r)
}

/// Σ c_i ζ^i from "c0,c1,…".
fn element<K: ExactField>(f: &K, zeta: &K::Elem, spec: &str) -> Result<K::Elem> {
    let mut acc = f.zero();
    for (i, c) in input::int_list(spec, "element")?.into_iter().enumerate() {
        acc = f.add(&acc, &f.mul(&f.from_i64(c), &f.pow(zeta, i as u64)));
    }
    Ok(acc)
}

fn symbol_over<K: ExactField>(
    f: &K,
    zeta: K::Elem,
    m: u64,
    a: &str,
    b: &str,
    ks: &[i64],
    inputs: Value,
) -> Result<Report> {
    let alg = build_symbol(f, m, &element(f, &zeta, a)?, &element(f, &zeta, b)?, &zeta)?;
    let checks = alg.verify();
    let mut r = Report::new("symbol", inputs).with_outputs(json!({
        "field": f.name(),
        "a": f.render(&alg.a),
        "b": f.render(&alg.b),
        "zeta": f.render(&alg.zeta),
        "dimension": checks.dimension,
    }));
    r.push(Check::new(
        "relations",
        checks.all(),
        serde_json::to_value(checks).expect("checks serialize"),
    ));
    for &k in ks {
        let rel = relabel_iso(&alg, k)?;
        r.push(Check::new(
            format!("relabel_k{k}"),
            rel.verified(),
            json!({ "unital": rel.unital, "homomorphism": rel.homomorphism, "bijective": rel.bijective }),
        ));
    }
    Ok(r)
}

pub fn symbol(field: &str, m: u64, a: &str, b: &str, k: Option<&str>) -> Result<Report> {
    let ks = match k {
        Some(spec) => input::int_list(spec, "k")?,
        None => (1..m.max(2) as i64)
            .filter(|&k| gcd(k as u64, m) == 1)
            .collect(),
    };
    let inputs = json!({ "field": field, "m": m, "a": a, "b": b, "k": ks });
    if field == "Q" {
        let f = CyclotomicField::new(m)?;
        let zeta = f.generator();
        return symbol_over(&f, zeta, m, a, b, &ks, inputs);
    }
    let (ell, d) = input::finite_field_name(field)
        .ok_or_else(|| Error::InvalidField(format!("unknown field {field:?}")))?;
    let f = FiniteField::new(ell, d)?;
    let zeta = f.root_of_unity(m).ok_or_else(|| {
        Error::InvalidField(format!("{field} has no primitive {m}-th root of unity"))
    })?;
    symbol_over(&f, zeta, m, a, b, &ks, inputs)
}

pub fn valuation(path: &str, text: &str) -> Result<Report> {
    let DescriptorFile {
        p,
        descriptor,
        symbol,
        tower,
    } = input::descriptor(text)?;
    let ext = extend_to_l(&descriptor, p)?;
    let mut outputs = json!({
        "residue": descriptor.residue.label(),
        "extension_to_l": ext,
    });
    let mut r = Report::new("valuation", json!({ "descriptor": path, "p": p }));
    r.push(Check::new(
        "extension_count_identity",
        ext.ell * ext.residue_degree == ext.l_over_f,
        json!({ "ell": ext.ell, "residue_degree": ext.residue_degree, "l_over_f": ext.l_over_f }),
    ));
    outputs["extension_to_l"]["value_group_rendered"] = json!(ext.value_group.render());
    if descriptor.residue_chain.is_some() {
        let fp = predict_fp_extension(&descriptor, p)?;
        outputs["fp_prediction"] = serde_json::to_value(&fp).expect("prediction serializes");
        outputs["fp_prediction"]["value_group_rendered"] = json!(fp.value_group.render());
    }
    if !tower.is_empty() {
        let count = count_extensions_along(&descriptor, p, &tower)?;
        r.push(Check::bare("ell_invariant", count.ell_invariant));
        outputs["tower"] = serde_json::to_value(count).expect("tower serializes");
    }
    if let Some([(wa, ca), (wb, cb)]) = symbol {
        let Residue::Finite { ell, degree } = descriptor.residue else {
            return Err(Error::InvalidDescriptor(
                "symbol tests need a finite residue field".into(),
            ));
        };
        let f = FiniteField::new(ell, degree)?;
        let a = LaurentElement::monomial(&f, &wa, f.element_from_index(ca));
        let b = LaurentElement::monomial(&f, &wb, f.element_from_index(cb));
        let test = symbol_division_test(&f, p, &a, &b)?;
        r.push(Check::new(
            "division_test_decided",
            test.classification != DivisionType::Unknown,
            json!(test.classification),
        ));
        outputs["symbol"] = json!({
            "a": a.render(&f),
            "b": b.render(&f),
            "index_over_lattice": test.value_group.as_ref().and_then(|g| g.index_over_lattice()),
            "value_group_rendered": test.value_group.as_ref().map(|g| g.render()),
            "test": test,
        });
    }
    Ok(r.with_outputs(outputs))
}

pub fn oracle(
    group: Option<&str>,
    exponents: &str,
    p: Option<u64>,
    s: Option<u64>,
) -> Result<Report> {
    let es: Vec<u64> = input::int_list(exponents, "exponents")?
        .into_iter()
        .map(|e| {
            u64::try_from(e).map_err(|_| Error::InvalidInstance(format!("negative exponent {e}")))
        })
        .collect::<Result<_>>()?;
    let groups = match group {
        Some(name) => vec![by_name(name)
            .ok_or_else(|| Error::InvalidInstance(format!("unknown group {name:?}")))?],
        None => catalog_upto_24(),
    };
    let mut r = Report::new(
        "oracle",
        json!({ "group": group, "exponents": es, "p": p, "s": s }),
    );
    let mut rows = Vec::new();
    let (mut instances, mut agreements) = (0, 0);
    for g in &groups {
        let sw = sweep_character_subgroups(g, &es);
        instances += sw.instances;
        agreements += sw.agreements;
        rows.push(
            json!({ "group": sw.group, "instances": sw.instances, "agreements": sw.agreements }),
        );
        if !sw.disagreements.is_empty() {
            r.push(Check::new(
                format!("character_subgroups_{}", sw.group),
                false,
                json!(sw.disagreements),
            ));
        }
    }
    r.push(Check::new(
        "character_subgroups",
        instances == agreements,
        json!({ "instances": instances, "agreements": agreements }),
    ));
    let mut outputs = json!({ "groups": rows });
    if let (Some(p), Some(s)) = (p, s) {
        for g in &groups {
            let rep = verify_prop_1_4(g, p, s)?;
            r.push(Check::bare(
                format!("sylow_criteria_{}", rep.group),
                rep.agree,
            ));
            outputs["sylow_criteria"] = serde_json::to_value(&rep).expect("report serializes");
        }
    }
    Ok(r.with_outputs(outputs))
}

pub fn sweep(suite: &str) -> Result<Report> {
    sweep_report(suite)
}
