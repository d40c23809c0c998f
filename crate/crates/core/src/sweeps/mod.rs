//! Named verification suites. Each suite runs a closed formula or structural
//! claim against an independent computation over an exhaustive instance family.

pub mod instances;

use crate::arith::gcd;
use crate::core_alg::{
    check_idempotents, enumerate_characters, idempotents, induce_and_project, Modulus,
};
use crate::cyclic_cohomology::{
    h_i, mu_size_direct, mu_size_formula, to_gmodule, CyclicGroupAction,
};
use crate::error::{Error, Result};
use crate::field_tower::{build_tower, cor25_surjectivity, descent_iso_check};
use crate::fields::{CyclotomicField, ExactField, FiniteField};
use crate::group_oracle::{brute_cohomology, catalog_upto_24, sweep_character_subgroups};
use crate::report::{Check, Report};
use crate::symbol_calculus::{build_symbol, relabel_iso};
use crate::valuation_engine::{
    mixed_example_descriptors, predict_fp_extension, symbol_division_test, DivisionType,
    LaurentElement, LexValueGroup, Residue,
};
use instances::{
    module_classes_of_order_dividing, modules_of_order_dividing, odd_primes_upto, tower_instances,
    TOWER_PRIMES,
};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::HashMap;
use std::time::{Duration, Instant};

/// Failures listed in a result before truncation.
const FAILURE_SAMPLES: usize = 20;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub description: String,
    pub instances: usize,
    pub failures: usize,
    pub failure_samples: Vec<String>,
    pub summary: Value,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.instances > 0
    }

    pub fn to_check(&self) -> Check {
        Check::new(
            self.name.clone(),
            self.passed(),
            json!({
                "instances": self.instances,
                "failures": self.failures,
                "failure_samples": self.failure_samples,
                "summary": self.summary,
            }),
        )
    }
}

type SuiteRun = fn() -> (Vec<std::result::Result<(), String>>, Value);

pub struct Suite {
    pub name: &'static str,
    pub description: &'static str,
    run: SuiteRun,
}

impl Suite {
    pub fn run(&self) -> SuiteResult {
        let start = Instant::now();
        let (outcomes, summary) = (self.run)();
        let instances = outcomes.len();
        let failed: Vec<String> = outcomes.into_iter().filter_map(|o| o.err()).collect();
        SuiteResult {
            name: self.name.into(),
            description: self.description.into(),
            instances,
            failures: failed.len(),
            failure_samples: failed.iter().take(FAILURE_SAMPLES).cloned().collect(),
            summary,
            elapsed: start.elapsed(),
        }
    }
}

pub const SUITES: &[Suite] = &[
    Suite {
        name: "tower-degree",
        description: "[M:L] = p^(n-c) against the multiplicative order of q^s mod p^n",
        run: tower_degree,
    },
    Suite {
        name: "mu-cohomology",
        description: "|H^i(G(M/L), mu_{p^k})| formula against norm/difference cohomology, 1 <= k <= n",
        run: mu_cohomology,
    },
    Suite { name: "top-level-acyclic", description: "H^1 = H^2 = 1 for mu_{p^n} over G(M/L)", run: top_level_acyclic },
    Suite {
        name: "descent",
        description: "F*/F*^{p^n} -> (M*/M*^{p^n})^{G(M/F)} is bijective, with the intermediate maps",
        run: descent,
    },
    Suite {
        name: "theta-surjection",
        description: "(L*/L*^{p^n})^(theta) -> (L*/L*^p)^(theta') is surjective",
        run: theta_surjection,
    },
    Suite {
        name: "idempotents",
        description: "e_i orthogonal, summing to 1, with h e_i = gamma_i e_i, for p <= 13, n <= 3, s | p-1",
        run: idempotent_suite,
    },
    Suite {
        name: "relabel",
        description: "(a,b)_z ~ (a^k,b)_{z^k} as an algebra isomorphism for m in {2,3,5}, all k prime to m",
        run: relabel,
    },
    Suite {
        name: "laurent-symbol",
        description: "(x,y)_w over F_4((x))((y)), p = 3, is Type1 with value group <(1/3,0),(0,1/3)>+Z^2",
        run: laurent_symbol,
    },
    Suite {
        name: "mixed-valuations",
        description: "F(p) residue and value group for the two valuations on Q(x,y)(p-th root of 1+x)",
        run: mixed_valuations,
    },
    Suite {
        name: "character-subgroups",
        description: "character-eigen subgroup criterion over all built-in groups of order <= 24, e in {2,3,4,5}",
        run: character_subgroups,
    },
    Suite {
        name: "induction",
        description: "B^(chi) -> A^(chi restricted) bijective for s <= 12, m | s, |A| <= 625, all chi",
        run: induction,
    },
    Suite {
        name: "cohomology-oracle",
        description: "cyclic H^1/H^2 against cocycle enumeration for |G| <= 12, |A| <= 125",
        run: cohomology_oracle,
    },
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES
        .iter()
        .map(|s| s.name)
        .chain(std::iter::once("all"))
        .collect()
}

pub fn find_suite(name: &str) -> Option<&'static Suite> {
    let name = if name == "lemma19" {
        "character-subgroups"
    } else {
        name
    };
    SUITES.iter().find(|s| s.name == name)
}

/// Runs one suite, or all of them for "all".
pub fn run_suite(name: &str) -> Result<Vec<SuiteResult>> {
    if name == "all" {
        return Ok(SUITES.iter().map(Suite::run).collect());
    }
    find_suite(name).map(|s| vec![s.run()]).ok_or_else(|| {
        Error::InvalidInstance(format!(
            "unknown suite {name:?}; known: {}",
            suite_names().join(", ")
        ))
    })
}

pub fn sweep_report(name: &str) -> Result<Report> {
    let results = run_suite(name)?;
    let mut report = Report::new("sweep", json!({ "suite": name }));
    report.outputs = json!({
        "suites": results.iter().map(|r| json!({
            "name": r.name,
            "description": r.description,
            "instances": r.instances,
            "agree": r.instances - r.failures,
        })).collect::<Vec<_>>(),
    });
    report.extend(results.iter().map(SuiteResult::to_check));
    Ok(report)
}

type Outcomes = (Vec<std::result::Result<(), String>>, Value);

fn outcome(ok: bool, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn summary(outcomes: Vec<std::result::Result<(), String>>, extra: Value) -> Outcomes {
    let mut s = json!({ "instances": outcomes.len() });
    if let (Value::Object(m), Value::Object(e)) = (&mut s, extra) {
        m.extend(e);
    }
    (outcomes, s)
}

fn tower_degree() -> Outcomes {
    let out = tower_instances()
        .par_iter()
        .map(|&(q, p, n)| match build_tower(q, p, n) {
            Ok(t) => outcome(t.degree_formula_holds(), || {
                format!(
                    "q={q} p={p} n={n}: formula {} direct {}",
                    t.deg_ml, t.deg_ml_direct
                )
            }),
            Err(e) => Err(format!("q={q} p={p} n={n}: {e}")),
        })
        .collect();
    summary(out, json!({}))
}

fn mu_cohomology() -> Outcomes {
    let out = tower_instances()
        .par_iter()
        .flat_map_iter(|&(q, p, n)| {
            let t = build_tower(q, p, n);
            (1..=n).map(move |k| {
                let t = t.clone().map_err(|e| e.to_string())?;
                let formula = mu_size_formula(p, n, k, t.c).map_err(|e| e.to_string())?;
                let direct = mu_size_direct(&t, k).map_err(|e| e.to_string())?;
                let (h1, h2) = (p.pow(direct.h1_log), p.pow(direct.h2_log));
                outcome(h1 == formula && h2 == formula, || {
                    format!("q={q} p={p} n={n} k={k}: formula {formula}, |H1| = {h1}, |H2| = {h2}")
                })
            })
        })
        .collect();
    summary(out, json!({}))
}

fn top_level_acyclic() -> Outcomes {
    let out = tower_instances()
        .par_iter()
        .map(|&(q, p, n)| {
            let t = build_tower(q, p, n).map_err(|e| e.to_string())?;
            let d = mu_size_direct(&t, n).map_err(|e| e.to_string())?;
            outcome(d.h1_log == 0 && d.h2_log == 0, || {
                format!("q={q} p={p} n={n}: {d:?}")
            })
        })
        .collect();
    summary(out, json!({}))
}

fn descent() -> Outcomes {
    let out = tower_instances()
        .par_iter()
        .map(|&(q, p, n)| {
            let t = build_tower(q, p, n).map_err(|e| e.to_string())?;
            let r = descent_iso_check(&t);
            outcome(r.verified(), || format!("q={q} p={p} n={n}: {r:?}"))
        })
        .collect();
    summary(out, json!({}))
}

fn theta_surjection() -> Outcomes {
    let out = tower_instances()
        .par_iter()
        .map(|&(q, p, n)| {
            let r = cor25_surjectivity(q, p, n).map_err(|e| format!("q={q} p={p} n={n}: {e}"))?;
            outcome(r.surjective, || format!("q={q} p={p} n={n}: {r:?}"))
        })
        .collect();
    summary(out, json!({}))
}

fn idempotent_suite() -> Outcomes {
    let mut cases = Vec::new();
    for &p in &TOWER_PRIMES {
        for n in 1..=3 {
            for s in (1..p).filter(|s| (p - 1) % s == 0) {
                cases.push((p, n, s));
            }
        }
    }
    let out = cases
        .par_iter()
        .map(|&(p, n, s)| {
            let m = Modulus::new(p, n).map_err(|e| e.to_string())?;
            let sys = idempotents(m, s).map_err(|e| e.to_string())?;
            let c = check_idempotents(&sys);
            outcome(c.all() && sys.len() as u64 == s, || {
                format!("p={p} n={n} s={s}: {c:?}")
            })
        })
        .collect();
    summary(out, json!({}))
}

fn relabel_field<K: ExactField>(
    field: &K,
    m: u64,
    a: &K::Elem,
    b: &K::Elem,
) -> Vec<std::result::Result<(), String>> {
    let label = format!("{} m={m}", field.name());
    let Some(zeta) = field.root_of_unity(m) else {
        return vec![Err(format!("{label}: no primitive root of unity"))];
    };
    let alg = match build_symbol(field, m, a, b, &zeta) {
        Ok(a) => a,
        Err(e) => return vec![Err(format!("{label}: {e}"))],
    };
    let mi = m as i64;
    let mut out = vec![outcome(alg.verify().all(), || {
        format!("{label}: symbol relations fail")
    })];
    for k in (-2 * mi..=2 * mi).filter(|k| gcd(k.unsigned_abs(), m) == 1) {
        out.push(match relabel_iso(&alg, k) {
            Ok(r) => outcome(r.verified(), || format!("{label} k={k}: {r:?}")),
            Err(e) => Err(format!("{label} k={k}: {e}")),
        });
    }
    out
}

fn finite_slots(f: &FiniteField) -> (Vec<u64>, Vec<u64>) {
    let a = f.element_from_index(2);
    let b = f.add(&a, &f.one());
    let b = if f.is_zero(&b) { f.mul(&a, &a) } else { b };
    (a, b)
}

fn relabel() -> Outcomes {
    let finite: [(u64, u64, u32); 9] = [
        (2, 3, 1),
        (2, 5, 1),
        (2, 3, 2),
        (3, 2, 2),
        (3, 7, 1),
        (3, 13, 1),
        (5, 11, 1),
        (5, 2, 4),
        (5, 31, 1),
    ];
    let mut out = Vec::new();
    for m in [2u64, 3, 5] {
        let k = match CyclotomicField::new(m) {
            Ok(k) => k,
            Err(e) => {
                out.push(Err(format!("Q(zeta_{m}): {e}")));
                continue;
            }
        };
        let zeta = k.generator();
        out.extend(relabel_field(
            &k,
            m,
            &k.from_i64(2),
            &k.add(&zeta, &k.from_i64(3)),
        ));
    }
    let finite_out: Vec<_> = finite
        .par_iter()
        .flat_map_iter(|&(m, ell, d)| match FiniteField::new(ell, d) {
            Ok(f) => {
                let (a, b) = finite_slots(&f);
                relabel_field(&f, m, &a, &b)
            }
            Err(e) => vec![Err(format!("F_{ell}^{d}: {e}"))],
        })
        .collect();
    out.extend(finite_out);
    summary(
        out,
        json!({ "finite_fields": finite.iter().map(|&(m, l, d)| format!("m={m} F_{l}^{d}")).collect::<Vec<_>>() }),
    )
}

fn laurent_symbol() -> Outcomes {
    let run = || -> Result<Vec<std::result::Result<(), String>>> {
        let f = FiniteField::new(2, 2)?;
        let p = 3;
        let x = LaurentElement::monomial(&f, &[1, 0], f.one());
        let y = LaurentElement::monomial(&f, &[0, 1], f.one());
        let expected = LexValueGroup::lattice(2, p)?
            .adjoin(&[1, 0])
            .adjoin(&[0, 1]);
        // Multiplying a slot by a p-th power leaves the class, and the verdict, unchanged.
        let one_plus_y = LaurentElement::constant(&f, 2, f.one()).add(&f, &y);
        let cube = one_plus_y.pow(&f, 3);
        let g = LaurentElement::monomial(&f, &[0, 0], f.generator());
        let slots = vec![
            ("(x, y)", x.clone(), y.clone()),
            ("(x (1+y)^3, y)", x.mul(&f, &cube), y.clone()),
            (
                "(x, y x^3 g^3)",
                x.clone(),
                y.mul(&f, &x.pow(&f, 3)).mul(&f, &g.pow(&f, 3)),
            ),
        ];
        let mut out = Vec::new();
        for (name, a, b) in slots {
            let r = symbol_division_test(&f, p, &a, &b)?;
            let vg = r.value_group.clone();
            out.push(outcome(
                r.classification == DivisionType::Type1
                    && r.division == Some(true)
                    && r.residue == Some(Residue::Finite { ell: 2, degree: 2 })
                    && vg.as_ref().is_some_and(|g| {
                        g.render() == "<(1/3,0),(0,1/3)>+Z^2"
                            && g.index_over_lattice() == Some(p * p)
                            && expected.index_over_lattice() == g.index_over_lattice()
                    }),
                || format!("{name}: {r:?}"),
            ));
        }
        Ok(out)
    };
    match run() {
        Ok(out) => summary(
            out,
            json!({ "value_group": "<(1/3,0),(0,1/3)>+Z^2", "index": 9 }),
        ),
        Err(e) => summary(vec![Err(e.to_string())], json!({})),
    }
}

fn mixed_valuations() -> Outcomes {
    let mut out = Vec::new();
    for p in [3u64, 5, 7] {
        let (v1, v2) = mixed_example_descriptors(p);
        let expected = [
            ("V1", &v1, format!("Q({p})"), LexValueGroup::lattice(2, p)),
            (
                "V2",
                &v2,
                format!("Q(mu_{p})({p})"),
                LexValueGroup::with_prefix(2, p, 1),
            ),
        ];
        for (name, desc, label, group) in expected {
            out.push(match (predict_fp_extension(desc, p), group) {
                (Ok(r), Ok(g)) => outcome(r.residue_label == label && r.value_group == g, || {
                    format!(
                        "p={p} {name}: got ({}, {})",
                        r.residue_label,
                        r.value_group.render()
                    )
                }),
                (Err(e), _) | (_, Err(e)) => Err(format!("p={p} {name}: {e}")),
            });
        }
    }
    summary(
        out,
        json!({ "rows": ["(Q(p), ZxZ)", "(Q(mu_p)(p), Z[1/p]xZ)"] }),
    )
}

fn character_subgroups() -> Outcomes {
    let groups = catalog_upto_24();
    let sweeps: Vec<_> = groups
        .par_iter()
        .map(|g| sweep_character_subgroups(g, &[2, 3, 4, 5]))
        .collect();
    let mut out = Vec::new();
    let mut lhs_true = 0;
    for s in &sweeps {
        lhs_true += s.lhs_true;
        out.extend(std::iter::repeat_n(Ok(()), s.agreements));
        out.extend(
            s.disagreements
                .iter()
                .map(|d| Err(format!("{}: {d}", s.group))),
        );
    }
    summary(out, json!({ "groups": groups.len(), "lhs_true": lhs_true }))
}

fn induction() -> Outcomes {
    const PRIMES: [u64; 9] = [3, 5, 7, 11, 13, 17, 19, 23, 29];
    let mut jobs = Vec::new();
    for p in PRIMES {
        for s in (1..=12u64).filter(|s| (p - 1) % s == 0) {
            for m in (1..=s).filter(|m| s % m == 0) {
                jobs.push((p, s, m));
            }
        }
    }
    let mut cache = HashMap::new();
    for &(p, s, m) in &jobs {
        cache
            .entry((p, s / m))
            .or_insert_with(|| modules_of_order_dividing(p, 625, s / m));
    }
    let modules: usize = cache.values().map(Vec::len).sum();
    let out: Vec<_> = jobs
        .par_iter()
        .flat_map_iter(|&(p, s, m)| {
            let mods = &cache[&(p, s / m)];
            mods.iter().flat_map(move |a| {
                let chars = enumerate_characters(a.modulus, s).unwrap_or_default();
                chars
                    .into_iter()
                    .map(move |chi| match induce_and_project(a, s, m, chi.gamma) {
                        Ok(w) => outcome(w.bijective(), || {
                            format!(
                                "p={p} s={s} m={m} A={:?} gamma={}: {w:?}",
                                a.cyclic_parts, chi.gamma
                            )
                        }),
                        Err(e) => Err(format!("p={p} s={s} m={m}: {e}")),
                    })
            })
        })
        .collect();
    summary(out, json!({ "module_action_pairs": modules }))
}

fn cohomology_oracle() -> Outcomes {
    let mut jobs = Vec::new();
    for p in odd_primes_upto(125) {
        for n in 1..=12u64 {
            jobs.extend(module_classes_of_order_dividing(p, 125, n));
        }
    }
    let out = jobs
        .par_iter()
        .flat_map_iter(|a| {
            let n = a.acting_order;
            let act = CyclicGroupAction::new(a.clone());
            (1..=2u32).map(move |i| {
                let label = || {
                    format!(
                        "N={n} p={} A={:?} T={:?} H^{i}",
                        a.modulus.p, a.cyclic_parts, a.action
                    )
                };
                let gm = to_gmodule(a, n, &a.action).map_err(|e| format!("{}: {e}", label()))?;
                let brute = brute_cohomology(&gm, i).map_err(|e| format!("{}: {e}", label()))?;
                let cyc = h_i(&act, i).map_err(|e| format!("{}: {e}", label()))?;
                let (mut x, mut y) = (brute.invariants.clone(), cyc.invariants.clone());
                x.sort_unstable();
                y.sort_unstable();
                x.retain(|&e| e > 0);
                y.retain(|&e| e > 0);
                outcome(x == y, || format!("{}: brute {x:?} cyclic {y:?}", label()))
            })
        })
        .collect();
    summary(out, json!({}))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry() {
        assert_eq!(SUITES.len(), 12);
        assert!(find_suite("lemma19").is_some());
        assert!(run_suite("nope").is_err());
        assert!(suite_names().contains(&"all"));
    }

    #[test]
    fn small_suites_pass() {
        for name in ["laurent-symbol", "mixed-valuations", "idempotents"] {
            let r = &run_suite(name).unwrap()[0];
            assert!(r.passed(), "{name}: {:?}", r.failure_samples);
        }
    }
}
