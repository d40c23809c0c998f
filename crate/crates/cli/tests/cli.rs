use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn kummer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kummer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let out = kummer(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn check(r: &Value, name: &str) -> bool {
    r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check {name}"))["pass"]
        == true
}

fn descriptor(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../descriptors");
    root.join(name).to_string_lossy().into_owned()
}

#[test]
fn tower_over_f7() {
    let r = report(&["tower", "--q", "7", "--p", "3", "--n", "2"]);
    assert_eq!(r["outputs"]["s"], 1);
    assert_eq!(r["outputs"]["deg_ml"], 3);
    for c in [
        "degree_formula",
        "mu_cohomology",
        "top_level_acyclic",
        "descent",
        "theta_surjection",
    ] {
        assert!(check(&r, c), "{c}");
    }
}

#[test]
fn cohomology_of_trivial_z9() {
    let r = report(&["cohom", "--N", "3", "--module", "9", "--action", "1"]);
    assert_eq!(r["outputs"]["h1"], serde_json::json!([1]));
    assert_eq!(r["outputs"]["h2"], serde_json::json!([1]));
    assert!(check(&r, "oracle_h1") && check(&r, "oracle_h2"));
}

#[test]
fn eigen_with_negative_entries() {
    let r = report(&[
        "eigen", "--module", "5,5", "--action", "2,0;0,-1", "--s", "4",
    ]);
    let comps = r["outputs"]["components"].as_array().unwrap();
    let nonzero: Vec<_> = comps
        .iter()
        .filter(|c| !c["invariants"].as_array().unwrap().is_empty())
        .map(|c| c["gamma"].as_u64().unwrap())
        .collect();
    assert_eq!(nonzero, [2, 4]);
}

#[test]
fn symbol_over_finite_and_cyclotomic_fields() {
    let r = report(&[
        "symbol", "--field", "F_2^2", "--m", "3", "--a", "0,1", "--b", "1,1", "--k", "-1,2",
    ]);
    assert!(check(&r, "relabel_k-1") && check(&r, "relabel_k2"));
    let r = report(&[
        "symbol", "--field", "Q", "--m", "3", "--a", "2", "--b", "3,1",
    ]);
    assert_eq!(r["outputs"]["dimension"], 9);
}

#[test]
fn descriptor_files() {
    let r = report(&["valuation", "--descriptor", &descriptor("f4_laurent.kv")]);
    assert_eq!(
        r["outputs"]["fp_prediction"]["value_group_rendered"],
        "Z[1/3]xZ[1/3]"
    );
    assert_eq!(r["outputs"]["symbol"]["test"]["classification"], "Type1");
    let r = report(&["valuation", "--descriptor", &descriptor("mixed_v1.kv")]);
    assert_eq!(r["outputs"]["fp_prediction"]["value_group_rendered"], "ZxZ");
    let r = report(&["valuation", "--descriptor", &descriptor("mixed_v2.kv")]);
    assert_eq!(
        r["outputs"]["fp_prediction"]["value_group_rendered"],
        "Z[1/3]xZ"
    );
    let r = report(&["valuation", "--descriptor", &descriptor("f2_tower.kv")]);
    assert!(check(&r, "ell_invariant"));
}

#[test]
fn oracle_on_one_group() {
    let r = report(&["oracle", "--group", "S3", "--p", "3", "--s", "2"]);
    assert!(check(&r, "character_subgroups") && check(&r, "sylow_criteria_S3"));
}

#[test]
fn sweep_suite() {
    let r = report(&["sweep", "--suite", "lemma19"]);
    assert_eq!(r["checks"][0]["name"], "character-subgroups");
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        &["tower", "--q", "9", "--p", "3", "--n", "2"][..],
        &["cohom", "--N", "3", "--module", "6", "--action", "1"],
        &["eigen", "--module", "5", "--action", "1,0;0,1", "--s", "4"],
        &["sweep", "--suite", "nope"],
        &[
            "symbol", "--field", "F_7", "--m", "5", "--a", "2", "--b", "3",
        ],
        &["valuation", "--descriptor", "/nonexistent.kv"],
        &["tower", "--q", "7"],
    ] {
        let out = kummer(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn bad_thread_count_exits_2() {
    let out = Command::new(env!("CARGO_BIN_EXE_kummer"))
        .args(["tower", "--q", "7", "--p", "3", "--n", "1"])
        .env("KUMMER_THREADS", "abc")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["oracle", "--group", "D10", "--p", "5", "--s", "2"];
    let first = kummer(&args).stdout;
    let second = Command::new(env!("CARGO_BIN_EXE_kummer"))
        .args(args)
        .env("KUMMER_THREADS", "2")
        .output()
        .unwrap()
        .stdout;
    assert!(!first.is_empty());
    assert_eq!(first, second);
}
