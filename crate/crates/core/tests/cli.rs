use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn wha(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wha"))
        .current_dir(dir)
        .env_remove("WHA_SEED")
        .args(args)
        .output()
        .expect("spawn wha")
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let out = wha(dir, args);
    assert!(
        out.status.success(),
        "wha {args:?} exited {:?}\n{}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(dir: &Path, args: &[&str]) -> Value {
    let mut v = args.to_vec();
    v.push("--json");
    serde_json::from_str(&ok(dir, &v)).unwrap()
}

fn num(v: &Value) -> f64 {
    match v {
        Value::String(s) => s.parse().unwrap(),
        other => other.as_f64().unwrap(),
    }
}

fn read(p: PathBuf) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn build_pair_group_and_dual() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    ok(d, &["build", "pair", "2", "-o", "pair2.json"]);
    assert_eq!(read(d.join("pair2.json"))["dim"], 4);
    ok(d, &["build", "group", "S3", "-o", "s3.json"]);
    assert_eq!(read(d.join("s3.json"))["dim"], 6);
    ok(d, &["build", "dual", "pair2.json", "-o", "pair2d.json"]);
    let dual = read(d.join("pair2d.json"));
    assert_eq!(dual["dim"], 4);
    assert_eq!(dual["label"], "dual(pair(2))");
    ok(d, &["build", "direct-sum", "pair2.json", "s3.json", "-o", "sum.json"]);
    assert_eq!(read(d.join("sum.json"))["dim"], 10);
    ok(d, &["build", "groupoid", "2", "Z2", "-o", "gpd.json"]);
    assert_eq!(read(d.join("gpd.json"))["dim"], 8);
}

#[test]
fn report_dims_oracles() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    ok(d, &["build", "pair", "2", "-o", "pair2.json"]);
    ok(d, &["build", "group", "S3", "-o", "s3.json"]);
    ok(d, &["build", "groupoid", "2", "Z2", "-o", "gpd.json"]);

    let r = json(d, &["report", "dims", "pair2.json"]);
    assert_eq!(r["d"], 2);
    assert!((num(&r["dimA"]) - 1.0).abs() < 1e-8);
    assert!((num(&r["FPdimA"]) - 1.0).abs() < 1e-8);
    assert!((num(&r["mu"]) - 2.0).abs() < 1e-8);

    let r = json(d, &["report", "dims", "s3.json"]);
    assert!((num(&r["dimA"]) - 6.0).abs() < 1e-8);
    assert!((num(&r["FPdimA"]) - 6.0).abs() < 1e-8);

    let r = json(d, &["report", "dims", "gpd.json"]);
    assert!((num(&r["dimA"]) - 2.0).abs() < 1e-8);
    assert_eq!(r["Lambda"], serde_json::json!([[1, 1], [1, 1]]));
    assert_eq!(r["pseudo_unitary"], true);
}

#[test]
fn report_kinds() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    ok(d, &["build", "group", "S3", "-o", "s3.json"]);
    let full = json(d, &["report", "s3.json"]);
    assert_eq!(full["dim"], 6);
    assert_eq!(full["hopf"], true);
    let f = json(d, &["report", "fusion", "s3.json"]);
    assert_eq!(f["fusion"]["rank"], 3);
    let bad = wha(d, &["report", "bogus", "s3.json"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn check_all_passes_and_is_deterministic() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    ok(d, &["build", "pair", "2", "-o", "pair2.json"]);
    ok(d, &["build", "group", "S3", "-o", "s3.json"]);
    for f in ["pair2.json", "s3.json"] {
        let text = ok(d, &["check-all", f]);
        assert!(text.contains("result: pass"), "{text}");
        let a = ok(d, &["check-all", f, "--json", "--seed", "7"]);
        let b = ok(d, &["check-all", f, "--json", "--seed", "7"]);
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["seed"], 7);
    }
}

#[test]
fn seed_from_env_and_hex() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    ok(d, &["build", "pair", "2", "-o", "pair2.json"]);
    let out = Command::new(env!("CARGO_BIN_EXE_wha"))
        .current_dir(d)
        .env("WHA_SEED", "0x2a")
        .args(["check-all", "pair2.json", "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 42);
    let bad = wha(d, &["check-all", "pair2.json", "--seed", "zz"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn corrupted_file_names_first_failure() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    ok(d, &["build", "pair", "2", "-o", "pair2.json"]);
    let mut v = read(d.join("pair2.json"));
    v["mult"][0][0][0] = Value::String("2".into());
    std::fs::write(d.join("bad.json"), v.to_string()).unwrap();
    let out = wha(d, &["check-all", "bad.json"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("first failure: verify_axioms"), "{text}");
}

#[test]
fn input_errors_exit_2() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    std::fs::write(d.join("trunc.json"), "{\"dim\": 1").unwrap();
    assert_eq!(wha(d, &["check-all", "trunc.json"]).status.code(), Some(2));
    assert_eq!(wha(d, &["check-all", "missing.json"]).status.code(), Some(2));
    assert_eq!(wha(d, &["build", "pair", "0"]).status.code(), Some(2));
    assert_eq!(wha(d, &["build", "group", "Q8"]).status.code(), Some(2));
    assert_eq!(wha(d, &["--tol-eig", "-1", "build", "pair", "2"]).status.code(), Some(2));
    assert_eq!(wha(d, &["--dim-cap", "3", "build", "pair", "2"]).status.code(), Some(2));
}

#[test]
fn class_equation_table() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    ok(d, &["build", "group", "Z2", "-o", "z2.json"]);
    let v = json(d, &["class-equation", "z2.json"]);
    let ns: Vec<f64> = v["terms"].as_array().unwrap().iter().map(|t| num(&t["n"])).collect();
    assert_eq!(ns, vec![1.0, 1.0]);
    assert!(ok(d, &["class-equation", "z2.json"]).contains("sum holds: true"));
}

#[test]
fn modalg_module_mode() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    ok(d, &["build", "fixture", "dual-numbers", "--algebra-out", "z2.json", "-o", "m.json"]);
    let v = json(d, &["modalg", "z2.json", "m.json", "--mode", "module"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["radical_stability"]["equal"], true);
    assert_eq!(v["radical_dim"], 1);
}

#[test]
fn modalg_comodule_orbits() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    for (name, expect) in [("cosets(S3,3)", 3.0), ("subgroup(S3,3)", 2.0)] {
        ok(d, &["build", "fixture", name, "--algebra-out", "a.json", "-o", "m.json"]);
        let v = json(d, &["modalg", "a.json", "m.json", "--mode", "comodule"]);
        assert_eq!(v["passed"], true, "{name}");
        for r in v["orbit"]["ratios"].as_array().unwrap().iter().flat_map(|r| r.as_array().unwrap()) {
            assert!((num(r) - expect).abs() < 1e-8, "{name}");
        }
    }
}

#[test]
fn modalg_wrong_mode_is_input_error() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    ok(d, &["build", "fixture", "dual-numbers", "--algebra-out", "z2.json", "-o", "m.json"]);
    let out = wha(d, &["modalg", "z2.json", "m.json", "--mode", "comodule"]);
    assert_eq!(out.status.code(), Some(2));
}
