use serde_json::Value;
use std::process::Command;
use superchar::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("superchar").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "v1");
    v
}

#[test]
fn rho_of_gl33_renders_three_crosses() {
    let (code, out, _) = call(&["diagram", "gl:3,3", "--weight", "0,0,0/0,0,0"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["diagram", "×××"]), "{out}");
    let v = json(&["diagram", "gl:3,3", "--weight", "0,0,0/0,0,0", "--format", "json"]);
    assert_eq!(v["rendered"], "×××");
    assert_eq!(v["invariants"]["is_kostant"], true);
}

#[test]
fn char_in_euler_basis() {
    // (s;1) with s = 0, in this crate's coordinates
    let v = json(&["char", "gl:2,2", "--weight", "1,0|0,-1", "--basis", "euler", "--format", "json"]);
    assert_eq!(v["euler"].as_array().unwrap().len(), 3);
    assert_eq!(v["sdim"], "2");
    assert!(v.get("g0").is_none());
    let v = json(&["char", "gl:2,2", "--weight", "0×∘×", "--format", "json"]);
    assert_eq!(v["dim"], "14");
    assert_eq!(v["g0"].as_array().unwrap().len(), 4);
}

#[test]
fn ds_json_shape() {
    let v = json(&["ds", "gl:3,3", "--weight", "1,0,0/0,0,-1", "--rank", "2", "--format", "json"]);
    for k in ["target", "terms", "sigma_pair", "parity_shift"] {
        assert!(v.get(k).is_some(), "{k}");
    }
    assert_eq!(v["terms"][0]["kind"], "kac");
    assert_eq!(v["target"]["name"], "gl(1|1)");
    let v = json(&["ds", "gl:2,2", "--weight", "1,0/0,-1", "--simple", "--format", "json"]);
    assert_eq!(v["simple"]["mult"], 2);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["diagram", "gl:2", "--weight", "0"]).0, 2);
    assert_eq!(call(&["diagram", "gl:2,2", "--weight", "1,2|0"]).0, 2);
    assert_eq!(call(&["diagram", "gl:2,2", "--weight", "×?"]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["diagram", "gl:2,2", "--weight", "0,1|0,0"]).0, 3);
    assert_eq!(call(&["ds", "gl:2,2", "--weight", "0,0|0,0", "--rank", "3"]).0, 3);
    let (code, _, err) = call(&["char", "ospO:1,1", "--weight", "1|0"]);
    assert_eq!(code, 4);
    assert!(err.contains("osp"), "{err}");
    assert_eq!(call(&["ds", "ospE:2,2", "--weight", "0,2", "--simple"]).0, 4);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn graph_formats_and_determinism() {
    let args = ["graph", "gl:2,2", "--seed", "0,0/0,0", "--max-norm-gr", "2", "--no-cache", "--format", "dot"];
    let (c1, a, _) = call(&args);
    let (c2, b, _) = call(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    assert!(a.starts_with("digraph"));
    let v = json(&["graph", "gl:2,2", "--seed", "0,0/0,0", "--max-norm-gr", "2", "--no-cache", "--format", "json"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 7);
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
    assert_eq!(call(&["graph", "ospE:2,2", "--seed", "0,0/0,0", "--no-cache"]).0, 4);
    assert_eq!(call(&["graph", "gl:2,2", "--seed", "0,0/0,0", "--max-norm-gr", "-1"]).0, 2);
}

#[test]
fn denom_check() {
    let v = json(&["denom-check", "ospO:2,2", "--format", "json"]);
    assert_eq!(v["ok"], true);
    assert_eq!(v["reversed_ok"], true);
}

#[test]
fn binary_uses_cache_dir() {
    let dir = std::env::temp_dir().join(format!("superchar-cache-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let bin = env!("CARGO_BIN_EXE_superchar");
    let args = ["graph", "gl:2,2", "--seed", "0,0/0,0", "--format", "json"];
    let first = Command::new(bin).args(args).env("SUPERCHAR_CACHE_DIR", &dir).output().unwrap();
    assert!(first.status.success());
    assert_eq!(std::fs::read_dir(&dir).unwrap().count(), 1);
    let second = Command::new(bin).args(args).env("SUPERCHAR_CACHE_DIR", &dir).output().unwrap();
    assert_eq!(first.stdout, second.stdout);
    let bypass = Command::new(bin).args(args).arg("--no-cache").env("SUPERCHAR_CACHE_DIR", dir.join("x")).output().unwrap();
    assert_eq!(first.stdout, bypass.stdout);
    assert!(!dir.join("x").exists());
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn selftest_reports_twelve_lines() {
    let (code, out, _) = call(&["selftest"]);
    assert_eq!(out.lines().count(), 12);
    assert!(out.lines().all(|l| l.starts_with("PASS") || l.starts_with("FAIL")));
    // criterion 8 is a recorded failure, so the suite cannot exit 0
    assert_eq!(code, 1);
    let (code, out, _) = call(&["selftest", "--only", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS [ 3]"));
}
