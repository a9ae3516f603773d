//! Runs every example binary that `cargo test` builds alongside the tests.
use std::path::PathBuf;
use std::process::Command;

const EXAMPLES: &[&str] = &[
    "weight_diagrams",
    "irreducible_characters",
    "denominator",
    "ds_euler",
    "ds_simple",
    "block_graph",
    "translation",
    "kac_wakimoto",
    "pr_identity",
    "selftest",
];

fn examples_dir() -> PathBuf {
    // target/<profile>/deps/<this test> -> target/<profile>/examples
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().join("examples")
}

#[test]
fn all_examples_run() {
    let dir = examples_dir();
    for name in EXAMPLES {
        let path = dir.join(format!("{name}{}", std::env::consts::EXE_SUFFIX));
        assert!(path.exists(), "{} not built", path.display());
        let out = Command::new(&path).output().unwrap();
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stdout.is_empty(), "{name} printed nothing");
    }
}

#[test]
fn example_outputs_are_consistent() {
    let run = |n: &str| String::from_utf8(Command::new(examples_dir().join(n)).output().unwrap().stdout).unwrap();
    assert!(!run("ds_euler").contains("oracle agrees: false"));
    assert!(!run("denominator").contains("false"));
    assert!(run("pr_identity").contains("406 of 406"));
}
