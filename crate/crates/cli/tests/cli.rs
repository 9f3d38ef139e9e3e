//! End-to-end tests of the binary: golden output and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .env_remove("SCHUBERT_OUTPUT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn trace_golden() {
    let out = run(&[
        "trace",
        "--rect",
        "5x5",
        "--tableau",
        "..X11/..122/..3/..4/23",
    ]);
    assert!(out.status.success());
    let expected = "\
..X11/..122/..3/..4/23
  --Vert_1 (1,3)->(2,3)-->
..111/..X22/..3/..4/23
  --Pieri_2 (2,3)->(5,1)-->
..111/..222/..3/..4/X3
  --Horiz_3 (5,1)->(5,2)-->
..111/..222/..3/..4/3X
  --CPieri_4 (5,2)->(4,3)-->
..111/..222/..3/..X/34
transition step: 3
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn orbits_golden() {
    let out = run(&[
        "orbits", "--alpha", "2,2,1", "--beta", "3,1,1", "--gamma", "3,2", "--rect", "4x4",
    ]);
    assert!(out.status.success());
    let expected = "\
alpha=2,2,1 beta=3,1,1 gamma=3,2 rect=4x4
orbit   size     K1     K2
    1      1      0      0
    2      1      0      0
lr_count=2 k_count=0 chi=2 eta=2 sign=0 rlength_bound=0
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn omega_is_an_alias_for_orbits() {
    let orbits = run(&[
        "orbits", "--alpha", "2,2,1", "--beta", "3,1,1", "--gamma", "3,2", "--rect", "4x4",
    ]);
    let omega = run(&[
        "omega", "--alpha", "2,2,1", "--beta", "3,1,1", "--gamma", "3,2", "--rect", "4x4",
    ]);
    assert_eq!(stdout(&orbits), stdout(&omega));
}

#[test]
fn structured_output_carries_schema() {
    let out = run(&[
        "orbits", "--alpha", "2,2,1", "--beta", "3,1,1", "--gamma", "3,2", "--rect", "4x4",
        "--output", "structured",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["command"], "orbits");
    assert_eq!(doc["lr_count"], 2);
    assert_eq!(doc["instance"]["alpha"], "2,2,1");
    assert_eq!(doc["orbits"].as_array().unwrap().len(), 2);
}

#[test]
fn output_env_variable_sets_the_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(["chains", "--alpha", "-", "--beta", "1", "--gamma", "-", "--rect", "1x2"])
        .env("SCHUBERT_OUTPUT", "structured")
        .output()
        .unwrap();
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["before"][0], "X1");
    assert_eq!(doc["after"][0], "1X");
}

#[test]
fn chains_golden() {
    let out = run(&[
        "chains", "--alpha", "-", "--beta", "1", "--gamma", "-", "--rect", "1x2",
    ]);
    assert!(out.status.success());
    let expected = "\
LR(alpha, box, beta, gamma): 1 elements
X1
LR(alpha, beta, box, gamma): 1 elements
1X
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn esh_agreement_exit_codes() {
    let single = run(&["esh", "--rect", "3x5", "--tableau", "..X11/.11/1"]);
    assert_eq!(single.status.code(), Some(0));
    assert!(stdout(&single).contains("agree: true"));

    let fiber = run(&[
        "esh", "--alpha", "2,2,1", "--beta", "3,1,1", "--gamma", "3,2", "--rect", "4x4",
    ]);
    assert_eq!(fiber.status.code(), Some(0));
    assert!(stdout(&fiber).contains("checked 2 elements, 0 disagreements"));
}

#[test]
fn genomic_grouped_by_extra_entry() {
    let out = run(&[
        "genomic", "--alpha", "1", "--beta", "2,1", "--gamma", "2,1,1", "--rect", "3x3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("K(gamma^c/alpha; beta):"));
    // every group header names its extra entry
    for line in text.lines().skip(1) {
        assert!(line.starts_with("extra entry") || line.contains('[') || line.contains('.'));
    }
}

#[test]
fn family_golden() {
    let out = run(&["family", "components", "--t", "2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "components t=2: omega = identity on 1 element; K = empty\n"
    );

    let out = run(&["family", "staircase", "--t", "3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "staircase t=3: one orbit on 12 elements; k_count=13; chi=-1 (genus 2)\n"
    );
}

#[test]
fn verify_single_instance() {
    let out = run(&[
        "verify", "--alpha", "2,2,1", "--beta", "3,1,1", "--gamma", "3,2", "--rect", "4x4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("route-agreement=ok"));
    assert!(text.contains("orbit-bound violations: 0"));
}

#[test]
fn verify_sweep_is_deterministic() {
    let a = run(&["verify", "--rect", "3x3", "--sweep", "4", "--seed", "9"]);
    let b = run(&["verify", "--rect", "3x3", "--sweep", "4", "--seed", "9"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["nonsense"]).status.code(), Some(1));
    assert_eq!(
        run(&["orbits", "--alpha", "2,x", "--beta", "1", "--gamma", "-", "--rect", "2x2"])
            .status
            .code(),
        Some(1)
    );
    // size equation violated
    assert_eq!(
        run(&["orbits", "--alpha", "1", "--beta", "1", "--gamma", "-", "--rect", "2x2"])
            .status
            .code(),
        Some(1)
    );
    // missing either form of the esh arguments
    assert_eq!(run(&["esh", "--rect", "2x2"]).status.code(), Some(1));
}

#[test]
fn limit_guard_refuses_large_runs() {
    let out = run(&[
        "chains", "--alpha", "-", "--beta", "1", "--gamma", "-", "--rect", "1x2", "--limit", "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
}
