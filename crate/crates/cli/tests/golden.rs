//! Golden-file tests: byte-identical CLI output across runs and
//! refactors for the fixture corpus.

use std::path::PathBuf;
use std::process::Command;

fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_vasquez")
}

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

struct Run {
    stdout: Vec<u8>,
    code: i32,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(binary())
        .current_dir(fixtures_dir())
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        stdout: out.stdout,
        code: out.status.code().unwrap_or(-1),
    }
}

fn check_golden(name: &str, args: &[&str], expected_code: i32) {
    let first = run(args);
    assert_eq!(first.code, expected_code, "exit code for {name}");
    // determinism: identical bytes on a second run
    let second = run(args);
    assert_eq!(first.stdout, second.stdout, "two runs differ for {name}");

    let path = golden_dir().join(format!("{name}.json"));
    if std::env::var("UPDATE_GOLDEN").is_ok() {
        std::fs::write(&path, &first.stdout).unwrap();
        return;
    }
    let expected = std::fs::read(&path)
        .unwrap_or_else(|_| panic!("missing golden file {path:?}; run with UPDATE_GOLDEN=1"));
    assert_eq!(
        String::from_utf8_lossy(&first.stdout),
        String::from_utf8_lossy(&expected),
        "golden mismatch for {name}"
    );
}

#[test]
fn golden_check_klein_bottle() {
    check_golden("check_klein_bottle", &["check", "klein_bottle.json"], 0);
}

#[test]
fn golden_check_not_special() {
    check_golden("check_not_special", &["check", "c2_nonspecial.json"], 1);
}

#[test]
fn golden_check_torus() {
    check_golden("check_torus", &["check", "torus2.json"], 0);
}

#[test]
fn golden_reduce_dim6() {
    check_golden("reduce_dim6", &["reduce", "c2_dim6.json"], 0);
}

#[test]
fn golden_reduce_dim6_complex() {
    check_golden(
        "reduce_dim6_complex",
        &["reduce", "--complex", "c2_dim6.json"],
        0,
    );
}

#[test]
fn golden_reduce_hantzsche_wendt() {
    check_golden("reduce_hw", &["reduce", "hantzsche_wendt.json"], 0);
}

#[test]
fn golden_reduce_s3() {
    check_golden("reduce_s3", &["reduce", "s3_dim4.json"], 0);
}

#[test]
fn golden_chartab_q8() {
    check_golden(
        "chartab_q8",
        &["chartab", r#"{"family":"quaternion8"}"#],
        0,
    );
}

#[test]
fn golden_bounds_klein() {
    check_golden(
        "bounds_klein",
        &["bounds", r#"{"family":"elementary_abelian","p":2,"rank":2}"#],
        0,
    );
}

#[test]
fn golden_bounds_a4() {
    check_golden("bounds_a4", &["bounds", r#"{"family":"alternating","n":4}"#], 0);
}

#[test]
fn golden_ec_test_dim6() {
    check_golden("ec_dim6", &["ec-test", "c2_dim6.json"], 0);
}

#[test]
fn golden_ec_test_hw_fails() {
    check_golden("ec_hw", &["ec-test", "hantzsche_wendt.json"], 1);
}

#[test]
fn golden_cstruct_verify() {
    check_golden(
        "cstruct_verify",
        &["cstruct", "verify", "c2_dim6.json", "c2_dim6_structure.json"],
        0,
    );
}

#[test]
fn golden_cstruct_invariant() {
    check_golden(
        "cstruct_invariant",
        &[
            "cstruct",
            "invariant",
            "c2_dim6.json",
            "c2_dim6_structure.json",
            "c2_dim6_sublattice.json",
        ],
        1,
    );
}

#[test]
fn golden_cstruct_adapt() {
    check_golden(
        "cstruct_adapt",
        &[
            "cstruct",
            "adapt",
            "c2_dim6.json",
            "c2_dim6_structure.json",
            "c2_dim6_sublattice.json",
        ],
        0,
    );
}

#[test]
fn golden_cstruct_hodge_equal_self() {
    check_golden(
        "cstruct_hodge_self",
        &[
            "cstruct",
            "hodge-equal",
            "c2_dim6.json",
            "c2_dim6_structure.json",
            "c2_dim6_structure.json",
        ],
        0,
    );
}

#[test]
fn fixture_corpus_loads_and_validates() {
    // every fixture datum parses and validates; annotated outcomes hold
    let expectations = [
        ("torus2.json", 0),
        ("klein_bottle.json", 0),
        ("c2_nonspecial.json", 1),
        ("c2_dim6.json", 0),
        ("hantzsche_wendt.json", 0),
        ("s3_dim4.json", 0),
        ("c3_dim3.json", 0),
        ("c3c3_dim6.json", 0),
    ];
    for (fixture, expected) in expectations {
        let r = run(&["check", fixture]);
        assert_eq!(r.code, expected, "fixture {fixture}");
    }
}

#[test]
fn golden_cstruct_adapt_hexagonal() {
    check_golden(
        "cstruct_adapt_hex",
        &[
            "cstruct",
            "adapt",
            "c3_hex_dim4.json",
            "c3_hex_dim4_structure.json",
            "c3_hex_dim4_sublattice.json",
        ],
        0,
    );
}

#[test]
fn rational_field_policy_exits_with_code_three() {
    let r = run(&[
        "cstruct",
        "adapt",
        "--field-policy",
        "rational",
        "c3_hex_dim4.json",
        "c3_hex_dim4_structure.json",
        "c3_hex_dim4_sublattice.json",
    ]);
    assert_eq!(r.code, 3);
}

#[test]
fn invalid_input_exits_with_code_two() {
    let r = run(&["check", r#"{"dimension":2,"generators":[{"matrix":[[1,0],[0,1]],"translation":["1/2","0"]}]}"#]);
    assert_eq!(r.code, 2);
    let r = run(&["check", "no_such_file.json"]);
    assert_eq!(r.code, 2);
}
