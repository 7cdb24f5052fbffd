//! End-to-end tests of the `totalpos` binary: spawn it, pin stdout/stderr
//! fragments and exit codes. Fixtures are built with the library so the
//! expected values come from the same exact arithmetic the claims use.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, Output};

use totalpos::catalog::{case_matrices, CaseMatrix};
use totalpos::exact::Rat;
use totalpos::matrix::Matrix;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_totalpos"));
    // keep runs hermetic even if the test environment sets a ceiling
    c.env_remove("TOTALPOS_BITS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn assert_contains(haystack: &str, needle: &str) {
    assert!(haystack.contains(needle), "expected {needle:?} in:\n{haystack}");
}

fn fixture(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("totalpos-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn catalog_matrix(id: &str, name: &str) -> Matrix<Rat> {
    match case_matrices(id, &BTreeMap::new()).unwrap().remove(name) {
        Some(CaseMatrix::Rational(m)) => m,
        _ => panic!("missing rational matrix {id}.{name}"),
    }
}

const MOMENT_3X3: &str = "2 3 5\n3 5 9\n5 9 17\n";

#[test]
fn classify_auto_uses_hankel_on_moment_matrix() {
    let input = fixture("moment.txt", MOMENT_3X3);
    let out = run(&["classify", "--input", input.to_str().unwrap()]);
    let s = stdout(&out);
    assert_eq!(code(&out), 0);
    assert_contains(&s, "method: hankel");
    assert_contains(&s, "tn_order: 3");
    assert_contains(&s, "tp_order: 2");
}

#[test]
fn classify_brute_on_identity() {
    let input = fixture("identity.txt", "1 0 0\n0 1 0\n0 0 1\n");
    let out = run(&["classify", "--input", input.to_str().unwrap()]);
    let s = stdout(&out);
    assert_eq!(code(&out), 0);
    assert_contains(&s, "method: brute");
    assert_contains(&s, "tn_order: 3");
    assert_contains(&s, "tp_order: 0");
    assert_contains(&s, "tp fails next at: rows {1} cols {2} = 0");
}

#[test]
fn classify_gp_reports_first_failing_initial_minor() {
    // JSON input path: a row-cycle permutation matrix, TN_1 only
    let m = catalog_matrix("cryer_a", "a");
    let input = fixture("cryer_a.json", &m.to_json());
    let out = run(&["classify", "--input", input.to_str().unwrap(), "--method", "gp"]);
    let s = stdout(&out);
    assert_eq!(code(&out), 0);
    assert_contains(&s, "criterion not satisfied");
    assert_contains(&s, "first failing minor: rows {1} cols {1} = 0");
}

#[test]
fn classify_criteria_accept_a_totally_positive_matrix() {
    let input = fixture("tp2.txt", "2 1\n1 1\n");
    let gp = run(&["classify", "--input", input.to_str().unwrap(), "--method", "gp"]);
    assert_eq!(code(&gp), 0);
    assert_contains(&stdout(&gp), "criterion satisfied: matrix is totally positive");

    let fekete =
        run(&["classify", "--input", input.to_str().unwrap(), "--method", "fekete", "--order", "2"]);
    assert_eq!(code(&fekete), 0);
    assert_contains(&stdout(&fekete), "criterion satisfied: matrix is TP_2");

    let id = fixture("identity_fekete.txt", "1 0 0\n0 1 0\n0 0 1\n");
    let fail = run(&["classify", "--input", id.to_str().unwrap(), "--method", "fekete", "--order", "1"]);
    assert_eq!(code(&fail), 0);
    assert_contains(&stdout(&fail), "first failing minor: rows {1} cols {2} = 0");
}

#[test]
fn classify_hankel_method_rejects_non_hankel_input() {
    let input = fixture("nonhankel.txt", "1 2\n3 4\n");
    let out = run(&["classify", "--input", input.to_str().unwrap(), "--method", "hankel"]);
    assert_eq!(code(&out), 2);
    assert_contains(&stderr(&out), "Hankel");
}

#[test]
fn classify_missing_file_is_an_input_error() {
    let out = run(&["classify", "--input", "/nonexistent/m.txt"]);
    assert_eq!(code(&out), 2);
    assert_contains(&stderr(&out), "error:");
}

#[test]
fn power_noninteger_below_one_drops_tn_order() {
    let input = fixture("moment_power.txt", MOMENT_3X3);
    let out = run(&["power", "--input", input.to_str().unwrap(), "--t", "1/2"]);
    let s = stdout(&out);
    assert_eq!(code(&out), 0);
    assert_contains(&s, "tn_order: 2");
    assert_contains(&s, "tn fails next at: rows {1,2,3} cols {1,2,3} sign -1");
}

#[test]
fn power_of_perturbed_family_around_critical_exponent() {
    let input = fixture("fh4.json", &catalog_matrix("fh_family", "fh4").to_json());

    // below the critical exponent r - 2 = 2 only the 4x4 minor fails
    let below = run(&["power", "--input", input.to_str().unwrap(), "--t", "3/2"]);
    let s = stdout(&below);
    assert_eq!(code(&below), 0);
    assert_contains(&s, "tn_order: 3");
    assert_contains(&s, "tn fails next at: rows {1,2,3,4} cols {1,2,3,4} sign -1");

    // at the integer the power is again a moment matrix; everything is exact
    let at = run(&["power", "--input", input.to_str().unwrap(), "--t", "2"]);
    let s = stdout(&at);
    assert_eq!(code(&at), 0);
    assert_contains(&s, "tn_order: 4");
    assert_contains(&s, "max precision bits: 0");
}

#[test]
fn scan_perturbed_family_fails_exactly_at_nonintegers_below_critical() {
    let out = run(&["scan", "--family", "fh", "--n", "4", "--t-range", "0:3", "--steps", "12"]);
    let s = stdout(&out);
    assert_eq!(code(&out), 0);
    assert_contains(&s, "failures: 1/4 1/2 3/4 5/4 3/2 7/4");
}

#[test]
fn scan_moment_example_gap_is_the_open_unit_interval() {
    let out = run(&["scan", "--family", "exam_jw", "--t-range", "0:2", "--steps", "8"]);
    let s = stdout(&out);
    assert_eq!(code(&out), 0);
    assert_contains(&s, "failures: 1/4 1/2 3/4");

    // order 2 is preserved by every entrywise power
    let tn2 = run(&[
        "scan", "--family", "exam_jw", "--t-range", "0:2", "--steps", "8", "--order", "2",
    ]);
    assert_eq!(code(&tn2), 0);
    assert_contains(&stdout(&tn2), "failures: none");
}

#[test]
fn scan_unknown_case_is_usage_error() {
    let out = run(&["scan", "--family", "nosuch", "--t-range", "0:1", "--steps", "2"]);
    assert_eq!(code(&out), 2);
    assert_contains(&stderr(&out), "unknown catalog case");
}

#[test]
fn repro_all_cases_pass() {
    let out = run(&["repro", "--all"]);
    let s = stdout(&out);
    assert_eq!(code(&out), 0);
    assert_contains(&s, "total:");
    assert_contains(&s, " 0 failed");
}

#[test]
fn repro_single_case_prints_certified_determinant() {
    let out = run(&["repro", "--case", "fallat07"]);
    let s = stdout(&out);
    assert_eq!(code(&out), 0);
    assert_contains(&s, "-114904113");
    assert_contains(&s, "0 failed");
}

#[test]
fn repro_selector_misuse_is_usage_error() {
    let unknown = run(&["repro", "--case", "nosuch"]);
    assert_eq!(code(&unknown), 2);

    let neither = run(&["repro"]);
    assert_eq!(code(&neither), 2);
    assert_contains(&stderr(&neither), "--case ID or --all");

    let both = run(&["repro", "--case", "fallat07", "--all"]);
    assert_eq!(code(&both), 2);
}

#[test]
fn hadamard_product_of_tn_pair_loses_order_three() {
    let a = fixture("w.txt", "1 1 0\n1 1 1\n1 1 1\n");
    let b = fixture("wt.txt", "1 1 1\n1 1 1\n0 1 1\n");
    let out = run(&[
        "hadamard", "--a", a.to_str().unwrap(), "--b", b.to_str().unwrap(), "--op", "product",
    ]);
    let s = stdout(&out);
    assert_eq!(code(&out), 0);
    assert_contains(&s, "tn_order: 2");
    assert_contains(&s, "tn fails next at: rows {1,2,3} cols {1,2,3} = -1");
}

#[test]
fn hadamard_sum_of_tn_pair_loses_order_two() {
    let a = fixture("i3.txt", "1 0 0\n0 1 0\n0 0 1\n");
    let b = fixture("ones3.txt", "1 1 1\n1 1 1\n1 1 1\n");
    let out =
        run(&["hadamard", "--a", a.to_str().unwrap(), "--b", b.to_str().unwrap(), "--op", "sum"]);
    let s = stdout(&out);
    assert_eq!(code(&out), 0);
    assert_contains(&s, "2 1 1");
    assert_contains(&s, "tn_order: 1");
    assert_contains(&s, "tn fails next at: rows {1,2} cols {2,3} = -1");
}

#[test]
fn hankel_gen_measure_matches_hand_computed_moments() {
    let out = run(&["hankel-gen", "--measure", "1:1,2:1", "--n", "3"]);
    let s = stdout(&out);
    assert_eq!(code(&out), 0);
    assert_contains(&s, "2 3 5");
    assert_contains(&s, "5 9 17");
    assert_contains(&s, "tn_order: 3");
    assert_contains(&s, "tp_order: 2");
}

#[test]
fn hankel_gen_factorial_moments_are_totally_positive() {
    let out = run(&["hankel-gen", "--factorial", "--n", "3"]);
    let s = stdout(&out);
    assert_eq!(code(&out), 0);
    assert_contains(&s, "2 6 24");
    assert_contains(&s, "tp_order: 3");
}

#[test]
fn hankel_gen_requires_exactly_one_sequence() {
    let none = run(&["hankel-gen", "--n", "3"]);
    assert_eq!(code(&none), 2);
    assert_contains(&stderr(&none), "exactly one");

    let two = run(&["hankel-gen", "--factorial", "--lambda2", "2", "--n", "3"]);
    assert_eq!(code(&two), 2);
}

#[test]
fn exppoly_full_minor_certifies_roots() {
    let input = fixture("moment_exppoly.txt", MOMENT_3X3);
    let out = run(&[
        "exppoly", "--input", input.to_str().unwrap(), "--minor", "1,2,3;1,2,3", "--lo", "-1",
        "--hi", "2",
    ]);
    let s = stdout(&out);
    assert_eq!(code(&out), 0);
    assert_contains(&s, "170^t");
    assert_contains(&s, "root bound: 3");
    assert_contains(&s, "t = 0 (multiplicity 2)");
    assert_contains(&s, "t = 1 (multiplicity 1)");
    assert_contains(&s, "complete: yes");
}

#[test]
fn precision_ceiling_exhaustion_exits_three() {
    let input = fixture("fh5.json", &catalog_matrix("fh_family", "fh5").to_json());
    let args =
        ["power", "--input", input.to_str().unwrap(), "--t", "13/4", "--bits", "64"];

    let out = run(&args);
    assert_eq!(code(&out), 3);
    let err = stderr(&out);
    assert_contains(&err, "precision exhausted");
    assert_contains(&err, "enclosure");

    // the environment variable sets the same ceiling
    let via_env = bin()
        .args(["power", "--input", input.to_str().unwrap(), "--t", "13/4"])
        .env("TOTALPOS_BITS", "64")
        .output()
        .unwrap();
    assert_eq!(code(&via_env), 3);

    // an explicit flag wins over the environment
    let flag_wins = bin()
        .args(["power", "--input", input.to_str().unwrap(), "--t", "13/4", "--bits", "4096"])
        .env("TOTALPOS_BITS", "64")
        .output()
        .unwrap();
    assert_eq!(code(&flag_wins), 0);
}

#[test]
fn json_format_echoes_config_and_round_trips_matrices() {
    let gen = run(&["hankel-gen", "--factorial", "--n", "4", "--format", "json"]);
    assert_eq!(code(&gen), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&gen)).unwrap();
    assert_eq!(doc["config"]["command"], "hankel-gen");
    assert_eq!(doc["result"]["classification"]["tp_order"], 4);

    // the emitted matrix is valid input
    let input = fixture("roundtrip.json", &doc["result"]["matrix"].to_string());
    let back = run(&["classify", "--input", input.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&back), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&back)).unwrap();
    assert_eq!(doc["result"]["method"], "hankel");
    assert_eq!(doc["result"]["classification"]["tp_order"], 4);
    assert_eq!(doc["result"]["classification"]["tn_order"], 4);
}

#[test]
fn scan_json_lists_the_failure_set() {
    let out = run(&[
        "scan", "--family", "exam_jw", "--t-range", "0:2", "--steps", "8", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["result"]["failures"], serde_json::json!(["1/4", "1/2", "3/4"]));
    assert_eq!(doc["config"]["order"], 3);
}
