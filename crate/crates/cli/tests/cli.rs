//! End-to-end tests of the `tyd` binary: exit-code taxonomy, report
//! content, schema-error locations, and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use twisted_yd::fixtures;
use twisted_yd_cli::json::{job_with_inline_module, parse_scalar, scalar_value};

fn tyd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tyd"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn tyd_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tyd"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary must run")
}

fn write_job(dir: &tempfile::TempDir, name: &str, content: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, content).expect("job file must write");
    path
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout must be UTF-8")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr must be UTF-8")
}

const CUBE_JOB: &str = r#"{"group": {"orders": [2, 2, 2]}, "cocycle": {"c_triple": {"1,2,3": 1}}}"#;

#[test]
fn every_fixture_passes_its_verification_pipeline() {
    for name in ["example-3.19", "example-3.20", "sec5-V1", "sec5-V2", "sec5-V3"] {
        let out = tyd(&["paper-examples", name]);
        assert_eq!(out.status.code(), Some(0), "fixture {} must pass: {}", name, stdout_str(&out));
        let text = stdout_str(&out);
        assert!(text.contains("verification: pass"), "fixture {}: {}", name, text);
    }
}

#[test]
fn the_first_example_reports_its_known_profile() {
    let out = tyd(&["paper-examples", "example-3.19"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("diagonal: false"), "{}", text);
    assert!(text.contains("finite-C1"), "{}", text);
    assert!(text.contains("hilbert dims: [1, 2, 1]"), "{}", text);
    assert!(text.contains("total dimension 4"), "{}", text);
}

#[test]
fn the_second_example_reports_its_known_profile() {
    let out = tyd(&["paper-examples", "example-3.20", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout_str(&out)).expect("JSON report must parse");
    assert_eq!(v["finiteness"], "finite-C2");
    assert_eq!(v["diagonal"], false);
    let dims: Vec<u64> = v["report"]["hilbert"]["dims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d.as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![1, 2, 4, 4, 5, 4, 4, 2, 1]);
    assert_eq!(v["report"]["hilbert"]["verdict"]["total_dimension"], 27);
    assert_eq!(v["report"]["hilbert"]["verdict"]["top_degree"], 8);
    assert_eq!(v["report"]["dynkin"]["canonical_class"], "[3:1,3:1|0-1@3:2]");
}

#[test]
fn unknown_fixture_is_an_input_error() {
    let out = tyd(&["paper-examples", "example-9.99"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("unknown fixture"));
}

#[test]
fn cocycle_verify_passes_on_the_cube_representative() {
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(&dir, "cube.json", CUBE_JOB);
    let out = tyd(&["cocycle", "verify", job.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_str(&out));
    assert!(stdout_str(&out).contains("PASS"));
}

#[test]
fn cocycle_abelian_is_false_on_the_cube_representative_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(&dir, "cube.json", CUBE_JOB);
    let out = tyd(&["cocycle", "abelian", job.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["abelian"], false);
    assert!(v["witness"].is_object(), "nonabelian verdicts carry a witness");
}

#[test]
fn cocycle_abelian_is_true_without_the_triple_coefficient() {
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(
        &dir,
        "flat.json",
        r#"{"group": {"orders": [2, 2, 2]}, "cocycle": {"c_pair": {"1,2": 1}}}"#,
    );
    let out = tyd(&["cocycle", "abelian", job.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["abelian"], true);
    assert!(v.get("witness").is_none());
}

#[test]
fn schema_violations_point_at_the_offending_path() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (
            r#"{"group": {"orders": [2, 2]}, "cocycle": {"c_single": [0, 3]}}"#,
            "$.cocycle.c_single[1]",
        ),
        (
            r#"{"group": {"orders": [2, 2, 2]}, "cocycle": {"c_pair": {"1,4": 0}}}"#,
            "$.cocycle.c_pair[\"1,4\"]",
        ),
        (r#"{"group": {"orders": []}}"#, "$.group.orders"),
        (r#"{"surprise": 1}"#, "$.surprise"),
        (r#"{"module": {"fixture": "nope"}}"#, "$.module.fixture"),
        (
            r#"{"braiding": {"root_order": 2, "exponents": [[0], [0, 1]]}}"#,
            "$.braiding.exponents[0]",
        ),
    ];
    for (i, (content, expected_path)) in cases.iter().enumerate() {
        let job = write_job(&dir, &format!("bad{}.json", i), content);
        let out = tyd(&["cocycle", "verify", job.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "case {}", i);
        let err = stderr_str(&out);
        assert!(err.contains(expected_path), "case {}: {} should mention {}", i, err, expected_path);
    }
}

#[test]
fn malformed_json_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(&dir, "garbage.json", "definitely not json");
    let out = tyd(&["cocycle", "verify", job.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("not valid JSON"));
}

#[test]
fn self_braiding_one_stays_unknown_with_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(
        &dir,
        "qone.json",
        r#"{"braiding": {"root_order": 2, "exponents": [[0, 1], [1, 1]]}, "params": {"cutoff": 6}}"#,
    );
    let out = tyd(&["nichols", "hilbert", job.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["hilbert"]["verdict"]["kind"], "unknown-at-cutoff");
    // The finiteness command, by contrast, decides through the
    // root-of-unity criterion.
    let out = tyd(&["finiteness", job.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["verdict"]["kind"], "infinite");
}

#[test]
fn simples_counts_match_the_square_law() {
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(&dir, "cube.json", CUBE_JOB);
    let out = tyd(&["simples", job.to_str().unwrap(), "--degree", "1,0,0", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_str(&out));
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["count"], 2);
    assert_eq!(v["dimension"], 2);
    assert_eq!(v["group_order"], 8);
    assert_eq!(v["diagonal_type"], false);
    let out = tyd(&["simples", job.to_str().unwrap(), "--degree", "0,0,0", "--json"]);
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["count"], 8);
    assert_eq!(v["dimension"], 1);
    assert_eq!(v["diagonal_type"], true);
}

#[test]
fn a_direct_sum_of_all_three_nondiagonal_simples_is_refused() {
    let m = fixtures::order2_cube_module()
        .direct_sum(&fixtures::order2_cube_module_deg2())
        .direct_sum(&fixtures::order2_cube_module_deg3());
    let job_value = job_with_inline_module(&m, None);
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(&dir, "triple.json", &serde_json::to_string(&job_value).unwrap());
    let out = tyd(&["nichols", "hilbert", job.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(1), "refusals exit 1: {}", stderr_str(&out));
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    let witnesses = v["report"]["witnesses"].as_array().unwrap();
    assert!(witnesses.len() >= 3, "at least three nondiagonal witnesses, got {}", witnesses.len());
}

#[test]
fn an_inline_module_round_trips_through_the_pipeline() {
    let m = fixtures::order2_cube_module();
    let job_value = job_with_inline_module(&m, None);
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(&dir, "inline.json", &serde_json::to_string(&job_value).unwrap());
    let out = tyd(&["nichols", "hilbert", job.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_str(&out));
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    let dims: Vec<u64> = v["report"]["hilbert"]["dims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d.as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![1, 2, 1]);
}

#[test]
fn a_tampered_inline_module_fails_verification_with_exit_one() {
    let mut m = fixtures::order2_cube_module();
    // Break one action matrix entry so the compatibility law fails.
    let bad = m.components[0].action[3].scale(&twisted_yd::scalars::CycScalar::from_int(m.n_ctx, 7));
    m.components[0].action[3] = bad;
    let job_value = job_with_inline_module(&m, None);
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(&dir, "tampered.json", &serde_json::to_string(&job_value).unwrap());
    let out = tyd(&["nichols", "hilbert", job.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(1), "{}", stderr_str(&out));
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["refusal"], "module verification failed");
}

#[test]
fn boson_check_passes_on_the_first_example() {
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(&dir, "fix.json", r#"{"module": {"fixture": "example-3.19"}}"#);
    let out = tyd(&["boson", "check", job.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout_str(&out));
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["roundtrip"], "pass");
    assert_eq!(v["biproduct"]["total_dimension"], 32);
    for tally in v["coquasi"]["tallies"].as_array().unwrap() {
        assert_eq!(tally["skipped"], 0, "complete tables skip nothing: {}", tally);
    }
}

#[test]
fn boson_build_refuses_a_too_small_truncation() {
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(
        &dir,
        "small.json",
        r#"{"module": {"fixture": "example-3.20"}, "params": {"trunc": 2}}"#,
    );
    let out = tyd(&["boson", "build", job.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_str(&out).contains("too small"));
}

#[test]
fn dot_output_is_a_graphviz_graph() {
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(&dir, "fix.json", r#"{"module": {"fixture": "example-3.19"}}"#);
    let out = tyd(&["nichols", "dynkin", "--dot", job.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.starts_with("graph dynkin {"), "{}", text);
    assert!(text.trim_end().ends_with('}'), "{}", text);
}

#[test]
fn seed_corpus_emits_representatives_that_verify() {
    let out = tyd(&["--seed-corpus", "2,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    let reps = v.as_array().unwrap();
    assert_eq!(reps.len(), 8, "Z2 x Z2 carries 8 representative classes");
    let dir = tempfile::tempdir().unwrap();
    for (i, rep) in reps.iter().enumerate() {
        let job_value = serde_json::json!({
            "group": {"orders": [2, 2]},
            "cocycle": rep,
        });
        let job = write_job(&dir, &format!("rep{}.json", i), &job_value.to_string());
        let out = tyd(&["cocycle", "verify", job.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "representative {} must verify", i);
    }
}

#[test]
fn json_reports_are_byte_identical_across_runs_and_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(&dir, "fix.json", r#"{"module": {"fixture": "example-3.19"}}"#);
    let path = job.to_str().unwrap();
    let a = tyd_env(&["nichols", "hilbert", path, "--json"], "RAYON_NUM_THREADS", "1");
    let b = tyd_env(&["nichols", "hilbert", path, "--json"], "RAYON_NUM_THREADS", "4");
    let c = tyd(&["nichols", "hilbert", path, "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout, "thread count must not change report bytes");
    assert_eq!(b.stdout, c.stdout, "repeat runs must not change report bytes");
    let d = tyd_env(&["boson", "check", path, "--json"], "RAYON_NUM_THREADS", "1");
    let e = tyd_env(&["boson", "check", path, "--json"], "RAYON_NUM_THREADS", "4");
    assert_eq!(d.stdout, e.stdout, "axiom tallies must not depend on thread count");
}

#[test]
fn scalar_encoding_round_trips_both_forms() {
    // Root-of-unity powers take the compact form.
    let v = serde_json::json!({"root_order": 4, "exponent": 3});
    let s = parse_scalar(&v, 4, "$").unwrap();
    let back = scalar_value(&s);
    assert_eq!(back["root_order"], 4);
    assert_eq!(back["exponent"], 3);
    // Non-monomial values take the coefficient form and survive a round
    // trip exactly.
    let v = serde_json::json!({"root_order": 8, "coefficients": ["1/2", "1/2", "0", "-1/3"]});
    let s = parse_scalar(&v, 8, "$").unwrap();
    let back = scalar_value(&s);
    let coeffs: Vec<&str> =
        back["coefficients"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(coeffs, vec!["1/2", "1/2", "0", "-1/3"]);
    let reparsed = parse_scalar(&back, 8, "$").unwrap();
    assert!(reparsed.sub(&s).is_zero());
    // Plain integers and rational strings are accepted as shorthand.
    let i = parse_scalar(&serde_json::json!(-1), 2, "$").unwrap();
    assert!(i.add(&twisted_yd::scalars::CycScalar::one(2)).is_zero());
    let r = parse_scalar(&serde_json::json!("3/6"), 2, "$").unwrap();
    assert_eq!(format!("{}", r), "1/2");
    // Mismatched coefficient counts are schema errors with the right path.
    let bad = serde_json::json!({"root_order": 8, "coefficients": ["1", "0"]});
    let e = parse_scalar(&bad, 8, "$.cell").unwrap_err();
    assert!(e.path.contains("$.cell.coefficients"), "{}", e);
}
