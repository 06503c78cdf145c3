use std::path::Path;
use std::process::Command;

use loopreps::json::{context_from_json, lweight_from_json, LWeightJson};
use loopreps::rootsystem::RootSystem;
use loopreps_cli::{render_report, run_str, Options, EXIT_MALFORMED, EXIT_OK, EXIT_VALIDATION};
use serde_json::Value;
use std::sync::Arc;

const GAUSSIAN: &str = r#"{"modulus":["1","0","1"],"automorphisms":[["0","1"],["0","-1"]],"subgroup":[0,1]}"#;

fn job(lweights: &str, commands: &str) -> String {
    format!(r#"{{"field":{GAUSSIAN},"lieType":"A1","lweights":{lweights},"commands":{commands}}}"#)
}

const NAMED: &str = r#"{
    "p": [{"node":1,"point":["0","1"],"exp":1}],
    "pbar": [{"node":1,"point":["0","-1"],"exp":1}],
    "q": [{"node":1,"point":["0","2"],"exp":1}],
    "sq": [{"node":1,"point":["0","1"],"exp":2}],
    "real": [{"node":1,"point":["0","1"],"exp":1},{"node":1,"point":["0","-1"],"exp":1}],
    "one": [],
    "inv": [{"node":1,"point":["0","1"],"exp":-1}]
}"#;

fn run(commands: &str) -> (i32, Option<Value>, Option<String>, String) {
    let out = run_str(&job(NAMED, commands), &Options::default());
    (out.code, out.report, out.error, out.text)
}

fn result(report: &Value, i: usize) -> &Value {
    &report["results"][i]["result"]
}

#[test]
fn tensor_of_distinct_conjugate_pairs() {
    let (code, report, _, text) = run(r#"["tensor p q"]"#);
    assert_eq!(code, EXIT_OK);
    let r = result(report.as_ref().unwrap(), 0);
    let parts = r["decomposition"].as_array().unwrap();
    assert_eq!(parts.len(), 2);
    for p in parts {
        assert_eq!((p["degree"].as_u64(), p["dimK"].as_u64(), p["mult"].as_u64()), (Some(2), Some(8), Some(1)));
    }
    assert_eq!(r["totalDimK"], 16);
    assert_eq!(r["tpIrreducible"], false);
    assert!(text.contains("total dimK 16"));
}

#[test]
fn identity_info() {
    let (code, report, _, _) = run(r#"["lw-info one"]"#);
    assert_eq!(code, EXIT_OK);
    let r = result(report.as_ref().unwrap(), 0);
    assert_eq!(r["degree"], 1);
    assert_eq!(r["dimF"], 1);
    assert_eq!(r["dimK"], 1);
    assert_eq!(r["wt"], serde_json::json!([0]));
    assert_eq!(r["weylDimK"], 1);
}

#[test]
fn series_check_g2() {
    let (code, report, _, text) = run(r#"["series-check --order 4 --type G2"]"#);
    assert_eq!(code, EXIT_OK);
    let checks = result(report.as_ref().unwrap(), 0)["checks"].as_array().unwrap().clone();
    assert!(checks.iter().all(|c| c["passed"] == true));
    let roots = checks.iter().filter(|c| c["name"].as_str().unwrap().starts_with("Lambda_")).count();
    assert_eq!(roots, 6);
    assert!(!text.contains("FAIL"));
}

#[test]
fn other_commands() {
    let (code, report, err, _) = run(
        r#"["validate-field", "conjugates p", "rational-split real", "dual sq",
            {"command": "blocks", "args": ["p", "pbar", "sq", "one", "real"]},
            "kx-matrix p", "kx-matrix real --node 1 --index 2", "embedding-rank p pbar",
            "link-chain A1 4 0 --max-steps 5"]"#,
    );
    assert_eq!(code, EXIT_OK, "{err:?}");
    let r = report.unwrap();
    assert_eq!(result(&r, 0)["baseDegree"], 1);
    assert_eq!(result(&r, 1)["degree"], 2);
    assert_eq!(result(&r, 2)["remainder"], serde_json::json!([]));
    let names: Vec<Vec<String>> = serde_json::from_value(result(&r, 4)["names"].clone()).unwrap();
    assert_eq!(names, vec![vec!["sq".to_string(), "one".into()], vec!["p".into(), "pbar".into()], vec!["real".into()]]);
    let m = &result(&r, 5)["matrix"];
    assert_eq!(m["fixedByH"], true);
    assert_eq!(
        m["matrix"],
        serde_json::json!([[["0", "0"], ["-1", "0"]], [["1", "0"], ["0", "0"]]])
    );
    assert_eq!(result(&r, 5)["minpolyDegree"], 2);
    // (1 − iu)(1 + iu) = 1 + u², a rational coefficient
    assert_eq!(result(&r, 6)["dim"], 1);
    assert_eq!(result(&r, 6)["charpolySplits"], true);
    assert_eq!(result(&r, 7)["rank"], 2);
    assert_eq!(result(&r, 7)["injective"], false);
    assert_eq!(result(&r, 8)["chain"], serde_json::json!([[0], [2], [4]]));
}

#[test]
fn validation_failures_exit_one() {
    let (code, report, err, _) = run(r#"["validate-field", "lw-info inv"]"#);
    assert_eq!(code, EXIT_VALIDATION);
    let err = err.unwrap();
    assert!(err.contains("command 1") && err.contains("NotDominant"), "{err}");
    let r = report.unwrap();
    assert_eq!(r["error"]["name"], "NotDominant");
    assert_eq!(r["results"].as_array().unwrap().len(), 1);

    let (code, _, err, _) = run(r#"["link-chain A1 1 0"]"#);
    assert_eq!(code, EXIT_VALIDATION);
    assert!(err.unwrap().contains("NotSameClass"));

    let bad_field = r#"{"field":{"modulus":["1","0","1"],"automorphisms":[["0","1"]],"subgroup":[0]},"lieType":"A1","commands":[]}"#;
    let out = run_str(bad_field, &Options::default());
    assert_eq!(out.code, EXIT_VALIDATION);
    assert!(out.error.unwrap().contains("WrongOrder"));

    let bad_lw = job(r#"{"z":[{"node":1,"point":["0","0"],"exp":1}]}"#, "[]");
    let out = run_str(&bad_lw, &Options::default());
    assert_eq!(out.code, EXIT_VALIDATION);
    assert!(out.error.unwrap().contains("InvalidLWeight"));
}

#[test]
fn malformed_jobs_exit_two() {
    for commands in [r#"["tensor p nope"]"#, r#"["frobnicate"]"#, r#"["dual"]"#, r#"[42]"#] {
        let (code, report, err, _) = run(commands);
        assert_eq!(code, EXIT_MALFORMED, "{commands}");
        assert!(report.is_none());
        if commands != "[42]" {
            assert!(err.unwrap().contains("command 0"));
        }
    }
    let out = run_str("{not json", &Options::default());
    assert_eq!(out.code, EXIT_MALFORMED);
    let out = run_str(r#"{"field":{},"lieType":"A1","commands":[]}"#, &Options::default());
    assert_eq!(out.code, EXIT_MALFORMED);
}

#[test]
fn echoed_lweights_reparse() {
    let (code, report, _, _) = run(r#"["lw-info real", "conjugates q", "tensor p pbar", "dual sq"]"#);
    assert_eq!(code, EXIT_OK);
    let r = report.unwrap();
    let ctx = Arc::new(context_from_json(&serde_json::from_value(r["field"].clone()).unwrap()).unwrap());
    let rs = Arc::new(RootSystem::from_name("A1").unwrap());
    let mut echoed: Vec<Value> = vec![result(&r, 0)["lweight"].clone(), result(&r, 0)["class"].clone(), result(&r, 3)["dual"].clone()];
    echoed.extend(result(&r, 1)["orbit"].as_array().unwrap().iter().cloned());
    echoed.extend(result(&r, 2)["decomposition"].as_array().unwrap().iter().map(|e| e["class"].clone()));
    for v in echoed {
        let j: LWeightJson = serde_json::from_value(v.clone()).unwrap();
        let w = lweight_from_json(&ctx, &rs, &j).unwrap();
        assert_eq!(serde_json::to_value(loopreps::json::lweight_to_json(&w)).unwrap(), v);
    }
}

fn run_binary(dir: &Path, job_text: &str, extra: &[&str]) -> (std::process::Output, String) {
    let job_path = dir.join("job.json");
    let report_path = dir.join("report.json");
    std::fs::write(&job_path, job_text).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_loopreps"))
        .arg(&job_path)
        .arg("--json")
        .arg(&report_path)
        .args(extra)
        .output()
        .unwrap();
    let report = std::fs::read_to_string(&report_path).unwrap_or_default();
    (out, report)
}

#[test]
fn binary_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let text = job(NAMED, r#"["tensor p q", "blocks p pbar sq one real", "kx-matrix p", "link-chain A2 (1,1) (0,0)"]"#);
    let (a, ra) = run_binary(dir.path(), &text, &[]);
    let (b, rb) = run_binary(dir.path(), &text, &[]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(ra, rb);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&ra).unwrap();
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(render_report(&v), ra);
}

#[test]
fn binary_flags_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let (out, _) = run_binary(dir.path(), &job(NAMED, r#"["series-check"]"#), &["--quiet", "--order", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());

    let (out, report) = run_binary(dir.path(), &job(NAMED, r#"["link-chain A1 8 0"]"#), &["--max-steps", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("SearchExhausted"));
    let v: Value = serde_json::from_str(&report).unwrap();
    assert_eq!(v["error"]["name"], "SearchExhausted");

    std::fs::remove_file(dir.path().join("report.json")).unwrap();
    let (out, report) = run_binary(dir.path(), "[]", &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(report.is_empty());
}
