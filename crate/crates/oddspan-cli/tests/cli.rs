//! End-to-end checks of the command-line surface, driven through
//! `cli_dispatch` with captured streams.

use oddspan::constructions::bc_graph;
use oddspan::graph6::{graph6_decode, graph6_string};
use oddspan_cli::cli_dispatch;
use std::io::Cursor;

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("oddspan")
        .chain(args.iter().copied())
        .map(str::to_string)
        .collect();
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli_dispatch(&argv, &mut input, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn construct_bc_writes_graph6() {
    let (code, out, err) = run(&["construct", "--type", "bc", "--ell", "2", "--t", "3"], "");
    assert_eq!(code, 0, "stderr: {err}");
    assert_eq!(out.trim(), graph6_string(&bc_graph(2, 3).unwrap()));
}

#[test]
fn construct_accepts_order_form() {
    let (code, out, _) = run(&["construct", "--type", "bc", "--ell", "2", "--n", "30"], "");
    assert_eq!(code, 0);
    let g = graph6_decode(out.trim().as_bytes()).unwrap();
    assert_eq!(g.n(), 30);

    let (code, _, err) = run(&["construct", "--type", "bc", "--ell", "2", "--n", "25"], "");
    assert_eq!(code, 1);
    assert!(err.contains("not divisible"), "stderr: {err}");
}

#[test]
fn construct_missing_parameter_fails() {
    let (code, _, err) = run(&["construct", "--type", "turan", "--n", "7"], "");
    assert_eq!(code, 1);
    assert!(err.contains("--r is required"));
}

#[test]
fn analyze_emits_one_json_object_per_line() {
    let (code, out, err) = run(&["analyze"], "Dhc\nD??\n");
    assert_eq!(code, 0, "stderr: {err}");
    let lines: Vec<&str> = out.trim().lines().collect();
    assert_eq!(lines.len(), 2);
    let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(first["schema"], 1);
    assert_eq!(first["n"], 5);
    assert_eq!(first["minDegree"], 2);
    assert_eq!(first["oddGirth"], 5);
    assert_eq!(first["bipartite"], false);
    assert_eq!(first["spectrum"], serde_json::json!([5]));
    let second: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(second["bipartite"], true);
    assert_eq!(second["minDegree"], 0);
}

#[test]
fn analyze_rejects_bad_input() {
    let (code, _, err) = run(&["analyze"], "!!!notgraph6\n");
    assert_eq!(code, 1);
    assert!(err.contains("bad graph6 line"));
}

#[test]
fn profile_reports_threshold() {
    let (code, out, _) = run(&["profile", "--family", "3,19", "--n", "60"], "");
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["ell"], 2);
    assert_eq!(doc["k"], 9);
    assert_eq!(doc["regime"], "ell-dominant");
    assert_eq!(doc["threshold"]["numerator"], 1);
    assert_eq!(doc["threshold"]["denominator"], 10);
    assert_eq!(doc["bound"]["equalityDegree"], 6);
    assert_eq!(doc["bound"]["minStrictDegree"], 7);
}

#[test]
fn profile_rejects_even_lengths() {
    let (code, _, err) = run(&["profile", "--family", "3,4"], "");
    assert_eq!(code, 1);
    assert!(err.contains("not an odd integer"));
}

#[test]
fn verify_small_prefix_family_exits_zero() {
    let (code, out, err) = run(&["verify", "--family", "3,5", "--n", "6", "--exhaustive"], "");
    assert_eq!(code, 0, "stderr: {err}");
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["mode"], "exhaustive");
    assert_eq!(doc["suiteFailure"], false);
    assert_eq!(doc["counterexamples"], serde_json::json!([]));
}

#[test]
fn verify_requires_the_exhaustive_flag() {
    let (code, _, err) = run(&["verify", "--family", "3,5", "--n", "6"], "");
    assert_eq!(code, 1);
    assert!(err.contains("--exhaustive"));
}

#[test]
fn search_is_reproducible_modulo_elapsed() {
    let args = ["search", "--family", "3,19", "--n", "20", "--trials", "200", "--seed", "7"];
    let (code1, out1, _) = run(&args, "");
    let (code2, out2, _) = run(&args, "");
    assert_eq!(code1, 0);
    assert_eq!(code2, 0);
    let strip = |s: &str| {
        let mut v: serde_json::Value = serde_json::from_str(s).unwrap();
        v["elapsed"] = serde_json::json!(0);
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(strip(&out1), strip(&out2));
}

#[test]
fn enumerate_writes_file_and_summary() {
    let dir = std::env::temp_dir().join(format!("oddspan-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("n5.g6");
    let (code, out, err) = run(
        &["enumerate", "--n", "5", "--out", out_path.to_str().unwrap()],
        "",
    );
    assert_eq!(code, 0, "stderr: {err}");
    let summary: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(summary["count"], 34);
    let body = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(body.lines().count(), 34);
    for line in body.lines() {
        graph6_decode(line.as_bytes()).unwrap();
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn enumerate_with_filters() {
    let dir = std::env::temp_dir().join(format!("oddspan-cli-filter-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("tf.g6");
    let (code, out, _) = run(
        &[
            "enumerate", "--n", "6", "--min-degree", "2", "--free", "3",
            "--out", out_path.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code, 0);
    let summary: serde_json::Value = serde_json::from_str(&out).unwrap();
    let count = summary["count"].as_u64().unwrap();
    let body = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(body.lines().count() as u64, count);
    for line in body.lines() {
        let g = graph6_decode(line.as_bytes()).unwrap();
        assert!(g.min_degree().unwrap() >= 2);
        assert!(oddspan::cycles::has_cycle_of_length(&g, 3).is_none());
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = run(&["frobnicate"], "");
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}
