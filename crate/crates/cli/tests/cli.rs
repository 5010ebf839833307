use std::process::{Command, Output};

use serde_json::Value;

fn comblab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_comblab")).args(args).output().expect("binary runs")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("JSON line"))
        .collect()
}

#[test]
fn analyze_c5() {
    let out = comblab(&["analyze", "--graph", "Dhc", "--tau", "9/10"]);
    assert!(out.status.success());
    let rec = &json_lines(&out)[0];
    assert_eq!((rec["alpha"].as_u64(), rec["omega"].as_u64(), rec["kappa"].as_u64()), (Some(2), Some(2), Some(4)));
    assert_eq!(rec["c5_free"], false);
    assert_eq!(rec["criticality"]["verdict"]["verdict"], "critical");
}

#[test]
fn analyze_file_of_graphs_as_csv() {
    let dir = std::env::temp_dir().join(format!("comblab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graphs.g6");
    std::fs::write(&path, "Dhc\nD~{\n\n").unwrap();
    let out = comblab(&["--format", "csv", "analyze", "--graph", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().next().unwrap().contains("kappa"));
}

#[test]
fn comb_branch() {
    // K_{3,3} in graph6
    let out = comblab(&["comb", "--graph", "EFz_", "--a", "0,1,2", "--b", "3,4,5", "--gamma", "3/2", "--d", "1/2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let rec = &json_lines(&out)[0];
    assert!(rec["branch"] == "comb_found" || rec["branch"] == "sparsity_bound");
}

#[test]
fn sparsify_success_and_honest_failure() {
    let ok = comblab(&["sparsify", "--graph", "Dhc", "--m", "2", "--eps", "1"]);
    assert!(ok.status.success());
    assert_eq!(json_lines(&ok)[0]["x"].as_array().unwrap().len(), 2);
    // C5 with eps = 1/2 and m = 3 has no valid set
    let bad = comblab(&["--seed", "3", "sparsify", "--graph", "Dhc", "--m", "3", "--eps", "1/2"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(json_lines(&bad)[0]["error"].as_str().unwrap().contains("exhaustive"));
}

#[test]
fn decompose_reports_everything() {
    let out = comblab(&["decompose", "--graph", "Dhc", "--eps", "1/500", "--delta", "1/4", "--tau", "1/3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let rec = &json_lines(&out)[0];
    assert_eq!(rec["accounting"]["total"], "1");
    // v = 0, A = C = {1, 4}, D = {2, 3}
    assert_eq!(rec["decomposition"]["rounds"].as_array().unwrap().len(), 1);
    assert!(rec["comb"].is_null());
}

#[test]
fn blockparty_on_inline_blocks() {
    let out = comblab(&[
        "blockparty",
        "--graph",
        "Dhc",
        "--blocks",
        "[[0],[1],[2],[3],[4]]",
        "--pattern",
        "K2",
        "--d",
        "2",
        "--s",
        "1",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let rec = &json_lines(&out)[0];
    assert_eq!(rec["embedding"]["map"], serde_json::json!([0, 1]), "{rec}");
}

#[test]
fn scan_rows() {
    let out = comblab(&["scan", "--family", "C5", "--n", "5..6"]);
    assert!(out.status.success());
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["min_kappa"], 5);
}

#[test]
fn verify_exit_codes() {
    let clean = comblab(&["verify", "--suite", "rainbow-oracle", "--cases", "50"]);
    assert_eq!(clean.status.code(), Some(0));
    let summary = json_lines(&clean).pop().unwrap();
    assert_eq!(summary["violations"], 0);
    assert_eq!(summary["cases"], 50);

    let unknown = comblab(&["verify", "--suite", "bogus"]);
    assert_eq!(unknown.status.code(), Some(2));
    let bad_graph = comblab(&["analyze", "--graph", "not a graph"]);
    assert_eq!(bad_graph.status.code(), Some(2));
    let no_args = comblab(&["comb"]);
    assert_eq!(no_args.status.code(), Some(2));
}

#[test]
fn verify_is_seed_deterministic() {
    let run = || {
        let out = comblab(&["--seed", "11", "verify", "--suite", "decomposition-invariants", "--cases", "40"]);
        let mut s = json_lines(&out).pop().unwrap();
        s["elapsed_ms"] = Value::Null;
        s
    };
    assert_eq!(run(), run());
}
