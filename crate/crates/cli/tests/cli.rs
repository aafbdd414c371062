use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torus-ki"))
        .args(args)
        .env_remove("TORUS_KI_REPORT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_text_lists_one_edge_terms() {
    let o = run(&["expand", "--p", "2", "--q", "3", "--e-max", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 7);
    for term in ["[a]", "[b]", "[c]", "[ab]{0-1}", "[cc]{0-1}"] {
        assert!(out.contains(term), "{term} missing from\n{out}");
    }
}

#[test]
fn non_coprime_is_a_usage_error() {
    let o = run(&["expand", "--p", "2", "--q", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("p and q must be coprime"));
}

/// Multiset of (sorted colors, edge count, coefficient) with a and b swapped if asked.
fn shape(json: &str, swap: bool) -> Vec<(Vec<String>, usize, String)> {
    let v: serde_json::Value = serde_json::from_str(json).unwrap();
    let mut out: Vec<_> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let mut colors: Vec<String> = t["graph"]["colors"]
                .as_array()
                .unwrap()
                .iter()
                .map(|c| match (c.as_str().unwrap(), swap) {
                    ("a", true) => "b".to_string(),
                    ("b", true) => "a".to_string(),
                    (c, _) => c.to_string(),
                })
                .collect();
            colors.sort();
            let edges = t["graph"]["edges"].as_array().unwrap().len();
            (colors, edges, t["coeff"].as_str().unwrap().to_string())
        })
        .collect();
    out.sort();
    out
}

#[test]
fn swapping_p_and_q_swaps_a_and_b() {
    let x = stdout(&run(&["expand", "--p", "2", "--q", "3", "--e-max", "2", "--format", "json"]));
    let y = stdout(&run(&["expand", "--p", "3", "--q", "2", "--e-max", "2", "--format", "json"]));
    assert_eq!(shape(&x, true), shape(&y, false));
}

#[test]
fn leading_trees_are_wheels() {
    let out = stdout(&run(&["trees", "--p", "2", "--q", "3", "--e-max", "0"]));
    assert_eq!(out.lines().count(), 3);
    assert!(out.lines().all(|l| l.contains("f(")));
}

#[test]
fn trees_json_has_no_multi_edges() {
    let o = run(&["trees", "--p", "2", "--q", "5", "--e-max", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let trees = v.as_array().unwrap();
    assert!(!trees.is_empty());
    for t in trees {
        let mut edges: Vec<String> = t["tree"]["edges"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e.to_string())
            .collect();
        let n = edges.len();
        edges.sort();
        edges.dedup();
        assert_eq!(edges.len(), n, "{t}");
        assert_eq!(t["vertices"].as_array().unwrap().len(), n + 1);
    }
}

#[test]
fn latex_is_a_document() {
    let out = stdout(&run(&["expand", "--p", "2", "--q", "3", "--e-max", "1", "--format", "latex"]));
    assert!(out.contains("\\documentclass"));
    assert!(out.contains("\\begin{document}"));
    assert!(out.trim_end().ends_with("\\end{document}"));
    assert_eq!(out.matches('{').count(), out.matches('}').count());
}

#[test]
fn verify_selected_suites() {
    let o = run(&["verify", "--suite", "worked-examples", "one-loop", "lift", "--r", "5", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("0 failed\n"));
}

#[test]
fn verify_json_is_deterministic() {
    let args = ["verify", "--suite", "series", "one-loop", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], serde_json::Value::Bool(true));
}

#[test]
fn reports_are_written_to_file_and_directory() {
    let dir = std::env::temp_dir().join(format!("torus-ki-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("out.json");
    let reports = dir.join("reports");
    let o = Command::new(env!("CARGO_BIN_EXE_torus-ki"))
        .args(["verify", "--suite", "series", "--out"])
        .arg(&file)
        .env("TORUS_KI_REPORT_DIR", &reports)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let a = std::fs::read(&file).unwrap();
    let b = std::fs::read(reports.join("verify-report.json")).unwrap();
    assert_eq!(a, b);
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(run(&["verify", "--suite", "lift", "--r", "3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["expand", "--p", "2"]).status.code(), Some(2));
}
