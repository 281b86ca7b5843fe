use std::process::{Command, Output};

use serde_json::Value;

fn cutbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cutbound")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn c5_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.txt");
    std::fs::write(&path, "c five-cycle\np 5 5\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 4 0 1\n").unwrap();
    let out = cutbound(&["bounds", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = |name: &str| text.lines().find(|l| l.split_whitespace().next() == Some(name)).unwrap().to_string();
    assert!(row("poljak_turzik").contains("3.500000"));
    assert!(row("dfs").contains("3.500000"));
    assert!(row("girth").contains("4.000000"));
    assert!(row("mainprob").contains("3.636364"));
    assert!(row("matching").contains("3.500000"));
    for line in text.lines().skip(1) {
        assert!(line.contains("4.000000"), "{line}");
    }
}

#[test]
fn k4_marks_inapplicable_rows() {
    let out = cutbound(&["bounds", "--generate", "complete", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for name in ["girth", "tfree_spanning", "mainprob"] {
        let line = text.lines().find(|l| l.starts_with(name)).unwrap();
        assert!(line.contains("inapplicable"), "{line}");
    }
    assert!(text.contains("triangle found"));
}

#[test]
fn petersen_c3_matching_vizing_row() {
    let out = cutbound(&["bounds", "--generate", "petersen_c3", "10", "1", "--format", "json-lines", "--bound", "matching_vizing"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["name"], "matching_vizing");
    assert_eq!(v["bound_value"].as_f64(), Some(56.0));
    assert_eq!(v["cut_weight"].as_f64(), Some(56.0));
}

#[test]
fn json_lines_round_trip_and_determinism() {
    let args = ["bounds", "--generate", "random_triangle_free_subcubic", "14", "3", "real:0:5", "--format", "json-lines", "--seed", "9", "--trials", "32"];
    let a = cutbound(&args);
    let b = cutbound(&args);
    assert_eq!(a.stdout, b.stdout);
    for line in stdout(&a).lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        if let Some(x) = v["bound_value"].as_f64() {
            assert_eq!(x.to_string().parse::<f64>().unwrap(), x);
            let printed = serde_json::to_string(&v["bound_value"]).unwrap();
            assert_eq!(printed.parse::<f64>().unwrap(), x);
        }
    }
}

#[test]
fn oracle_five_cycle_cover_on_petersen() {
    let out = cutbound(&["oracle", "five_cycle_cover", "--generate", "petersen", "--format", "json-lines"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let edges: Vec<(usize, usize)> = v["witness"]["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e[0].as_u64().unwrap() as usize, e[1].as_u64().unwrap() as usize))
        .collect();
    let g = cutbound::generate::petersen(1.0);
    let ids: Vec<usize> = edges.iter().map(|&(u, v)| g.edge_between(u, v).unwrap()).collect();
    assert!(cutbound::oracle::verify_five_cycle_cover(&g, &ids));
}

#[test]
fn generate_star_counterexample_is_k7() {
    let out = cutbound(&["generate", "star_counterexample", "1", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let g = cutbound::io::load_graph(&stdout(&out)).unwrap();
    assert_eq!(g.vertex_count(), 7);
    assert_eq!(g.edge_count(), 21);
}

#[test]
fn verify_random_corpus() {
    let out = cutbound(&["verify", "--random", "50", "--max-n", "14", "--trials", "16"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("50 of 50 instances passed"));
}

#[test]
fn exit_codes() {
    assert_eq!(cutbound(&["bounds", "--input", "/definitely/not/here"]).status.code(), Some(2));
    assert_eq!(cutbound(&["bounds"]).status.code(), Some(2));
    assert_eq!(cutbound(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cutbound(&["oracle", "mac", "--generate", "cycle", "31"]).status.code(), Some(2));
    assert_eq!(cutbound(&["oracle", "mac", "--generate", "cycle", "31", "--max-n-override", "31"]).status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "p 3 2\ne 0 1 1\ne 1 1 2\n").unwrap();
    let out = cutbound(&["bounds", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn conjecture_lab_on_c5() {
    let out = cutbound(&["conjecture", "--generate", "cycle", "5", "--format", "json-lines"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["theta_ratio"].as_f64(), Some(0.375));
    assert_eq!(v["flags"].as_array().unwrap().len(), 0);
}

#[test]
fn generate_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    let out = cutbound(&["generate", "petersen", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let g = cutbound::io::read_graph_file(&path).unwrap();
    assert_eq!(g.canonical(), cutbound::generate::petersen(1.0).canonical());
}
