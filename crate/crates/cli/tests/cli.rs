use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cluster-tube")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn code(args: &[&str]) -> Option<i32> {
    run(args).status.code()
}

#[test]
fn hom_examples() {
    assert_eq!(
        stdout(&["hom", "--rank", "3", "--from", "1,2", "--to", "1,2"]),
        "{\"tube\":1,\"cluster\":2,\"ext\":0}\n"
    );
    assert_eq!(json(&["hom", "--rank", "3", "--from", "1,3", "--to", "1,3"])["ext"], 2);
    assert_eq!(
        stdout(&["hom", "--rank", "3", "--from", "1, 1", "--to", " 2,1"]),
        "{\"tube\":0,\"cluster\":1,\"ext\":1}\n"
    );
}

#[test]
fn hom_rejects_bad_input() {
    assert_eq!(code(&["hom", "--rank", "3", "--from", "4,1", "--to", "1,1"]), Some(2));
    assert_eq!(code(&["hom", "--rank", "3", "--from", "1", "--to", "1,1"]), Some(2));
    assert_eq!(code(&["hom", "--rank", "1", "--from", "1,1", "--to", "1,1"]), Some(2));
}

#[test]
fn enumerate_counts() {
    for (n, count) in [("2", 2), ("3", 6), ("4", 20)] {
        let v = json(&["enumerate", "--rank", n]);
        assert_eq!(v["rank"].as_u64().unwrap().to_string(), n);
        assert_eq!(v["objects"].as_array().unwrap().len(), count);
        let table = stdout(&["enumerate", "--rank", n, "--format", "table"]);
        assert_eq!(table.lines().count(), count);
    }
    assert_eq!(code(&["enumerate", "--rank", "3", "--format", "dot"]), Some(2));
}

#[test]
fn enumerate_output_is_accepted_as_object_spec() {
    let v = json(&["enumerate", "--rank", "4"]);
    for obj in v["objects"].as_array().unwrap() {
        let spec = obj.to_string();
        let tri = json(&["polygon", "--rank", "4", "--object", &spec, "--format", "json"]);
        let diameters = tri["pairs"].as_array().unwrap().iter().filter(|p| p["diameter"] == true).count();
        assert_eq!(diameters, 1);
    }
    let table = stdout(&["enumerate", "--rank", "3", "--format", "table"]);
    for line in table.lines() {
        assert_eq!(code(&["bmatrix", "--rank", "3", "--object", line]), Some(0));
    }
}

#[test]
fn exchange_graph_dot() {
    let dot = stdout(&["exchange-graph", "--rank", "3", "--format", "dot"]);
    assert_eq!(dot.lines().filter(|l| l.contains("[label=") && !l.contains("--")).count(), 6);
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 6);
    assert!(dot.contains("n0 [label=\"1,1;1,2\"];"));

    let dot = stdout(&["exchange-graph", "--rank", "2"]);
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 1);
    assert!(dot.contains("n0 -- n1 [label=\"1,1\"];"));
}

#[test]
fn exchange_graph_json_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["exchange-graph", "--rank", "4", "--format", "json", "--out", p]), "");
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let nodes = v["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 20);
    assert_eq!(v["edges"].as_array().unwrap().len(), 30);
    for node in nodes {
        assert_eq!(node["order"], node["summands"]);
        let m = node["matrix"].as_array().unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.iter().all(|row| row.as_array().unwrap().len() == 3));
    }
    let e = &v["edges"][0];
    assert_eq!(
        nodes[e["from"].as_u64().unwrap() as usize]["summands"][e["slot"].as_u64().unwrap() as usize],
        e["exchanged"]
    );
}

#[test]
fn exchange_graph_unwritable_path() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("missing").join("g.dot");
    assert_eq!(code(&["exchange-graph", "--rank", "3", "--out", bad.to_str().unwrap()]), Some(2));
}

#[test]
fn bmatrix_examples() {
    assert_eq!(
        stdout(&["bmatrix", "--rank", "4", "--object", "1,3;1,2;2,1"]),
        "order: 1,3;1,2;2,1\n0 -2 0\n1 0 1\n0 -1 0\n"
    );
    assert_eq!(stdout(&["bmatrix", "--rank", "3", "--object", "1,2;1,1"]), "order: 1,2;1,1\n0 -2\n1 0\n");
    assert_eq!(
        stdout(&["bmatrix", "--rank", "3", "--object", "1,2;1,1", "--cartan"]),
        "order: 1,2;1,1\n0 -2\n1 0\ncartan:\n2 -2\n-1 2\n"
    );
    let v = json(&["bmatrix", "--rank", "3", "--object", "1,2;1,1", "--format", "json", "--cartan"]);
    assert_eq!(v["matrix"], serde_json::json!([[0, -2], [1, 0]]));
    assert_eq!(v["cartan"], serde_json::json!([[2, -2], [-1, 2]]));
    assert_eq!(code(&["bmatrix", "--rank", "3", "--object", "1,1;2,1"]), Some(2));
    assert_eq!(code(&["bmatrix", "--rank", "3", "--object", "1,2;1,2"]), Some(2));
}

#[test]
fn mutate_examples() {
    let out = stdout(&["mutate", "--rank", "3", "--object", "1,2;1,1", "--at", "1,1"]);
    assert!(out.starts_with("object: 1,2;2,1\n"), "{out}");
    let out = stdout(&["mutate", "--rank", "3", "--object", "1,2;1,1", "--at", "1,2"]);
    assert!(out.starts_with("object: 1,1;3,2\n"), "{out}");
    assert_eq!(code(&["mutate", "--rank", "3", "--object", "1,2;1,1", "--at", "2,1"]), Some(2));
}

#[test]
fn mutate_twice_returns() {
    let start = json(&["bmatrix", "--rank", "5", "--object", "1,3;1,4;2,1;2,2", "--format", "json"]);
    let once =
        json(&["mutate", "--rank", "5", "--object", "1,3;1,4;2,1;2,2", "--at", "1,3", "--format", "json"]);
    let spec = once["object"].to_string();
    let at = once["replacement"].to_string();
    let twice = json(&["mutate", "--rank", "5", "--object", &spec, "--at", &at, "--format", "json"]);
    assert_eq!(twice["object"], start["order"]);
    assert_eq!(twice["matrix"], start["matrix"]);
}

#[test]
fn polygon_table() {
    assert_eq!(
        stdout(&["polygon", "--rank", "3", "--object", "1,2;1,1"]),
        "1,1 -> [1,3] [4,6]\n1,2 -> [1,4] diameter\n"
    );
}

#[test]
fn verify_passes_and_rejects_bad_rank() {
    let out = stdout(&["verify", "--rank", "4"]);
    assert!(out.ends_with("23/23 checks passed\n"), "{out}");
    assert!(!out.contains("FAIL"));
    let out = stdout(&["verify", "--rank", "6", "--suite", "polygon"]);
    assert!(out.contains("crossing points equal twice the Ext dimension"));
    let v = json(&["verify", "--rank", "3", "--suite", "no-ct", "--format", "json"]);
    assert_eq!(v["exit_code"], 0);
    assert_eq!(code(&["verify", "--rank", "1"]), Some(2));
    assert_eq!(code(&["verify", "--rank", "9"]), Some(2));
    assert_eq!(code(&["verify", "--rank", "3", "--suite", "bogus"]), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["exchange-graph", "--rank", "5", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["enumerate", "--rank", "5"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
