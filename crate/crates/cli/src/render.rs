//! JSON, DOT and plain-text renderings. All output is deterministic: nodes
//! and objects come out in canonical order.

use std::fmt::Write as _;

use serde::Serialize;
use tube_cluster::mutation::ExchangeGraph;
use tube_cluster::verify::CheckOutcome;
use tube_cluster::{CsTriangulation, HomDims, IntMatrix, MaximalRigid, TubeObject, TubeRank};

use crate::objspec::{format_list, format_object};

pub type Coord = [u32; 2];

pub fn coord(x: &TubeObject) -> Coord {
    [x.a(), x.b()]
}

pub fn coords(xs: &[TubeObject]) -> Vec<Coord> {
    xs.iter().map(coord).collect()
}

#[derive(Serialize)]
struct HomJson {
    tube: u32,
    cluster: u32,
    ext: u32,
}

pub fn hom_json(d: &HomDims) -> String {
    serde_json::to_string(&HomJson { tube: d.tube, cluster: d.cluster, ext: d.ext }).expect("serialisable")
}

#[derive(Serialize)]
struct EnumerateJson {
    rank: u32,
    objects: Vec<Vec<Coord>>,
}

pub fn enumerate_json(rank: TubeRank, all: &[MaximalRigid]) -> String {
    let objects = all.iter().map(|t| coords(t.summands())).collect();
    serde_json::to_string(&EnumerateJson { rank: rank.get(), objects }).expect("serialisable")
}

pub fn enumerate_table(all: &[MaximalRigid]) -> String {
    all.iter().map(|t| format!("{}\n", format_list(t.summands()))).collect()
}

/// Header line with the row/column labels, then one line per row.
pub fn matrix_table(order: &[TubeObject], m: &IntMatrix) -> String {
    format!("order: {}\n{m}", format_list(order))
}

#[derive(Serialize)]
struct GraphNodeJson {
    id: usize,
    summands: Vec<Coord>,
    order: Vec<Coord>,
    matrix: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct GraphEdgeJson {
    from: usize,
    slot: usize,
    to: usize,
    to_slot: usize,
    exchanged: Coord,
    replacement: Coord,
}

#[derive(Serialize)]
struct GraphJson {
    rank: u32,
    nodes: Vec<GraphNodeJson>,
    edges: Vec<GraphEdgeJson>,
}

pub fn exchange_graph_json(g: &ExchangeGraph) -> String {
    let seeds = g.seeds();
    let nodes = seeds
        .iter()
        .enumerate()
        .map(|(id, s)| GraphNodeJson {
            id,
            summands: coords(s.object().summands()),
            order: coords(s.matrix().order()),
            matrix: s.matrix().entries().to_rows(),
        })
        .collect();
    let edges = g
        .edges()
        .into_iter()
        .map(|e| GraphEdgeJson {
            from: e.from,
            slot: e.slot,
            to: e.to,
            to_slot: e.to_slot,
            exchanged: coord(&seeds[e.from].object().summands()[e.slot]),
            replacement: coord(&seeds[e.to].object().summands()[e.to_slot]),
        })
        .collect();
    serde_json::to_string_pretty(&GraphJson { rank: g.rank().get(), nodes, edges }).expect("serialisable")
        + "\n"
}

pub fn exchange_graph_dot(g: &ExchangeGraph) -> String {
    let seeds = g.seeds();
    let mut out = format!("graph exchange_graph_rank_{} {{\n", g.rank());
    for (id, s) in seeds.iter().enumerate() {
        writeln!(out, "  n{id} [label=\"{}\"];", format_list(s.object().summands())).unwrap();
    }
    for e in g.edges() {
        let exchanged = format_object(&seeds[e.from].object().summands()[e.slot]);
        writeln!(out, "  n{} -- n{} [label=\"{exchanged}\"];", e.from, e.to).unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct PairJson {
    object: Coord,
    diagonals: Vec<[u32; 2]>,
    diameter: bool,
}

#[derive(Serialize)]
struct PolygonJson {
    rank: u32,
    corners: u32,
    pairs: Vec<PairJson>,
}

fn pair_rows(t: &MaximalRigid, tri: &CsTriangulation) -> Vec<PairJson> {
    t.summands()
        .iter()
        .map(|x| {
            let p = tube_cluster::polygon::delta(x).expect("summands are rigid");
            debug_assert!(tri.index_of(&p).is_some());
            let (d1, d2) = p.diagonals();
            let mut diagonals = vec![d1.endpoints().into()];
            if !p.is_degenerate() {
                diagonals.push(d2.endpoints().into());
            }
            PairJson { object: coord(x), diagonals, diameter: p.is_degenerate() }
        })
        .collect()
}

pub fn polygon_json(t: &MaximalRigid, tri: &CsTriangulation) -> String {
    let rank = t.rank().get();
    serde_json::to_string(&PolygonJson { rank, corners: 2 * rank, pairs: pair_rows(t, tri) })
        .expect("serialisable")
}

pub fn polygon_table(t: &MaximalRigid, tri: &CsTriangulation) -> String {
    let mut out = String::new();
    for p in pair_rows(t, tri) {
        let diags: Vec<String> = p.diagonals.iter().map(|[a, b]| format!("[{a},{b}]")).collect();
        let tag = if p.diameter { " diameter" } else { "" };
        writeln!(out, "{},{} -> {}{tag}", p.object[0], p.object[1], diags.join(" ")).unwrap();
    }
    out
}

#[derive(Serialize)]
struct CheckJson<'a> {
    suite: &'a str,
    name: &'a str,
    passed: bool,
    counterexample: Option<&'a str>,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    rank: u32,
    suite: &'a str,
    checks: Vec<CheckJson<'a>>,
    exit_code: u8,
}

pub fn verify_json(rank: TubeRank, suite: &str, outcomes: &[CheckOutcome], exit_code: u8) -> String {
    let checks = outcomes
        .iter()
        .map(|o| CheckJson {
            suite: o.suite.name(),
            name: o.name,
            passed: o.passed(),
            counterexample: o.counterexample.as_deref(),
        })
        .collect();
    serde_json::to_string(&VerifyJson { rank: rank.get(), suite, checks, exit_code }).expect("serialisable")
}

pub fn verify_table(rank: TubeRank, outcomes: &[CheckOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        match &o.counterexample {
            None => writeln!(out, "PASS  {}: {} (n={rank})", o.suite, o.name).unwrap(),
            Some(c) => writeln!(out, "FAIL  {}: {} (n={rank})\n      {c}", o.suite, o.name).unwrap(),
        }
    }
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    writeln!(out, "{passed}/{} checks passed", outcomes.len()).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use tube_cluster::verify::Suite;

    #[test]
    fn failing_checks_show_counterexamples() {
        let r = TubeRank::new(3).unwrap();
        let outcomes = vec![
            CheckOutcome { suite: Suite::Hom, name: "ok", counterexample: None },
            CheckOutcome { suite: Suite::Counts, name: "broken", counterexample: Some("(1,1)".into()) },
        ];
        let table = verify_table(r, &outcomes);
        assert!(table.contains("PASS  hom: ok (n=3)"));
        assert!(table.contains("FAIL  counts: broken (n=3)\n      (1,1)"));
        assert!(table.ends_with("1/2 checks passed\n"));
        let v: serde_json::Value = serde_json::from_str(&verify_json(r, "all", &outcomes, 1)).unwrap();
        assert_eq!(v["exit_code"], 1);
        assert_eq!(v["checks"][1]["counterexample"], "(1,1)");
        assert_eq!(v["checks"][0]["counterexample"], serde_json::Value::Null);
    }
}
