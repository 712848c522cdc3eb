//! Exit-code and output contract of the `ctrldep` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ctrldep::{fixtures, serialize_cfg, Cfg, GraphFormat};
use serde_json::Value;
use tempfile::TempDir;

fn ctrldep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ctrldep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, g: &Cfg) -> String {
    let format = if name.ends_with(".json") {
        GraphFormat::Json
    } else {
        GraphFormat::EdgeList
    };
    let path: PathBuf = dir.join(name);
    std::fs::write(&path, serialize_cfg(g, format)).unwrap();
    path.to_str().unwrap().to_owned()
}

fn report(args: &[&str]) -> Value {
    let o = ctrldep(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn analyze_nested_diamond_variants() {
    let dir = TempDir::new().unwrap();
    let nested_diamond = write(
        dir.path(),
        "nested_diamond.json",
        &fixtures::nested_diamond(),
    );
    let correct = serde_json::json!([["1", "2"], ["1", "5"], ["2", "3"], ["2", "4"]]);
    for algo in ["ntscd-new", "ntscd-vp", "ntscd-rang-fixed"] {
        let r = report(&["analyze", "--input", &nested_diamond, "--algo", algo]);
        assert_eq!(r["ntscd"], correct, "{algo}");
        assert_eq!(r["algo"], algo);
        assert!(r.get("dod").is_none());
        assert_eq!(
            r["graph"],
            serde_json::json!({"nodes": 6, "edges": 7, "predicates": 2})
        );
    }
    let r = report(&[
        "analyze",
        "--input",
        &nested_diamond,
        "--algo",
        "ntscd-rang",
        "--policy",
        "fifo",
    ]);
    let pairs = r["ntscd"].as_array().unwrap();
    assert!(pairs.contains(&serde_json::json!(["1", "6"])));
    assert!(!pairs.contains(&serde_json::json!(["1", "5"])));
    let r = report(&[
        "analyze",
        "--input",
        &nested_diamond,
        "--algo",
        "ntscd-rang",
        "--policy",
        "order:3,4,2,5,6",
    ]);
    assert_eq!(r["ntscd"], correct);
}

#[test]
fn analyze_dod_and_edge_list_input() {
    let dir = TempDir::new().unwrap();
    let two_entry_cycle = write(
        dir.path(),
        "two_entry_cycle.txt",
        &fixtures::two_entry_cycle(),
    );
    let r = report(&["analyze", "--input", &two_entry_cycle, "--algo", "dod-new"]);
    assert_eq!(r["dod"], serde_json::json!([["a", "b", "c"]]));
    let r = report(&[
        "analyze",
        "--input",
        &two_entry_cycle,
        "--format",
        "edgelist",
        "--algo",
        "ntscd-new",
    ]);
    assert_eq!(r["ntscd"], serde_json::json!([]));
}

#[test]
fn analyze_closure_and_its_preconditions() {
    let dir = TempDir::new().unwrap();
    let g = write(
        dir.path(),
        "g.json",
        &fixtures::two_entry_cycle_with_entry(),
    );
    let r = report(&[
        "analyze",
        "--input",
        &g,
        "--algo",
        "cc",
        "--criterion",
        "s,b,c",
        "--start",
        "s",
    ]);
    assert_eq!(r["closure"], serde_json::json!(["a", "b", "c", "s"]));

    let o = ctrldep(&[
        "analyze",
        "--input",
        &g,
        "--algo",
        "cc",
        "--criterion",
        "b,c",
        "--start",
        "s",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let o = ctrldep(&[
        "analyze",
        "--input",
        &g,
        "--algo",
        "cc",
        "--criterion",
        "b,c",
        "--start",
        "b",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let o = ctrldep(&[
        "analyze",
        "--input",
        &g,
        "--algo",
        "cc",
        "--criterion",
        "b,c",
        "--start",
        "b",
        "--allow-unreachable",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = ctrldep(&["analyze", "--input", &g, "--algo", "cc"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "a b\na c\na d\n").unwrap();
    let o = ctrldep(&[
        "analyze",
        "--input",
        bad.to_str().unwrap(),
        "--algo",
        "ntscd-new",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(
        err.contains("line 3") && err.contains("out-degree"),
        "{err}"
    );

    let o = ctrldep(&[
        "analyze",
        "--input",
        "/nonexistent/graph.json",
        "--algo",
        "ntscd-new",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = ctrldep(&[
        "analyze",
        "--input",
        bad.to_str().unwrap(),
        "--algo",
        "bogus",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn diff_contract() {
    let dir = TempDir::new().unwrap();
    let nested_diamond = write(
        dir.path(),
        "nested_diamond.json",
        &fixtures::nested_diamond(),
    );
    let o = ctrldep(&[
        "diff",
        "--input",
        &nested_diamond,
        "--algo",
        "ntscd-new",
        "--algo",
        "ntscd-rang-fixed",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "");

    let o = ctrldep(&[
        "diff",
        "--input",
        &nested_diamond,
        "--algo",
        "ntscd-new",
        "--algo",
        "ntscd-rang",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "-(1,5)\n+(1,6)\n");

    let cycle_with_exit = write(
        dir.path(),
        "cycle_with_exit.json",
        &fixtures::cycle_with_exit(),
    );
    let o = ctrldep(&[
        "diff",
        "--input",
        &cycle_with_exit,
        "--algo",
        "dod-formula-fixed",
        "--algo",
        "dod-formula",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "+(p,a,b)\n");

    let o = ctrldep(&[
        "diff",
        "--input",
        &nested_diamond,
        "--algo",
        "ntscd-new",
        "--algo",
        "dod-new",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = ctrldep(&["diff", "--input", &nested_diamond, "--algo", "ntscd-new"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_shapes() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("w.json");
    let o = ctrldep(&[
        "gen",
        "--shape",
        "dod-worst",
        "--nodes",
        "16",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&[
        "analyze",
        "--input",
        out.to_str().unwrap(),
        "--algo",
        "dod-new",
    ]);
    assert_eq!(r["dod"].as_array().unwrap().len(), 128);

    let o = ctrldep(&[
        "gen", "--shape", "random", "--nodes", "500", "--edges", "750", "--seed", "7",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let g = ctrldep::parse_cfg(&stdout(&o), GraphFormat::Json).unwrap();
    assert_eq!((g.node_count(), g.edge_count()), (500, 750));
    let again = ctrldep(&[
        "gen", "--shape", "random", "--nodes", "500", "--edges", "750", "--seed", "7",
    ]);
    assert_eq!(o.stdout, again.stdout);

    let out = dir.path().join("r.txt");
    let o = ctrldep(&[
        "gen",
        "--shape",
        "reducible",
        "--depth",
        "4",
        "--seed",
        "1",
        "--format",
        "edgelist",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&[
        "analyze",
        "--input",
        out.to_str().unwrap(),
        "--algo",
        "dod-new",
    ]);
    assert_eq!(r["dod"], serde_json::json!([]));

    let o = ctrldep(&["gen", "--shape", "random", "--nodes", "3", "--edges", "9"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ctrldep(&["gen", "--shape", "dod-worst", "--nodes", "10"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_contract() {
    let dir = TempDir::new().unwrap();
    let o = ctrldep(&[
        "check",
        "--count",
        "200",
        "--max-nodes",
        "12",
        "--seed",
        "42",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let nested_diamond = write(
        dir.path(),
        "nested_diamond.json",
        &fixtures::nested_diamond(),
    );
    let o = ctrldep(&["check", "--input", &nested_diamond]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ntscd-rang"), "{}", stdout(&o));

    let o = ctrldep(&["check", "--count", "1", "--max-nodes", "30"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bench_contract() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("b.csv");
    let o = ctrldep(&[
        "bench",
        "--nodes",
        "100",
        "--edges",
        "50..150:50",
        "--reps",
        "2",
        "--algos",
        "ntscd-new,dod-new",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("algo,shape,nodes,edges,seed,reps,mean_us,min_us")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 6);
    assert!(rows[0].starts_with("ntscd-new,random,100,50,0,2,"));

    let o = ctrldep(&["bench", "--nodes", "100", "--edges", "50", "--algos", ""]);
    assert_eq!(o.status.code(), Some(2));
    let o = ctrldep(&[
        "bench", "--nodes", "100", "--edges", "9..1", "--algos", "dod-new",
    ]);
    assert_eq!(o.status.code(), Some(2));
}
