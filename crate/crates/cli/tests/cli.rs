use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn berge(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_berge"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixtures(dir: &Path) {
    let files = [
        ("k3.g", "graph 3\ne 0 1\ne 1 2\ne 0 2\n"),
        ("k2.g", "graph 2\ne 0 1\n"),
        ("c4.g", "graph 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n"),
        ("c7.g", "graph 7\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 0 6\n"),
        ("k222.g", "graph 6\ne 0 2\ne 0 3\ne 0 4\ne 0 5\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ne 2 4\ne 2 5\ne 3 4\ne 3 5\n"),
        ("p4.g", "graph 4\ne 0 1\ne 1 2\ne 2 3\n"),
        ("hyper.g", "graph 4 3\ne 0 1 2\ne 1 2 3\n"),
        ("bad.g", "graph 3\ne 0 1\ne 1 x\n"),
        ("loop.g", "graph 3\ne 1 1\n"),
        ("star5.h", "hypergraph 5 2\n0 1\n0 2\n0 3\n0 4\n"),
        ("path5.h", "hypergraph 5 2\n0 1\n1 2\n2 3\n3 4\n"),
        ("two_edges.h", "hypergraph 4 3\n0 1 2\n0 1 3\n"),
        ("tri.h", "hypergraph 4 3\n0 1 2\n1 2 3\n0 2 3\n"),
        ("dup.h", "hypergraph 4 3\n0 1 2\n2 1 0\n"),
        ("empty5.h", "hypergraph 5 3\n"),
    ];
    for (name, text) in files {
        fs::write(dir.join(name), text).unwrap();
    }
}

#[test]
fn exit_code_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fixtures(d);
    let cases: &[(&[&str], i32, &str)] = &[
        (&["classify", "--pattern", "c7.g"], 0, "type: I"),
        (&["classify", "--pattern", "c4.g"], 0, "multipartite: [2,2]"),
        (&["classify", "--pattern", "bad.g"], 2, "line 3"),
        (&["classify", "--pattern", "loop.g"], 2, "line 2"),
        (&["classify", "--pattern", "missing.g"], 2, "cannot read"),
        (&["detect", "--pattern", "k3.g", "--host", "tri.h"], 0, "edge: (0,1) -> {0,1,2}"),
        (&["detect", "--pattern", "k3.g", "--host", "two_edges.h"], 1, "no Berge-copy"),
        (&["detect", "--pattern", "k3.g", "--host", "tri.h", "--oracle"], 0, "oracle: agrees"),
        (&["detect", "--pattern", "k3.g", "--host", "dup.h"], 2, "line 3"),
        (&["free", "--pattern", "k3.g", "--host", "two_edges.h"], 0, "berge-free: true"),
        (&["free", "--pattern", "k3.g", "--host", "tri.h"], 1, "berge-free: false"),
        (&["saturated", "--pattern", "k3.g", "--host", "star5.h", "--mode", "exhaustive"], 0, "saturated: true"),
        (&["saturated", "--pattern", "k3.g", "--host", "path5.h"], 1, "violation:"),
        (&["saturated", "--pattern", "k3.g", "--host", "empty5.h"], 1, "violation: {0,1,2}"),
        (&["saturated", "--pattern", "k3.g", "--host", "star5.h", "--mode", "sampled", "--samples", "3", "--seed", "1"], 0, "sampled: true"),
        (&["saturated", "--pattern", "hyper.g", "--host", "star5.h"], 2, "uniformity"),
        (&["oversaturated", "--pattern", "k2.g", "--host", "empty5.h"], 0, "oversaturated: true"),
        (&["oversaturated", "--pattern", "k3.g", "--host", "empty5.h"], 1, "oversaturated: false"),
        (&["oversaturated", "--pattern", "k3.g", "--host", "star5.h"], 2, "above core uniformity"),
        (&["greedy", "--pattern", "k3.g", "--n", "4", "--r", "2"], 0, "0 1\n0 2\n0 3\n"),
        (&["greedy", "--pattern", "k3.g", "--n", "4", "--r", "2", "--host", "tri.h"], 2, "base is on"),
        (&["greedy", "--pattern", "k3.g", "--n", "2", "--r", "3"], 2, "error"),
        (&["satmin", "--pattern", "k3.g", "--n", "5", "--r", "2"], 0, "sat: 4"),
        (&["satmin", "--pattern", "k3.g", "--n", "5", "--r", "2", "--budget", "2"], 1, "budget exceeded"),
        (&["satmin", "--pattern", "k3.g", "--n", "9", "--r", "2"], 2, "exceeds"),
        (&["construct", "--method", "auto", "--pattern", "c7.g", "--n", "95", "--r", "6"], 0, "method: fgood"),
        (&["construct", "--method", "fgood", "--pattern", "k3.g", "--n", "95", "--r", "6"], 2, "v >= 7"),
        (&["construct", "--method", "multipartite-case2", "--pattern", "k3.g", "--n", "20", "--r", "5"], 2, "N = sum"),
        (&["construct", "--method", "cut-edge", "--pattern", "p4.g", "--n", "9", "--r", "3", "--out", "p4"], 0, "hyperedges: 4"),
        (&["construct", "--method", "bogus", "--pattern", "p4.g", "--n", "9", "--r", "3"], 2, "unknown method"),
        (&["scan", "--method", "multipartite-case1", "--pattern", "k222.g", "--r", "3", "--range", "11:15:2"], 0, "11,multipartite-case1,37,,1,0"),
        (&["scan", "--method", "fgood", "--pattern", "c7.g", "--r", "6", "--range", "5:1:1"], 2, "empty"),
        (&["frobnicate"], 2, ""),
    ];
    assert!(cases.len() >= 20);
    for (args, code, needle) in cases {
        let out = berge(d, args);
        let text = format!(
            "{}{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        );
        assert_eq!(out.status.code(), Some(*code), "{args:?}\n{text}");
        assert!(text.contains(needle), "{args:?} lacks {needle:?}\n{text}");
        if *code == 2 && !args.is_empty() && args[0] != "frobnicate" {
            assert_eq!(String::from_utf8_lossy(&out.stderr).trim().lines().count(), 1, "{args:?}");
        }
    }
}

#[test]
fn construct_writes_sidecars() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fixtures(d);
    let out = berge(d, &["construct", "--pattern", "c7.g", "--n", "95", "--r", "6"]);
    assert!(out.status.success());
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(d.join("c7-n95-r6.manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["method"], "fgood");
    assert_eq!(manifest["counts"]["base_hyperedges"], 30);
    let layout: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(d.join("c7-n95-r6.layout.json")).unwrap()).unwrap();
    assert_eq!(layout["C"].as_array().unwrap().len(), 5);
    assert_eq!(layout["blocks"].as_array().unwrap().len(), 30);
    assert!(fs::read_to_string(d.join("c7-n95-r6.h")).unwrap().starts_with("hypergraph 95 6\n"));

    // no layout for constructions without blocks
    let out = berge(d, &["construct", "--method", "oversaturated", "--pattern", "k3.g", "--n", "7", "--r", "3", "--out", "ov"]);
    assert!(out.status.success());
    assert!(d.join("ov.h").exists() && d.join("ov.manifest.json").exists());
    assert!(!d.join("ov.layout.json").exists());
    let out = berge(d, &["oversaturated", "--pattern", "k3.g", "--host", "ov.h"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn scan_rows_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fixtures(d);
    let out = berge(d, &["scan", "--method", "fgood", "--pattern", "c7.g", "--r", "6", "--range", "89:98:3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,method,base_count,completed_count,residue_class,wall_time_ms");
    // m < 30 below n = 95: rows stay, with empty counts
    assert_eq!(lines[1], "89,fgood,,,2,0");
    assert_eq!(lines[3], "95,fgood,30,,2,0");
    assert_eq!(lines[4], "98,fgood,31,,2,0");
    let out = berge(d, &["scan", "--method", "greedy-colex", "--pattern", "k3.g", "--r", "2", "--range", "4:8", "--complete"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\n6,greedy-colex,5,5,0,0\n"), "{text}");
}
