mod common;

use std::collections::BTreeSet;
use std::fs;
use std::process::Command;

use common::*;
use gasketlab::sweep::CSV_HEADER;

fn k3_file(dir: &tempfile::TempDir) -> String {
    let p = dir.path().join("k3.json");
    fs::write(&p, r#"{"n": 3, "edges": [[1,2],[2,3],[1,3]]}"#).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn shipped_corpus_is_the_connected_graphs() {
    let mut expected = BTreeSet::new();
    for n in 2..=4 {
        for e in unlabelled(n) {
            if connected(n, &e) {
                expected.insert((n, canonical_mask(n, &e)));
            }
        }
    }
    let shipped: BTreeSet<(usize, u64)> = read_corpus("conn4.g6")
        .iter()
        .map(|(_, g)| (g.order(), canonical_mask(g.order(), &edge_list(g))))
        .collect();
    assert_eq!(shipped, expected);
    assert_eq!(read_corpus("conn4.g6").len(), 9);
}

#[test]
fn build_counts_example() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = k3_file(&dir);
    let (code, out, _) = cli(&["build", "--base", &k3, "--t", "2", "--kind", "gasket", "--out", "counts"], &[]);
    assert_eq!((code, out.as_str()), (0, "vertices=6 edges=9 components=1\n"));
    let (code, out, _) = cli(&["build", "--edges", "1-2,2-3", "--t", "3", "--kind", "sierpinski"], &[]);
    assert_eq!((code, out.as_str()), (0, "vertices=27 edges=26 components=1\n"));
}

#[test]
fn check_all_passes_on_k3() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = cli(&["check", "--base", &k3_file(&dir), "--t", "3", "--suite", "all"], &[]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("PASS ")));
    let (code, _, err) = cli(&["check", "--base", "Bw", "--t", "2", "--suite", "nonsense"], &[]);
    assert_eq!(code, 1);
    assert!(err.contains("unknown suite"));
}

#[test]
fn neighbors_are_sorted_labels() {
    let (code, out, _) = cli(&["neighbors", "--base", "Bw", "--t", "3", "--vertex", "{1,2}@3"], &[]);
    assert_eq!(code, 0);
    assert_eq!(out, "1.{1,2}@2\n1.{2,3}@2\n2.{1,2}@2\n2.{1,3}@2\n");
    let (code, out, _) = cli(
        &["neighbors", "--edges", "1-2,2-3", "--t", "2", "--vertex", "1.1", "--vertex", "2.1", "--cache", "4"],
        &[],
    );
    assert_eq!(code, 0);
    assert_eq!(out, "1.1:\n{1,2}@2\n\n{1,2}@2:\n1.1\n1.3\n2.2\n");
    let (code, _, err) = cli(&["neighbors", "--base", "Bw", "--t", "2", "--vertex", "1.{1,1}@2"], &[]);
    assert_eq!(code, 1);
    assert!(err.contains("1.{1,1}@2"), "{err}");
}

#[test]
fn color_json_and_methods() {
    let (code, out, _) = cli(&["color", "--base", "Bw", "--t", "2", "--method", "level2", "--out", "json"], &[]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["k"], 3);
    assert_eq!(v["colors"].as_object().unwrap().len(), 6);
    let keys: Vec<&String> = v["colors"].as_object().unwrap().keys().collect();
    assert_eq!(keys[..2], ["1.1", "{1,2}@2"]);
    let (code, out, _) = cli(&["color", "--edges", "1-2", "--t", "3", "--method", "bipartite"], &[]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"k":2,"colors":{"1.1.1":0,"1.{1,2}@2":1,"{1,2}@3":0,"2.{1,2}@2":1,"2.2.2":0}}"#);
    let (code, _, err) = cli(&["color", "--base", "Bw", "--t", "3", "--method", "bipartite"], &[]);
    assert_eq!(code, 1);
    assert!(err.contains("bipartite"), "{err}");
    let (code, _, err) = cli(&["color", "--base", "Bw", "--t", "3", "--method", "level2"], &[]);
    assert_eq!(code, 1);
    assert!(err.contains("--t 2"));
    let (code, out, _) = cli(&["color", "--base", "Bw", "--t", "3", "--method", "exact"], &[]);
    assert_eq!(code, 0);
    assert!(out.starts_with(r#"{"k":3,"#));
}

#[test]
fn json_dump_round_trip_through_export() {
    let dir = tempfile::tempdir().unwrap();
    let (code, json, _) = cli(&["build", "--base", "Bw", "--t", "3", "--out", "json"], &[]);
    assert_eq!(code, 0);
    let path = dir.path().join("g.json");
    fs::write(&path, &json).unwrap();
    let (code, again, _) = cli(&["export", "--import", path.to_str().unwrap(), "--to", "json"], &[]);
    assert_eq!((code, again.as_str()), (0, json.as_str()));
    let (_, dot, _) = cli(&["export", "--import", path.to_str().unwrap(), "--to", "dot"], &[]);
    let (_, direct, _) = cli(&["build", "--base", "Bw", "--t", "3", "--out", "dot"], &[]);
    assert_eq!(dot, direct);
    let (code, g6, _) = cli(&["export", "--edges", "1-2,2-3,1-3", "--to", "graph6"], &[]);
    assert_eq!((code, g6.as_str()), (0, "Bw\n"));
    let (_, base_json, _) = cli(&["export", "--base", "Bw", "--to", "json"], &[]);
    assert_eq!(base_json.trim(), r#"{"n":3,"edges":[[1,2],[1,3],[2,3]]}"#);
}

#[test]
fn vertex_cap_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("gasketlab.toml");
    fs::write(&conf, "vertex_cap = 5\n").unwrap();
    let conf = conf.to_str().unwrap();
    let args = ["--config", conf, "build", "--base", "Bw", "--t", "2"];
    let (code, _, err) = cli(&args, &[]);
    assert_eq!(code, 1);
    assert!(err.contains("cap"), "{err}");
    assert_eq!(cli(&args, &[("GASKETLAB_VERTEX_CAP", "100")]).0, 0);
    let mut with_flag = vec!["--vertex-cap", "100"];
    with_flag.extend(args);
    assert_eq!(cli(&with_flag, &[("GASKETLAB_VERTEX_CAP", "3")]).0, 0);
    assert_eq!(cli(&args[2..], &[("GASKETLAB_CONFIG", conf)]).0, 1);
}

#[test]
fn sweep_output_is_deterministic() {
    let corpus = corpus_path("conn4.g6");
    let corpus = corpus.to_str().unwrap();
    let strip = |csv: &str| -> Vec<String> {
        csv.lines()
            .map(|l| {
                let mut f: Vec<&str> = l.split(',').collect();
                f[11] = "";
                f.join(",")
            })
            .collect()
    };
    let (code, one, _) = cli(&["sweep", "--corpus", corpus, "--t", "3,2", "--jobs", "1"], &[]);
    assert_eq!(code, 0);
    let (_, many, err) = cli(&["sweep", "--corpus", corpus, "--t", "2,3", "--jobs", "4"], &[]);
    assert_eq!(strip(&one), strip(&many));
    assert_eq!(one.lines().next().unwrap(), CSV_HEADER);
    assert_eq!(one.lines().count(), 1 + 18);
    let depths: Vec<&str> = one.lines().skip(1).map(|l| l.split(',').nth(4).unwrap()).collect();
    assert_eq!(depths[..4], ["2", "3", "2", "3"]);
    assert!(err.contains("18 instances: 18 ok, 0 counterexamples, 0 bugs"), "{err}");
}

#[test]
fn sweep_reports_bad_lines_and_skips() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("mixed.g6");
    fs::write(&corpus, "Bw\nnot graph6\n\nC~\n").unwrap();
    let (code, out, err) = cli(
        &["sweep", "--corpus", corpus.to_str().unwrap(), "--t", "2,9", "--out", "jsonl"],
        &[("GASKETLAB_VERTEX_CAP", "1000")],
    );
    assert_eq!(code, 0);
    assert!(err.contains("mixed.g6:2: skipped malformed graph6"), "{err}");
    let records: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 4);
    assert_eq!(records[0]["status"], "ok");
    assert_eq!(records[1]["status"], "skipped-cap");
    assert_eq!(records[1]["order"], serde_json::Value::Null);
    assert_eq!(records[2]["graph6"], "C~");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(cli(&["build", "--t", "2"], &[]).0, 1);
    assert_eq!(cli(&["build", "--base", "Bw", "--t", "2", "--bogus"], &[]).0, 1);
    assert_eq!(cli(&["build", "--base", "missing.json", "--t", "2"], &[]).0, 1);
    assert_eq!(cli(&["build", "--base", "Bw", "--t", "0"], &[]).0, 1);
    assert_eq!(cli(&["--version"], &[]).0, 0);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gasketlab");
    let out = Command::new(bin)
        .args(["build", "--edges", "1-2,2-3,3-1", "--t", "2"])
        .env_remove("GASKETLAB_VERTEX_CAP")
        .env_remove("GASKETLAB_CONFIG")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "vertices=6 edges=9 components=1\n");
    let out = Command::new(bin).arg("sweep").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(bin)
        .args(["build", "--base", "Bw", "--t", "4"])
        .env("GASKETLAB_VERTEX_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}
