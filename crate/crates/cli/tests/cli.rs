use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const BIN: &str = env!("CARGO_BIN_EXE_immersion");

const TRIANGLES: &str = "graph 6 7\n0 1\n0 2\n1 2\n2 3\n3 4\n3 5\n4 5\n";
const K5: &str = "graph 5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn put(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn decompose(dir: &TempDir, graph: &Path, t: &str) -> (PathBuf, serde_json::Value) {
    let out = dir.path().join(format!("out-{t}.json"));
    let res = run(&["decompose", "--t", t, "--in", s(graph), "--out", s(&out)]);
    assert_eq!(res.status.code(), Some(0), "{}", String::from_utf8_lossy(&res.stderr));
    let doc = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    (out, doc)
}

#[test]
fn triangles_decompose_and_verify() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "g.txt", TRIANGLES);
    let (art, doc) = decompose(&dir, &g, "3");
    assert_eq!(doc["kind"], "decomposition");
    assert_eq!(doc["threshold"], 4);
    let res = run(&["verify-dec", "--in", s(&g), "--artifact", s(&art)]);
    assert_eq!(res.status.code(), Some(0));
    assert!(stdout(&res).contains("decomposition ok"));
}

#[test]
fn k5_certifies_and_verifies() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "k5.txt", K5);
    let (art, doc) = decompose(&dir, &g, "3");
    assert_eq!(doc["kind"], "certificate");
    let res = run(&["verify-cert", "--in", s(&g), "--artifact", s(&art), "--t", "3"]);
    assert_eq!(res.status.code(), Some(0));
    // the wrong verifier refuses the artifact kind
    let res = run(&["verify-dec", "--in", s(&g), "--artifact", s(&art)]);
    assert_eq!(res.status.code(), Some(2));
}

#[test]
fn tampered_certificate_names_the_edge() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "k5.txt", K5);
    let (_, mut doc) = decompose(&dir, &g, "3");
    let first = doc["trails"][0]["edges"][0].clone();
    doc["trails"][1]["edges"]
        .as_array_mut()
        .unwrap()
        .push(first.clone());
    let bad = put(&dir, "bad.json", &doc.to_string());
    let res = run(&["verify-cert", "--in", s(&g), "--artifact", s(&bad)]);
    assert_eq!(res.status.code(), Some(1));
    let text = stdout(&res);
    assert!(text.contains("rejected"), "{text}");
    assert!(text.contains(&format!("e{first}")), "{text}");
}

#[test]
fn misreported_cut_is_named() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "g.txt", TRIANGLES);
    let (_, mut doc) = decompose(&dir, &g, "3");
    doc["cuts"][2]["size"] = serde_json::json!(3);
    let bad = put(&dir, "bad.json", &doc.to_string());
    let res = run(&["verify-dec", "--in", s(&g), "--artifact", s(&bad)]);
    assert_eq!(res.status.code(), Some(1));
    assert!(stdout(&res).contains("cut 2"), "{}", stdout(&res));
}

#[test]
fn non_eulerian_digraph_is_an_error() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "d.txt", "digraph 3 2\n0 1\n1 2\n");
    let res = run(&["decompose", "--t", "2", "--in", s(&g)]);
    assert_eq!(res.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&res.stderr).contains("not Eulerian"));
}

#[test]
fn mode_must_match_header() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "g.txt", TRIANGLES);
    let res = run(&["decompose", "--t", "3", "--mode", "directed", "--in", s(&g)]);
    assert_eq!(res.status.code(), Some(2));
    let res = run(&["decompose", "--t", "1", "--in", s(&g)]);
    assert_eq!(res.status.code(), Some(2));
}

#[test]
fn gen_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for p in [&a, &b] {
        let res = run(&[
            "gen", "--family", "simple-eulerian-min-outdeg", "--n", "8", "--floor", "6", "--seed", "11",
            "--out", s(p),
        ]);
        assert_eq!(res.status.code(), Some(0));
    }
    let text = fs::read(&a).unwrap();
    assert_eq!(text, fs::read(&b).unwrap());
    assert!(String::from_utf8_lossy(&text).starts_with("digraph 8 48\n"));

    let res = run(&["gen", "--family", "simple-eulerian-min-outdeg", "--n", "5", "--floor", "5"]);
    assert_eq!(res.status.code(), Some(2));
}

#[test]
fn generated_digraph_round_trips_through_pipeline() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g.txt");
    let res = run(&[
        "gen", "--family", "random-eulerian-digraph", "--n", "7", "--m", "30", "--seed", "3",
        "--out", s(&g),
    ]);
    assert_eq!(res.status.code(), Some(0));
    for t in ["2", "3"] {
        let (art, doc) = decompose(&dir, &g, t);
        let cmd = if doc["kind"] == "certificate" { "verify-cert" } else { "verify-dec" };
        let res = run(&[cmd, "--in", s(&g), "--artifact", s(&art)]);
        assert_eq!(res.status.code(), Some(0), "{}", stdout(&res));
    }
}

#[test]
fn gomory_hu_dump() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "g.txt", TRIANGLES);
    let res = run(&["gomory-hu", "--in", s(&g)]);
    assert_eq!(res.status.code(), Some(0));
    assert_eq!(stdout(&res), "0 2 2\n1 2 2\n2 3 1\n3 5 2\n4 5 2\n");
}

#[test]
fn find_uses_the_oracle() {
    let dir = TempDir::new().unwrap();
    let tri = put(&dir, "tri.txt", "graph 3 3\n0 1\n1 2\n0 2\n");
    let res = run(&["find", "--t", "3", "--in", s(&tri)]);
    assert_eq!(res.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&res.stdout).unwrap();
    assert_eq!(doc["kind"], "certificate");
    let path = put(&dir, "path.txt", "graph 3 2\n0 1\n1 2\n");
    let res = run(&["find", "--t", "3", "--in", s(&path)]);
    let doc: serde_json::Value = serde_json::from_slice(&res.stdout).unwrap();
    assert_eq!(doc["kind"], "none");
}
