use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use crushtacean::GraphDocument;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crushtacean"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", &path]);
    assert_eq!(run(&full).status.code(), Some(0));
    path
}

#[test]
fn classify_pretzel() {
    let dir = tempfile::tempdir().unwrap();
    let p = gen(dir.path(), "p4.json", &["pretzel", "4"]);
    let out = run(&["classify", &p]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["sym_plus_link"]["order"], 32);
    assert_eq!(r["aut_p_order"], 16);
    assert_eq!(r["reflection"]["kind"], "pretzel");
}

#[test]
fn classify_with_seed() {
    let dir = tempfile::tempdir().unwrap();
    let seed = gen(dir.path(), "cube.json", &["cube"]);
    let out_dir = dir.path().join("x");
    let out = run(&["expand", &seed, "-n", "1", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let x = out_dir.join("expand-1.json");
    let r = json(&run(&["classify", x.to_str().unwrap(), "--seed", &seed]));
    assert_eq!(r["signature_screen"], "not-signature");
    assert_eq!(r["sym_plus_complement"]["group"], "S4xZ2");

    let k4 = gen(dir.path(), "k4.json", &["tetrahedron"]);
    let out = run(&["classify", x.to_str().unwrap(), "--seed", &k4]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn validate_k5_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let mut edges = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            edges.push(format!("[{a},{b}]"));
        }
    }
    let path = dir.path().join("k5.json");
    fs::write(
        &path,
        format!(r#"{{"format":"painted-graph/1","vertices":5,"edges":[{}]}}"#, edges.join(",")),
    )
    .unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let reasons = json(&out)["crushtacean"]["reasons"].clone();
    assert!(reasons.as_array().unwrap().contains(&Value::from("nonplanar")));
}

#[test]
fn validate_borromean() {
    let dir = tempfile::tempdir().unwrap();
    let p = gen(dir.path(), "b.json", &["borromean"]);
    let out = run(&["validate", &p]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["crushtacean"]["valid"], true);
    assert_eq!(v["nerve"]["one_painted_per_triangle"], true);
}

#[test]
fn family_from_group() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("fam");
    let out = run(&["family", "--group", "S4xZ2", "--count", "2", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let manifest: Value = serde_json::from_str(&fs::read_to_string(out_dir.join("manifest.json")).unwrap()).unwrap();
    let members = manifest["members"].as_array().unwrap();
    assert_eq!(members.len(), 2);
    for m in members {
        let file = out_dir.join(m["file"].as_str().unwrap());
        let a = json(&run(&["aut", file.to_str().unwrap(), "--painted"]));
        assert_eq!(a["order"], 48);
    }
}

#[test]
fn family_errors() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("fam");
    let d = out_dir.to_str().unwrap();
    assert_eq!(run(&["family", "--group", "A4", "--out", d]).status.code(), Some(2));
    assert_eq!(run(&["family", "--group", "Q8", "--out", d]).status.code(), Some(2));
    assert_eq!(run(&["family", "--out", d]).status.code(), Some(2));
}

#[test]
fn generator_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 5] = [&["borromean"], &["ochain", "5"], &["wheel", "6"], &["antiprism", "4"], &["dodecahedron"]];
    for (i, args) in cases.iter().enumerate() {
        let p = gen(dir.path(), &format!("g{i}.json"), args);
        let text = fs::read_to_string(&p).unwrap();
        assert_eq!(GraphDocument::from_json(&text).unwrap().to_json(), text);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["validate", "/nonexistent/file.json"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{not json").unwrap();
    let out = run(&["aut", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert_eq!(run(&["gen", "pretzel"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "pretzel", "2"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));

    // a star with ten leaves has 10! automorphisms, over the cap
    let edges: Vec<String> = (1..=10).map(|i| format!("[0,{i}]")).collect();
    let star = dir.path().join("star.json");
    fs::write(
        &star,
        format!(r#"{{"format":"painted-graph/1","vertices":11,"edges":[{}]}}"#, edges.join(",")),
    )
    .unwrap();
    assert_eq!(run(&["aut", star.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn corpus_runner_is_sorted() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "c.json", &["pretzel", "3"]);
    gen(dir.path(), "a.json", &["borromean"]);
    gen(dir.path(), "b.json", &["ochain", "3"]);
    gen(dir.path(), "d.json", &["cube"]);
    fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
    let out = run(&["classify", dir.path().to_str().unwrap()]);
    // the bare cube is not painted, so one entry fails verification
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let files: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["file"].as_str().unwrap()).collect();
    assert_eq!(files, ["a.json", "b.json", "c.json", "d.json"]);
    assert_eq!(v[0]["report"]["sym_plus_link"]["order"], 24);
    assert_eq!(v[1]["report"]["sym_plus_link"]["order"], 24);
    assert!(v[3]["error"].is_string());
}

#[test]
fn expand_prints_the_last_step() {
    let dir = tempfile::tempdir().unwrap();
    let w = gen(dir.path(), "w5.json", &["wheel", "5"]);
    let v = json(&run(&["expand", &w, "-n", "2"]));
    assert_eq!(v["vertices"], 60);
    assert_eq!(v["painted"].as_array().unwrap().len(), 30);
}

#[test]
fn dot_output() {
    let dir = tempfile::tempdir().unwrap();
    let p = gen(dir.path(), "b.json", &["borromean"]);
    let out = run(&["render", &p, "--dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph "));
    assert_eq!(text.matches("painted=true").count(), 2);
}

type Segment = ([f64; 2], [f64; 2]);

fn attr(tag: &str, name: &str) -> f64 {
    let key = format!(" {name}=\"");
    let start = tag.find(&key).unwrap() + key.len();
    let end = start + tag[start..].find('"').unwrap();
    tag[start..end].parse().unwrap()
}

fn proper_crossing(a: Segment, b: Segment) -> bool {
    let cross = |o: [f64; 2], p: [f64; 2], q: [f64; 2]| (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0]);
    let shares = |p: [f64; 2], q: [f64; 2]| (p[0] - q[0]).abs() < 1e-6 && (p[1] - q[1]).abs() < 1e-6;
    if shares(a.0, b.0) || shares(a.0, b.1) || shares(a.1, b.0) || shares(a.1, b.1) {
        return false;
    }
    let d1 = cross(b.0, b.1, a.0);
    let d2 = cross(b.0, b.1, a.1);
    let d3 = cross(a.0, a.1, b.0);
    let d4 = cross(a.0, a.1, b.1);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

#[test]
fn svg_drawings_have_no_crossings() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 4] = [&["borromean"], &["pretzel", "6"], &["ochain", "4"], &["dodecahedron"]];
    for (i, args) in cases.iter().enumerate() {
        let p = gen(dir.path(), &format!("g{i}.json"), args);
        let svg_path = dir.path().join(format!("g{i}.svg"));
        let out = run(&["render", &p, "-o", svg_path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let svg = fs::read_to_string(&svg_path).unwrap();
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        let segments: Vec<Segment> = svg
            .lines()
            .filter(|l| l.starts_with("<line"))
            .map(|l| ([attr(l, "x1"), attr(l, "y1")], [attr(l, "x2"), attr(l, "y2")]))
            .collect();
        let doc = GraphDocument::from_json(&fs::read_to_string(&p).unwrap()).unwrap();
        assert_eq!(segments.len(), doc.graph.edge_count());
        assert_eq!(svg.matches("class=\"painted\"").count(), doc.graph.painted().len());
        for (a, &s) in segments.iter().enumerate() {
            for &t in &segments[a + 1..] {
                assert!(!proper_crossing(s, t), "{args:?}: crossing edges");
            }
        }
    }
    // the nerve of a crushtacean is a triangulation and draws the same way
    let p = dir.path().join("g1.json");
    let nerve = dir.path().join("nerve.svg");
    let out = run(&["render", p.to_str().unwrap(), "--nerve", "-o", nerve.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}
