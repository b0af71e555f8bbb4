use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use rep11::automata::Dfa;
use rep11::{split_blocks, verify, Graph, Word, WordFormat};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_rep11"));
    c.env_remove("REP11_STATE_CAP");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn graph_file(name: &str, g: &Graph) -> String {
    let dir: PathBuf = std::env::temp_dir().join(format!("rep11-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, g.to_text()).unwrap();
    path.to_string_lossy().into_owned()
}

fn gstar() -> String {
    graph_file("gstar.txt", &Graph::triangle_plus_isolated())
}

#[test]
fn decode_examples() {
    let o = run(&["decode", "123vvv", "--alphabet", "1", "2", "3", "v"]);
    assert_eq!(o.status.code(), Some(0));
    let g = Graph::parse(&stdout(&o)).unwrap();
    assert!(g.equals(&Graph::triangle_plus_isolated()));

    let o = run(&["decode", "1212", "--alphabet", "1", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "edge: 1 2"));

    let o = run(&["decode", "123", "--alphabet", "1", "2", "3", "v"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains('v'));
}

#[test]
fn decode_reads_stdin_and_token_words() {
    let mut child = bin()
        .args(["decode", "-", "--alphabet", "x1", "x2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"x1 x1 x2 x2\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let g = Graph::parse(&stdout(&o)).unwrap();
    assert_eq!(g.order(), 2);
    assert_eq!(g.edge_count(), 0);
}

#[test]
fn verify_examples() {
    let g = gstar();
    let o = run(&["verify", &g, "12vvv3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("true"));

    let o = run(&["verify", &g, "123v"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("false"));
    assert!(text.contains("pair (1,v): 0 squares, adjacency forced"));

    let k2 = graph_file("k2.txt", &Graph::complete(2));
    assert_eq!(run(&["verify", &k2, "12"]).status.code(), Some(0));
    assert_eq!(run(&["verify", &k2, "1x"]).status.code(), Some(2));
}

#[test]
fn repnum_examples() {
    let g = gstar();
    let o = run(&["repnum", &g]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("6"));
    let witness = Word::parse_inferred(lines.next().unwrap(), WordFormat::Compact).unwrap();
    assert_eq!(witness.len(), 6);
    assert!(verify(&Graph::triangle_plus_isolated(), &witness));

    let o = run(&["repnum", &g, "--permutational"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("3"));
    let w = lines.next().unwrap();
    assert_eq!(w.chars().count(), 12);
    let gs = Graph::triangle_plus_isolated();
    let word = Word::parse(w, gs.vertices(), WordFormat::Compact).unwrap();
    let pw = split_blocks(&word, gs.vertices()).unwrap();
    assert!(verify(&gs, pw.word()));

    let k3 = graph_file("k3.txt", &Graph::complete(3));
    let o = run(&["repnum", &k3, "--permutational"]);
    assert_eq!(stdout(&o).lines().next(), Some("1"));
}

#[test]
fn repnum_bound_too_small_is_exit_3() {
    let o = run(&["repnum", &gstar(), "--max", "5"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn cubefree_examples() {
    let a = ["--alphabet", "1", "2", "3", "v"];
    let o = run(&[&["cubefree", "123v123v123v"][..], &a[..]].concat());
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("123v123v"));
    assert_eq!(text.lines().last(), Some("removals: 1"));

    let o = run(&[&["cubefree", "123vv123123v"][..], &a[..]].concat());
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("123vv123123v"));
    assert_eq!(text.lines().last(), Some("removals: 0"));

    let o = run(&[&["cubefree", "123v123v123"][..], &a[..]].concat());
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[&["cubefree", "1123"][..], &a[..]].concat());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dfa_dot_is_deterministic() {
    let g = gstar();
    let a = run(&["dfa", &g, "--emit", "dot"]);
    let b = run(&["dfa", &g, "--emit", "dot"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("digraph"));
    assert!(text.contains("peripheries=2"));
}

#[test]
fn dfa_json_round_trips_and_accepts_representations() {
    let g = gstar();
    for extra in [&[][..], &["--minimize"][..], &["--permutational"][..]] {
        let o = run(&[&["dfa", &g, "--emit", "json"][..], extra].concat());
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        let d = Dfa::from_json(&text).unwrap();
        assert_eq!(d.to_json().trim(), text.trim());
        let gs = Graph::triangle_plus_isolated();
        let w = Word::parse("123vv123123v", gs.vertices(), WordFormat::Compact).unwrap();
        assert!(d.member(&w).unwrap());
        let bad = Word::parse("123v", gs.vertices(), WordFormat::Compact).unwrap();
        assert!(!d.member(&bad).unwrap());
    }
}

#[test]
fn minimized_dfa_is_no_larger() {
    let g = gstar();
    let full = Dfa::from_json(&stdout(&run(&["dfa", &g, "--emit", "json"]))).unwrap();
    let min = Dfa::from_json(&stdout(&run(&["dfa", &g, "--emit", "json", "--minimize"]))).unwrap();
    assert!(min.state_count() <= full.state_count());
}

#[test]
fn state_cap_is_exit_3() {
    let g = gstar();
    let o = bin()
        .args(["dfa", &g, "--emit", "json"])
        .env("REP11_STATE_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["dfa", &g, "--emit", "dot", "--cap", "3"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn figure1_diagnostic() {
    let o = run(&["dfa", "--figure1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "abab\tprinted=false\tdefinition=true"));
    assert!(text.lines().any(|l| l == "aa\tprinted=true\tdefinition=false"));
}

#[test]
fn detect_examples() {
    let o = run(&["detect", "123v123v123", "--squares"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("(0,4)"));

    let o = run(&["detect", "123v123v123v", "--cubes"]);
    assert_eq!(stdout(&o).trim(), "(0,4)");

    let o = run(&["detect", "123v123v123", "--cubes"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "");
}

#[test]
fn bad_graph_file_is_exit_2() {
    let dir = std::env::temp_dir().join(format!("rep11-cli-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.txt");
    std::fs::write(&path, "vertices: 1 2\nedge: 1 3\n").unwrap();
    let o = run(&["verify", path.to_str().unwrap(), "12"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn audit_reports_all_pass() {
    let o = run(&["audit"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let entries = report["entries"].as_array().unwrap();
    assert!(!entries.is_empty());
    assert!(entries.iter().all(|e| e["verdict"] == "pass"));
    assert_eq!(report["min_length_G_star"], 6);
    assert_eq!(report["perm_rep_number_G_star"], 3);
}

#[test]
fn extended_audit_is_reproducible() {
    let args = ["audit", "--extended", "--seed", "7", "--samples", "500"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    let strip = |o: &Output| {
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        for e in v["entries"].as_array_mut().unwrap() {
            e["elapsed_ms"] = 0.into();
        }
        v
    };
    assert_eq!(strip(&a), strip(&b));
}
