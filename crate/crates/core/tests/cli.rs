use switchkit::cli::{run, Output};
use switchkit::io::emit_graph6;
use switchkit::patterns::{cycle, named};
use switchkit::Graph;

fn call(args: &[&str], input: &str) -> Output {
    let mut argv = vec!["switchkit"];
    argv.extend_from_slice(args);
    run(argv, input)
}

fn g6(name: &str) -> String {
    emit_graph6(&named(name).unwrap())
}

#[test]
fn switch_c4_at_opposite_vertices() {
    let out = call(&["switch", "--set", "0,2"], &emit_graph6(&cycle(4)));
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, format!("{}\n", emit_graph6(&Graph::new(4))));
}

#[test]
fn upper_split_c4_prints_a_verified_witness() {
    let c4 = cycle(4);
    let out = call(&["upper", "split"], &emit_graph6(&c4));
    assert_eq!(out.code, 0);
    let set: Vec<usize> = out.stdout.trim().split(',').map(|s| s.parse().unwrap()).collect();
    let a = switchkit::VertexSet::from_indices(4, set).unwrap();
    assert!(switchkit::recognize::is_split(&c4.switch(&a)));
}

#[test]
fn upper_none_exits_one() {
    // every switch of C4+C4 keeps an induced 2K2 or C4
    let out = call(&["upper", "split"], &g6("c4+c4"));
    assert_eq!(out.stdout, "none\n");
    assert_eq!(out.code, 1);
}

#[test]
fn empty_witness_is_braces() {
    let out = call(&["upper", "split"], &g6("k4"));
    assert_eq!((out.code, out.stdout.as_str()), (0, "{}\n"));
}

#[test]
fn batch_exit_is_no_when_any_input_is_no() {
    let input = format!("{}\n{}\n", g6("p4"), g6("c5"));
    let out = call(&["lower", "chordal"], &input);
    assert_eq!(out.code, 1);
    assert_eq!(out.stdout, "yes (1,1,1,1)\nno\n");
    let input = format!("{}\n{}\n", g6("p4"), g6("k3"));
    assert_eq!(call(&["lower", "chordal"], &input).code, 0);
}

#[test]
fn oracle_flag_matches_recognizer() {
    for name in ["p4", "c5", "bull", "house", "k3_3", "net"] {
        for class in ["weakly-chordal", "line", "bipartite", "outerplanar"] {
            let fast = call(&["lower", class], &g6(name));
            let slow = call(&["lower", class, "--oracle", "--parallel"], &g6(name));
            assert_eq!(fast.code, slow.code, "{name} {class}");
        }
        let fast = call(&["upper", "paw-free"], &g6(name));
        let slow = call(&["upper", "paw-free", "--oracle"], &g6(name));
        assert_eq!(fast.code, slow.code, "{name}");
    }
}

#[test]
fn enumerate_matches_oracle_listing() {
    for name in ["c4", "c5", "bull", "p4+k1"] {
        let a = call(&["upper", "pseudo-split", "--enumerate"], &g6(name));
        let b = call(&["upper", "pseudo-split", "--enumerate", "--oracle"], &g6(name));
        assert_eq!(a.stdout, b.stdout, "{name}");
    }
    assert_eq!(call(&["upper", "bipartite", "--enumerate"], &g6("c4")).code, 2);
}

#[test]
fn json_output_parses() {
    let out = call(&["--json", "upper", "star-costar", "--p", "2", "--q", "3"], &g6("claw"));
    let v: serde_json::Value = serde_json::from_str(out.stdout.trim()).unwrap();
    assert_eq!(v["class"], "star-costar(p=2,q=3)");
    let out = call(&["lower", "line", "--json"], &g6("p4"));
    let v: serde_json::Value = serde_json::from_str(out.stdout.trim()).unwrap();
    assert_eq!(v["member"], true);
}

#[test]
fn class_listing_and_equivalence() {
    let out = call(&["class"], &emit_graph6(&cycle(5)));
    assert_eq!(out.stdout.lines().count(), 4);
    let bull = g6("bull");
    assert_eq!(call(&["class", "--with", &bull], &emit_graph6(&cycle(5))).code, 0);
    assert_eq!(call(&["class", "--with", &bull], &emit_graph6(&cycle(4))).code, 1);
}

#[test]
fn oracle_predicates() {
    let c5 = emit_graph6(&cycle(5));
    // no switch of C5 has an induced C4, but P4+K1 has a P4
    assert_eq!(call(&["oracle", "lower", "free:c4"], &c5).code, 0);
    assert_eq!(call(&["oracle", "lower", "free:p4"], &c5).code, 1);
    assert_eq!(call(&["oracle", "upper", "free:c5"], &c5).code, 0);
    let all = call(&["oracle", "upper", "split", "--all"], &c5);
    assert_eq!(all.stdout.lines().count(), 15);
    assert_eq!(call(&["oracle", "upper", "free:zz"], &c5).code, 2);
}

#[test]
fn reduce_prints_graph_then_roles() {
    let out = call(&["reduce", "p10"], "nae 5 5 1\n1 2 3 4 5\n");
    assert_eq!(out.code, 0);
    let (first, rest) = out.stdout.split_once('\n').unwrap();
    assert_eq!(switchkit::io::parse_graph6(first).unwrap().n(), 55);
    let roles: serde_json::Value = serde_json::from_str(rest).unwrap();
    assert_eq!(roles["target"], "P10");
    let out = call(&["reduce", "c7"], "nae 5 5 1\n1 2 3 4 5\n");
    assert_eq!(out.code, 2);
}

#[test]
fn verify_single_assignments() {
    let f = "nae 3 3 1\n1 2 3\n";
    assert_eq!(call(&["verify", "c7", "--assignment", "TFT"], f).code, 0);
    let out = call(&["verify", "c7", "--assignment", "TTT"], f);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("pattern="));
    assert_eq!(call(&["verify", "c7", "--assignment", "TT"], f).code, 2);
}

#[test]
fn budget_exhaustion_exits_three() {
    let out = call(&["verify", "c7", "--assignment", "TTT", "--budget", "1"], "nae 3 3 1\n1 2 3\n");
    assert_eq!(out.code, 3, "{}", out.stderr);
}

#[test]
fn too_large_exits_three() {
    let big = emit_graph6(&Graph::new(30));
    assert_eq!(call(&["upper", "bipartite"], &big).code, 3);
    assert_eq!(call(&["oracle", "lower", "free:c4"], &big).code, 3);
}

#[test]
fn malformed_input_exits_two() {
    for (args, input) in [
        (&["lower", "chordal"][..], "~~~\n"),
        (&["lower", "chordal"][..], ""),
        (&["switch", "--set", "9"][..], "Cr\n"),
        (&["switch", "--set", "x"][..], "Cr\n"),
        (&["verify", "p10"][..], "nae 5 5\n"),
        (&["patterns", "k0x"][..], ""),
        (&["bogus"][..], ""),
    ] {
        let out = call(args, input);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn edge_list_format() {
    let out = call(&["--format", "edges", "switch", "--set", "0"], "3 2\n0 1\n1 2\n");
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "3 2\n0 2\n1 2\n");
}

#[test]
fn output_is_deterministic() {
    let input = ["c4", "c5", "bull", "house", "net", "k3_3"].map(g6).join("\n");
    for args in [
        &["upper", "split", "--enumerate"][..],
        &["upper", "paw-free", "--json"][..],
        &["lower", "line"][..],
        &["oracle", "upper", "bipartite", "--parallel"][..],
        &["class"][..],
    ] {
        let a = call(args, &input);
        let b = call(args, &input);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn file_input() {
    let dir = std::env::temp_dir().join(format!("switchkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c4.g6");
    std::fs::write(&path, "Cr\n").unwrap();
    let out = call(&["upper", "bipartite", "--file", path.to_str().unwrap()], "");
    assert_eq!(out.code, 0);
    assert_eq!(call(&["upper", "bipartite", "--file", "/nonexistent/x"], "").code, 2);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn binary_round_trip() {
    use std::io::Write;
    use std::process::{Command, Stdio};
    let mut child = Command::new(env!("CARGO_BIN_EXE_switchkit"))
        .args(["switch", "--set", "0,2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let c4 = format!("{}\n", emit_graph6(&cycle(4)));
    child.stdin.take().unwrap().write_all(c4.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "C?\n");
    let out = Command::new(env!("CARGO_BIN_EXE_switchkit")).arg("patterns").output().unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("paw "));
}
