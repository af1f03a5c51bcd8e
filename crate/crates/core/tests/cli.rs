use std::io::Write;
use std::process::{Command, Stdio};

use pidom::cli::run;
use pidom::graph::{generate, parse_edge_list, serialize_edge_list, FamilySpec};
use pidom::{is_valid, Labeling, Variant};

fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("pidom").chain(args.iter().copied());
    let code = run(argv, &mut input, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn edge_list(spec: FamilySpec) -> String {
    serialize_edge_list(&generate(&spec).unwrap())
}

#[test]
fn solve_p6() {
    let (code, out, _) = call(&["solve", "--variant", "pid"], &edge_list(FamilySpec::Path(6)));
    assert_eq!(code, 0);
    let first = out.lines().next().unwrap();
    assert_eq!(first, "variant=pid optimum=4");
}

#[test]
fn solve_json_witness_verifies() {
    let text = edge_list(FamilySpec::product(FamilySpec::Path(2), FamilySpec::Path(5)));
    for variant in ["pid", "italian", "roman", "domination"] {
        let (code, out, _) = call(&["solve", "--variant", variant, "--format", "json"], &text);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["variant"], variant);
        assert!(v["nodes_explored"].as_u64().unwrap() > 0);
        let witness = v["witness"].as_str().unwrap();
        let (code, out, _) = call(&["verify", "--variant", variant, "--labeling", witness], &text);
        assert_eq!((code, out.starts_with("VALID")), (0, true), "{variant}");
        let f: Labeling = witness.parse().unwrap();
        assert_eq!(f.weight() as u64, v["optimum"].as_u64().unwrap());
    }
}

#[test]
fn verify_reports_violations() {
    let p3 = edge_list(FamilySpec::Path(3));
    let (code, out, _) = call(&["verify", "--variant", "pid", "--labeling", "1,0,1"], &p3);
    assert_eq!((code, out.as_str()), (0, "VALID weight=2\n"));

    let p4 = edge_list(FamilySpec::Path(4));
    let (code, out, _) = call(&["verify", "--labeling", "2,0,0,0"], &p4);
    assert_eq!(code, 1);
    assert_eq!(out, "INVALID\nvertex 2 neighbor_sum 0\nvertex 3 neighbor_sum 0\n");

    let (code, _, err) = call(&["verify", "--variant", "domination", "--labeling", "2,0,1"], &p3);
    assert_eq!(code, 1);
    assert!(err.contains("not allowed"));
    let (code, _, err) = call(&["verify", "--labeling", "1,0"], &p3);
    assert_eq!(code, 1);
    assert!(err.contains("2 values"));
}

#[test]
fn formula_output() {
    let (code, out, _) = call(&["formula", "--family", "path", "--n", "9"], "");
    assert_eq!(code, 0);
    assert_eq!(out, "P9: value=5 source=Thm 2.3\n");
    let (_, out, _) = call(&["formula", "--family", "multipartite", "--parts", "3,3,3,3", "--format", "json"], "");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], 12);
    let (code, _, _) = call(&["formula", "--family", "multipartite", "--parts", "3,2"], "");
    assert_eq!(code, 1);
    let (_, out, _) = call(&["formula", "--family", "kmkn", "--m", "2", "--n", "3"], "");
    assert!(out.contains("value=4"));
}

#[test]
fn generate_and_realize() {
    let (code, out, _) = call(&["generate", "--family", "complete", "--n", "3"], "");
    assert_eq!((code, out.as_str()), (0, "3\n0 1\n0 2\n1 2\n"));
    let (code, out, _) = call(&["generate", "--family", "cycle", "--n", "2"], "");
    assert_eq!((code, out.as_str()), (1, ""));

    let (code, plain, _) = call(&["generate", "--kind", "roman", "--a", "5", "--b", "5"], "");
    assert_eq!(code, 0);
    assert!(!plain.contains('#'));
    let (code, named, _) = call(&["realize", "--kind", "roman", "--a", "5", "--b", "5"], "");
    assert_eq!(code, 0);
    assert!(named.contains("# vertex 9 u\n"));
    assert_eq!(
        parse_edge_list(&named).unwrap().without_names(),
        parse_edge_list(&plain).unwrap()
    );

    let (code, out, _) = call(&["realize", "--kind", "induced", "--a", "3", "--b", "4"], "");
    assert_eq!(code, 0);
    assert!(out.starts_with("# subgraph 0 1 2 3 4 5 6\n"));
    assert_eq!(parse_edge_list(&out).unwrap().n(), 9);

    let (code, _, _) = call(&["generate", "--family", "path", "--n", "3", "--kind", "hub", "--a", "3"], "");
    assert_eq!(code, 1);
}

#[test]
fn exit_codes() {
    let (code, _, err) = call(&["realize", "--kind", "roman", "--a", "4", "--b", "4"], "");
    assert_eq!(code, 2);
    assert!(err.contains("a = b even"));
    let (code, _, _) = call(&["formula", "--family", "star", "--n", "0"], "");
    assert_eq!(code, 1);
    let (code, _, _) = call(&["solve"], &edge_list(FamilySpec::Path(25)));
    assert_eq!(code, 3);
    let (code, out, _) = call(&["solve", "--max-vertices", "30", "--variant", "domination"], &edge_list(FamilySpec::Path(25)));
    assert_eq!(code, 0);
    assert!(out.starts_with("variant=domination optimum=9"));
    let (code, _, err) = call(&["solve"], "3\n0 1\n1 1\n");
    assert_eq!(code, 1);
    assert!(err.contains("line 3"));
    let (code, _, _) = call(&["solve"], "0\n");
    assert_eq!(code, 1);
}

#[test]
fn table_sweeps_pass() {
    for (sweep, max) in [("paths", "8"), ("cycles", "8"), ("p2pn", "6"), ("kmkn", "3")] {
        let (code, out, _) = call(&["table", "--sweep", sweep, "--max", max], "");
        assert_eq!(code, 0, "{out}");
        assert!(!out.contains("FAIL"));
    }
}

#[test]
fn binary_reads_file_and_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.txt");
    std::fs::write(&path, edge_list(FamilySpec::Cycle(5))).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_pidom"))
        .args(["solve", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("variant=pid optimum=3"));

    let mut child = Command::new(env!("CARGO_BIN_EXE_pidom"))
        .args(["verify", "--labeling", "1,0,1,0,0"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(edge_list(FamilySpec::Cycle(5)).as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let g = generate(&FamilySpec::Cycle(5)).unwrap();
    let f: Labeling = "1,0,1,0,0".parse().unwrap();
    assert!(!is_valid(&g, &f, Variant::PerfectItalian).unwrap());
}
