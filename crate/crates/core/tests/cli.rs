use std::io::Write as _;

use pseudo_acyclic::cli::{run, EXIT_ERROR, EXIT_OK, EXIT_VIOLATION};
use pseudo_acyclic::{IntMatrix, QuiverMatrix};
use serde_json::Value;
use tempfile::NamedTempFile;

fn quiver_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn a2() -> NamedTempFile {
    quiver_file("# A2\n2\n0 1\n-1 0\n")
}

fn triangle() -> NamedTempFile {
    quiver_file("# oriented triangle\n3\n0 1 -1\n-1 0 1\n1 -1 0\n")
}

fn a3() -> NamedTempFile {
    quiver_file("3\n0 1 0\n-1 0 1\n0 -1 0\n")
}

fn exec(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("pseudo-acyclic").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

fn block(text: &str, header: &str) -> IntMatrix {
    let body: Vec<&str> = text
        .lines()
        .skip_while(|l| *l != header)
        .skip(1)
        .take_while(|l| l.starts_with("  "))
        .collect();
    IntMatrix::parse_text(&body.join("\n")).unwrap()
}

#[test]
fn mutate_a2() {
    let f = a2();
    let (code, out, _) = exec(&["mutate", path(&f), "--seq", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(block(&out, "B:").to_rows(), vec![vec![0, -1], vec![1, 0]]);
    assert_eq!(block(&out, "C:").to_rows(), vec![vec![-1, 0], vec![0, 1]]);
}

#[test]
fn mutate_empty_and_involution_echo_input() {
    let f = a2();
    for seq in ["", "1,1"] {
        let (code, out, _) = exec(&["mutate", path(&f), "--seq", seq, "--json"]);
        assert_eq!(code, EXIT_OK);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["B"], serde_json::json!([[0, 1], [-1, 0]]));
        assert_eq!(v["C"], serde_json::json!([[1, 0], [0, 1]]));
    }
}

#[test]
fn printed_matrices_reparse() {
    let f = triangle();
    let (_, out, _) = exec(&["mutate", path(&f), "--seq", "2,1,3"]);
    let b = block(&out, "B:");
    let q = QuiverMatrix::parse(&format!("3\n{}", b.to_text())).unwrap();
    assert_eq!(q.matrix(), &b);
}

#[test]
fn reflections_a2() {
    let f = a2();
    let (code, out, err) = exec(&["reflections", path(&f), "--seq", "2", "--ordering", "1,2"]);
    assert_eq!(code, EXIT_OK);
    assert!(err.is_empty());
    assert!(out.contains("r_1 = 2,1,2"));
    assert!(out.contains("r_2 = 2"));
    assert_eq!(block(&out, "L:").to_rows(), vec![vec![1, -1], vec![0, 1]]);
}

#[test]
fn reflections_empty_sequence() {
    let f = a3();
    let (_, out, _) = exec(&["reflections", path(&f)]);
    for i in 1..=3 {
        assert!(out.contains(&format!("r_{i} = {i}\n")));
    }
    assert!(block(&out, "L:").is_identity());
}

#[test]
fn bad_ordering_warns_but_runs() {
    let f = triangle();
    let (code, out, err) = exec(&["reflections", path(&f), "--seq", "2", "--ordering", "1,2,3"]);
    assert_eq!(code, EXIT_OK);
    assert!(err.contains("warning"));
    assert!(out.contains("r_1 = 2,1,2"));
}

#[test]
fn gim_json_shape() {
    let f = a2();
    let (code, out, _) = exec(&["gim", path(&f), "--ordering", "1,2", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["gim"], serde_json::json!([[2, 1], [1, 2]]));
    assert_eq!(v["pi"][0], serde_json::json!([[-1, -1], [0, 1]]));
    assert_eq!(v["L"], serde_json::json!([[1, 0], [0, 1]]));
}

#[test]
fn ordering_command() {
    let p4 = quiver_file("4\n0 1 0 0\n-1 0 1 0\n0 -1 0 1\n0 0 -1 0\n");
    assert_eq!(exec(&["ordering", path(&p4)]).1.lines().next(), Some("1,2,3,4"));
    let t = triangle();
    assert_eq!(exec(&["ordering", path(&t)]).1.lines().next(), Some("1,3,2"));
    let square = quiver_file("4\n0 1 0 -1\n-1 0 1 0\n0 -1 0 1\n1 0 -1 0\n");
    let (code, _, err) = exec(&["ordering", path(&square)]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("chordless"), "{err}");
}

#[test]
fn validate_an_command() {
    let t = triangle();
    let (code, out, _) = exec(&["validate-an", path(&t), "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["m"], 1);
    assert_eq!(v["q"], 0);
    let star = quiver_file("4\n0 1 1 1\n-1 0 0 0\n-1 0 0 0\n-1 0 0 0\n");
    assert_eq!(exec(&["validate-an", path(&star)]).0, EXIT_VIOLATION);
}

#[test]
fn verify_triangle_orderings() {
    let t = triangle();
    let (code, out, _) = exec(&["verify", path(&t), "--ordering", "1,3,2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("verdict: PASS"));

    let (code, out, _) = exec(&["verify", path(&t), "--ordering", "1,2,3", "--json"]);
    assert_eq!(code, EXIT_VIOLATION);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "fail");
    let at_two = v["violations"].as_array().unwrap().iter().any(|x| {
        x["witness"] == serde_json::json!([2])
            && x["relation"] == "commuting"
            && x["i"] == 1
            && x["j"] == 3
    });
    assert!(at_two, "{out}");
}

#[test]
fn verify_constructed_ordering_and_budget() {
    let f = a3();
    let (code, out, _) = exec(&["verify", path(&f)]);
    assert_eq!(code, EXIT_OK, "{out}");
    let (code, _, err) = exec(&["verify", path(&f), "--budget", "10"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("10"));
}

#[test]
fn json_and_text_agree() {
    let t = triangle();
    for ord in ["1,3,2", "2,3,1"] {
        let (c1, text, _) = exec(&["verify", path(&t), "--ordering", ord]);
        let (c2, json, _) = exec(&["verify", path(&t), "--ordering", ord, "--json"]);
        assert_eq!(c1, c2);
        let v: Value = serde_json::from_str(&json).unwrap();
        let field = |name: &str| -> String {
            text.lines().find_map(|l| l.strip_prefix(&format!("{name}: "))).unwrap().to_string()
        };
        assert_eq!(field("seeds"), v["seeds"].to_string());
        assert_eq!(field("edges"), v["edges"].to_string());
        assert_eq!(field("violations"), v["violation_count"].to_string());
        assert_eq!(field("verdict").to_lowercase(), v["verdict"].as_str().unwrap());
    }
}

#[test]
fn swap_and_stable_walk() {
    let f = a3();
    let (code, out, _) = exec(&["swap", path(&f), "--pair", "2,3", "--seq", "1"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let (code, _, err) = exec(&["swap", path(&f), "--pair", "1,3"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("|b_13| = 1"), "{err}");
    let (code, out, _) = exec(&["stable-walk", path(&f), "--pair", "1,3", "--after", "2,1", "--json"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("\"verdict\":\"pass\""));
}

#[test]
fn fuzz_echoes_token() {
    let t = triangle();
    let (code, out, _) = exec(&["fuzz", path(&t), "--trials", "20", "--len", "20"]);
    assert_eq!(code, EXIT_OK);
    let token: u64 = out.lines().find_map(|l| l.strip_prefix("token: ")).unwrap().parse().unwrap();
    let (_, again, _) = exec(&["fuzz", path(&t), "--trials", "20", "--len", "20", "--token", &token.to_string()]);
    assert_eq!(out, again);
    let (code, out, _) = exec(&["fuzz", path(&t), "--ordering", "1,2,3", "--token", "3", "--json"]);
    assert_eq!(code, EXIT_VIOLATION);
    assert!(out.contains("\"token\":3"));
}

#[test]
fn counterexample_split() {
    let (code, out, _) = exec(&["counterexample"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("identity: 1,3,2 | 2,1,3 | 3,2,1"));
    assert!(out.contains("not identity: 1,2,3 | 2,3,1 | 3,1,2"));
    let (_, json, _) = exec(&["counterexample", "--json"]);
    let v: Value = serde_json::from_str(&json).unwrap();
    let failing: Vec<&Value> = v["results"].as_array().unwrap().iter().filter(|r| r["identity"] == false).collect();
    assert_eq!(failing.len(), 3);
    assert!(failing.iter().all(|r| r["square"] != serde_json::json!([[1, 0, 0], [0, 1, 0], [0, 0, 1]])));
}

#[test]
fn input_errors_exit_two() {
    let bad = quiver_file("2\n0 1\n1 0\n");
    let (code, _, err) = exec(&["mutate", path(&bad)]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("(1,2)"), "{err}");
    let f = a2();
    assert_eq!(exec(&["mutate", path(&f), "--seq", "3"]).0, EXIT_ERROR);
    assert_eq!(exec(&["reflections", path(&f), "--ordering", "1,1"]).0, EXIT_ERROR);
    assert_eq!(exec(&["mutate", "/nonexistent/quiver.txt"]).0, EXIT_ERROR);
    assert_eq!(exec(&["no-such-command"]).0, EXIT_ERROR);
    assert_eq!(exec(&["--help"]).0, EXIT_OK);
}
