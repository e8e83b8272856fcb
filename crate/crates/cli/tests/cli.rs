use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperkirchhoff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Whitespace-separated fields of the first row whose leading fields match.
fn row(text: &str, prefix: &[&str]) -> Vec<String> {
    text.lines()
        .map(|l| l.split_whitespace().map(str::to_string).collect::<Vec<_>>())
        .find(|f| f.len() >= prefix.len() && f.iter().zip(prefix).all(|(a, b)| a == b))
        .unwrap_or_else(|| panic!("no row {prefix:?} in\n{text}"))
}

#[test]
fn verify_negative_triangle() {
    let f = fixture("negative_triangle.json");
    let o = run(&["verify", f.to_str().unwrap()]);
    let out = stdout(&o);
    assert!(o.status.success(), "{out}");
    assert_eq!(row(&out, &["sums", "det(L)"])[2..], ["4", "4", "pass"]);
    assert!(!out.contains("FAIL"));
}

#[test]
fn verify_balanced_triangle() {
    let f = fixture("balanced_triangle.json");
    let o = run(&["verify", f.to_str().unwrap()]);
    let out = stdout(&o);
    assert!(o.status.success(), "{out}");
    assert_eq!(row(&out, &["sums", "det(L)"])[2..], ["0", "0", "pass"]);
}

#[test]
fn verify_hypergraph_skips_activation() {
    let f = fixture("hypergraph.json");
    let o = run(&["verify", f.to_str().unwrap()]);
    let out = stdout(&o);
    assert!(o.status.success(), "{out}");
    assert!(row(&out, &["activation"])
        .join(" ")
        .ends_with("skipped: not bidirected"));
    assert_eq!(row(&out, &["sums", "det(L)"]).last().unwrap(), "pass");
}

#[test]
fn verify_is_deterministic() {
    let f = fixture("k4.json");
    let a = run(&["verify", "--seed", "7", f.to_str().unwrap()]);
    let b = run(&["verify", "--seed", "7", f.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.status.success());
}

#[test]
fn verify_respects_the_exhaustive_limit() {
    let f = fixture("k4.json");
    let o = run(&["--max-exhaustive", "3", "verify", f.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("exceeds --max-exhaustive 3"));
    let o = run(&["--max-exhaustive", "3", "det-l", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_csv_has_one_record_per_check() {
    let f = fixture("k2.json");
    let o = run(&["verify", "--format", "csv", f.to_str().unwrap()]);
    let out = stdout(&o);
    assert!(out.starts_with("suite,check,lhs,rhs,status\n"));
    assert!(
        out.lines().skip(1).all(|l| l.split(',').count() >= 5),
        "{out}"
    );
}

#[test]
fn both_edge_sections_are_rejected() {
    let f = fixture("both_sections.json");
    let o = run(&["validate", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("exactly one edge section"));
}

#[test]
fn parse_errors_report_a_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\n  \"vertices\": [\"a\"],\n  \"edges\": [,]\n}\n").unwrap();
    let o = run(&["det-l", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn validation_violations_exit_with_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"vertices": ["a"], "edges": [{"id": "e", "incidences": [{"vertex": "b", "sign": 1}]}]}"#,
    )
    .unwrap();
    let o = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("`b`"));
}

#[test]
fn validate_k2() {
    let f = fixture("k2.json");
    let o = run(&["validate", f.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(row(&stdout(&o), &["2"]), ["2", "1", "2", "true"]);
}

#[test]
fn matrix_csv_uses_plain_integers() {
    let f = fixture("negative_triangle.json");
    let o = run(&[
        "--format",
        "csv",
        "matrix",
        "laplacian",
        f.to_str().unwrap(),
    ]);
    assert_eq!(stdout(&o), ",v1,v2,v3\nv1,2,1,1\nv2,1,2,1\nv3,1,1,2\n");
}

#[test]
fn full_sum_commands_print_both_sides() {
    let f = fixture("negative_triangle.json");
    for (cmd, name, value) in [
        ("perm-l", "perm(L)", "16"),
        ("det-l", "det(L)", "4"),
        ("perm-a", "perm(A)", "-2"),
        ("det-a", "det(A)", "-2"),
    ] {
        let o = run(&[cmd, f.to_str().unwrap()]);
        assert!(o.status.success());
        assert_eq!(row(&stdout(&o), &[name]), [name, value, value, "pass"]);
    }
}

#[test]
fn minor_command() {
    let f = fixture("k4.json");
    let o = run(&["minor", "--rows", "v1", "--cols", "v1", f.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(
        row(&stdout(&o), &["det", "L[{v1};{v1}]"])[2..],
        ["16", "16", "pass"]
    );
    let o = run(&[
        "minor",
        "--rows",
        "v1,v2",
        "--cols",
        "v3",
        f.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn contributors_list_has_one_line_each() {
    let f = fixture("k2.json");
    let o = run(&["contributors", "list", f.to_str().unwrap()]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3, "{out}");
    assert!(out.contains("(v1 v2)"));
    assert!(out.contains("{v1,v2}"));
}

#[test]
fn lattice_dot_labels_and_covering_edges() {
    let f = fixture("negative_triangle.json");
    let o = run(&[
        "activation",
        "lattice",
        "--class",
        "0",
        "--dot",
        f.to_str().unwrap(),
    ]);
    let out = stdout(&o);
    assert!(out.starts_with("digraph"));
    assert!(out.contains("label=\"S={} sign=+1\""));
    assert!(out.contains("label=\"S={c1} sign=-1\""));
    assert_eq!(out.matches("->").count(), 1);
}

#[test]
fn activation_list_counts_classes() {
    let f = fixture("negative_triangle.json");
    let o = run(&["activation", "list", f.to_str().unwrap()]);
    assert_eq!(stdout(&o).lines().count(), 9);
    let f = fixture("hypergraph.json");
    assert_eq!(
        run(&["activation", "list", f.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn cut_on_a_loop_keeps_the_whole_class() {
    let f = fixture("looped.json");
    let o = run(&[
        "activation",
        "cut",
        "--u",
        "v1",
        "--w",
        "v1",
        "--class",
        "1",
        f.to_str().unwrap(),
    ]);
    assert_eq!(
        row(&stdout(&o), &["1"]),
        ["1", "lower", "{c1}", "2", "{}", "{c1}"]
    );
}

#[test]
fn complete_emit_serializes_zero_signs() {
    let f = fixture("p3.json");
    let o = run(&["complete", "--emit", f.to_str().unwrap()]);
    let out = stdout(&o);
    assert!(out.contains("\"v1~v3\""));
    assert_eq!(out.matches("\"sign\": 0").count(), 2);
}

#[test]
fn trees_on_k4() {
    let f = fixture("k4.json");
    let o = run(&["trees", "--u", "v1", "--w", "v2", f.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(
        row(&stdout(&o), &["v1"]),
        ["v1", "v2", "16", "16", "16", "pass"]
    );
}

#[test]
fn chaiken_check_passes() {
    let f = fixture("looped.json");
    let o = run(&[
        "chaiken-check",
        "--rows",
        "v1",
        "--cols",
        "v2",
        f.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn dot_is_refused_for_tables() {
    let f = fixture("k2.json");
    let o = run(&["--format", "dot", "det-l", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}
