use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn lsalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lsalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn check_a21() {
    let o = lsalg(&["check", &data("a21.lsa")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "left-symmetric: yes; (4): yes; Novikov: no; derivation: no"
    );
}

#[test]
fn check_gaussian_file() {
    let o = lsalg(&["check", &data("split_qi.lsa")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "left-symmetric: yes; (4): yes; Novikov: yes; derivation: yes"
    );
}

#[test]
fn parse_errors_exit_2() {
    let o = lsalg(&["check", &data("bad.lsa")]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3"), "{err}");
    let o = lsalg(&["check", &data("missing.lsa")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn simple_a2() {
    let o = lsalg(&["simple", &data("a2.lsa")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "simple: yes (Norton certificate, seed 0)");
}

#[test]
fn simple_undecided_exits_3() {
    let o = lsalg(&["simple", &data("a2.lsa"), "--budget", "0"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("simple: undecided"));
}

#[test]
fn simple_not_simple_names_an_ideal() {
    let o = lsalg(&["simple", &data("exp4.lsa")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("simple: no"), "{}", stdout(&o));
}

#[test]
fn report_zero3_json() {
    let o = lsalg(&["report", &data("zero3.lsa"), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).expect("valid JSON");
    for id in [
        "left_symmetric",
        "novikov",
        "derivation",
        "id4",
        "associative",
        "commutative",
    ] {
        assert_eq!(v["profile"][id], true, "{id}");
    }
    assert_eq!(
        v["radicals"]["koszul_radical"],
        serde_json::json!(["e1", "e2", "e3"])
    );
    assert_eq!(v["radicals"]["complete"], true);
    assert_eq!(v["seed"], 0);
}

#[test]
fn report_json_is_byte_stable() {
    let a = lsalg(&["report", &data("exp4.lsa"), "--json", "--seed", "5"]);
    let b = lsalg(&["report", &data("exp4.lsa"), "--json", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 5);
}

#[test]
fn report_text() {
    let o = lsalg(&["report", &data("exp4.lsa")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("Lie center: span{e1, e4}"), "{s}");
    assert!(s.contains("[A,A] acts by translations: yes"), "{s}");
}

#[test]
fn radicals_needs_left_symmetry() {
    let o = lsalg(&["radicals", &data("not_ls.lsa")]);
    assert_eq!(o.status.code(), Some(1));
    let o = lsalg(&["radicals", &data("a21.lsa")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("radical R(A): span{e2}"), "{}", stdout(&o));
}

#[test]
fn quotient_by_center() {
    let o = lsalg(&["quotient", &data("exp4.lsa"), "--ideal", "span(e1)"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("dim A = 4 = dim I + dim A/I = 1 + 3"), "{s}");
    assert!(s.contains("e3*e3 = e1"), "{s}");
    let o = lsalg(&["quotient", &data("exp4.lsa"), "--ideal", "span(e4)"]);
    assert_eq!(o.status.code(), Some(1));
    let o = lsalg(&["quotient", &data("exp4.lsa"), "--ideal", "nonsense("]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_paper_filtered() {
    let o = lsalg(&["verify-paper", "--filter", "A4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.contains("ok   A4:"), "{s}");
    assert!(s.contains("== findings\nA4:"), "{s}");
    assert!(s.contains("== traceability"), "{s}");
}
