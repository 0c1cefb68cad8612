use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_classprod"))
        .args(args)
        .env_remove("CLASSPROD_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn construct(dir: &TempDir, file: &str, args: &[&str]) -> PathBuf {
    let path = dir.path().join(file);
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", path.to_str().unwrap()]);
    let out = run(&full);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_writes_loadable_files() {
    let dir = TempDir::new().unwrap();
    let d10 = construct(&dir, "d10.grp", &["dihedral", "5"]);
    let text = std::fs::read_to_string(&d10).unwrap();
    assert!(text.starts_with("name: dihedral_5\ndegree: 5\n"), "{text}");
    let out = run(&["scan", s(&d10)]);
    assert_eq!(json(&out)[0]["group"]["order"], 10);

    let f21 = construct(&dir, "f21.grp", &["frobenius", "7", "3"]);
    let out = run(&["scan", s(&f21)]);
    assert_eq!(json(&out)[0]["group"]["order"], 21);
}

#[test]
fn construct_rejects_bad_parameters() {
    let out = run(&["construct", "frobenius", "7", "4"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("does not divide"));
    assert!(out.stdout.is_empty());
    assert_eq!(code(&run(&["construct", "frobenius", "9", "2"])), 2);
    assert_eq!(code(&run(&["construct", "klein", "4"])), 2);
}

#[test]
fn scan_d10_finds_one_pass() {
    let dir = TempDir::new().unwrap();
    let d10 = construct(&dir, "d10.grp", &["dihedral", "5"]);
    let out = run(&["scan", s(&d10), "--hypothesis", "AB_eq_AuB"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let matches = v[0]["matches"].as_array().unwrap();
    assert_eq!(matches.len(), 1);
    assert_eq!(matches[0]["hypothesis"], "AB_eq_AuB");
    assert_eq!(matches[0]["status"], "pass");
    assert_eq!(matches[0]["classes"][0]["rep"], "(1 2 3 4 5)");
    assert_eq!(matches[0]["classes"][0]["size"], 2);
    // progress goes to stderr only
    assert!(String::from_utf8_lossy(&out.stderr).contains("dihedral_5"));
}

#[test]
fn scan_exit_codes_for_bad_inputs() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.grp");
    assert_eq!(code(&run(&["scan", s(&missing)])), 2);

    let bad_cycle = dir.path().join("bad.grp");
    std::fs::write(&bad_cycle, "name: bad\ndegree: 3\ngen: (1 2 4)\n").unwrap();
    let loop5 = dir.path().join("loop.cay");
    // a Latin square with identity row and column that is not associative
    std::fs::write(
        &loop5,
        "1,2,3,4,5\n2,1,4,5,3\n3,5,1,2,4\n4,3,5,1,2\n5,4,2,3,1\n",
    )
    .unwrap();
    let out = run(&["scan", s(&bad_cycle), s(&loop5)]);
    assert_eq!(code(&out), 2);
    let v = json(&out);
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert!(v[0]["error"].as_str().unwrap().contains("line 3"));
    assert!(v[1]["error"].is_string());

    // one good input among bad ones: per-file errors, exit 0
    let good = corpus().join("10/dihedral_5.grp");
    let out = run(&["scan", s(&missing), s(&good)]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!(v[0]["error"].is_string());
    assert_eq!(v[1]["group"]["name"], "dihedral_5");
}

#[test]
fn budget_flag_and_environment() {
    let f21 = corpus().join("21/frobenius_7_3.grp");
    let out = run(&["scan", s(&f21), "--max-order", "20"]);
    assert_eq!(code(&out), 2);
    assert!(json(&out)[0]["error"].as_str().unwrap().contains("budget"));

    let out = Command::new(env!("CARGO_BIN_EXE_classprod"))
        .args(["scan", s(&f21)])
        .env("CLASSPROD_MAX_ORDER", "20")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    let out = Command::new(env!("CARGO_BIN_EXE_classprod"))
        .args(["scan", s(&f21), "--max-order", "21"])
        .env("CLASSPROD_MAX_ORDER", "20")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn corpus_scan_inverse_union_forces_equal_classes() {
    let out = run(&[
        "scan",
        s(&corpus()),
        "--max-order",
        "200",
        "--hypothesis",
        "AB_eq_AinvUB_nonreal",
        "--fail-on-falsification",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let groups = v.as_array().unwrap();
    assert!(groups.len() > 80);
    let mut seen = 0;
    for g in groups {
        assert!(g.get("error").is_none(), "{g}");
        for m in g["matches"].as_array().unwrap() {
            seen += 1;
            assert_eq!(m["classes"][0]["id"], m["classes"][1]["id"]);
            assert_eq!(m["status"], "pass");
        }
    }
    assert!(seen > 0);
}

#[test]
fn output_is_independent_of_worker_count() {
    let root = corpus();
    let one = run(&["scan", s(&root), "--max-order", "60", "--workers", "1"]);
    let four = run(&["scan", s(&root), "--max-order", "60", "--workers", "4"]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    let csv1 = run(&[
        "scan",
        s(&root),
        "--max-order",
        "60",
        "--workers",
        "1",
        "--format",
        "csv",
    ]);
    let csv4 = run(&[
        "scan",
        s(&root),
        "--max-order",
        "60",
        "--workers",
        "4",
        "--format",
        "csv",
    ]);
    assert_eq!(csv1.stdout, csv4.stdout);
}

#[test]
fn csv_and_table_formats() {
    let d10 = corpus().join("10/dihedral_5.grp");
    let out = run(&["scan", s(&d10), "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "group,order,degree,hypothesis,theorem,classes,sizes,status,detail"
    );
    assert!(lines.any(|l| l.starts_with("dihedral_5,10,5,AB_eq_AuB,theorem_A,2 3,2 2,pass")));

    let out = run(&["scan", s(&d10), "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().next().unwrap().starts_with("group"));
    assert!(text.contains("theorem_A"));
}

#[test]
fn output_file_flag() {
    let dir = TempDir::new().unwrap();
    let target = dir.path().join("report.json");
    let out = run(&[
        "scan",
        s(&corpus().join("10/dihedral_5.grp")),
        "-o",
        s(&target),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(v[0]["group"]["name"], "dihedral_5");
}

#[test]
fn verify_f21_translation_class() {
    let f21 = corpus().join("21/frobenius_7_3.grp");
    let out = run(&["verify", s(&f21), "theorem_C", "--class", "(1 2 3 4 5 6 7)"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("theorem_C: pass"), "{text}");
    assert!(text.contains("generated_order: 7"));
    assert!(text.contains("elementary_abelian"));
}

#[test]
fn verify_wrong_pair_is_hypothesis_not_met() {
    let d10 = corpus().join("10/dihedral_5.grp");
    let out = run(&[
        "verify",
        s(&d10),
        "theorem_A",
        "--classes",
        "(2 5)(3 4),(2 5)(3 4)",
    ]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not met"));
    let out = run(&[
        "verify",
        s(&d10),
        "theorem_A",
        "--classes",
        "2,3",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["matches"][0]["status"], "pass");
}

#[test]
fn verify_agammal18_order_seven_class() {
    let g = corpus().join("168/agammal18.grp");
    // multiplication by the field generator: a 7-cycle fixing 0
    let out = run(&[
        "verify",
        s(&g),
        "theorem_3_1",
        "--class",
        "(2 3 5 4 7 8 6)",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    let m = &v["matches"][0];
    assert_eq!(m["status"], "pass");
    assert_eq!(m["facts"]["generated_order"], "56");
    assert_eq!(m["facts"]["p"], "7");
    assert_eq!(m["facts"]["complement_order"], "8");
    assert_eq!(m["classes"][0]["size"], 24);
}

#[test]
fn verify_selector_errors() {
    let d10 = corpus().join("10/dihedral_5.grp");
    assert_eq!(
        code(&run(&["verify", s(&d10), "theorem_C", "--class", "99"])),
        2
    );
    assert_eq!(
        code(&run(&["verify", s(&d10), "theorem_C", "--class", "(1 2)"])),
        2
    );
    assert_eq!(
        code(&run(&["verify", s(&d10), "theorem_C", "--class", "(1 9)"])),
        2
    );
    assert_eq!(
        code(&run(&["verify", s(&d10), "theorem_A", "--class", "2"])),
        2
    );
}

#[test]
fn verify_coset_conjugacy_with_normal_subgroup() {
    let d10 = corpus().join("10/dihedral_5.grp");
    let out = run(&[
        "verify",
        s(&d10),
        "theorem_2_1",
        "--class",
        "(2 5)(3 4)",
        "--normal",
        "(1 2 3 4 5),(1 3 5 2 4)",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["matches"][0]["facts"]["normal_subgroup_order"], "5");
    assert_eq!(v["matches"][0]["facts"]["p"], "2");
    assert_eq!(
        code(&run(&["verify", s(&d10), "theorem_2_1", "--class", "1"])),
        2
    );
}
