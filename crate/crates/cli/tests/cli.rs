use std::fs;
use std::process::{Command, Output};

use irrep_core::report::AnalysisReport;
use irrep_core::zoo::catalog;

fn irrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_irrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn zoo_file(dir: &tempfile::TempDir, args: &[&str]) -> String {
    let path = dir.path().join(format!("{}.json", args.join("_")));
    let path = path.to_str().unwrap().to_string();
    let mut full = vec!["zoo"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", &path]);
    let o = irrep(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn analyze_so12_names_the_stabilizer() {
    let dir = tempfile::tempdir().unwrap();
    let file = zoo_file(&dir, &["so", "1", "2"]);
    let o = irrep(&["analyze", &file]);
    assert_eq!(o.status.code(), Some(0));
    let report = AnalysisReport::from_json_str(&stdout(&o)).unwrap();
    assert_eq!(report.schema, "v1");
    let row = report.forms.table_row.as_ref().unwrap();
    assert_eq!(row.stabilizer, "O(1,2)");
    assert_eq!(report.structure.unwrap().closedness, "closed_by_irreducibility");
}

#[test]
fn analyze_conformal_circle_three_is_not_self_dual() {
    let dir = tempfile::tempdir().unwrap();
    let file = zoo_file(&dir, &["conformal_circle", "3"]);
    let o = irrep(&["analyze", &file]);
    let report = AnalysisReport::from_json_str(&stdout(&o)).unwrap();
    assert!(!report.forms.self_dual);
    assert_eq!(report.structure.unwrap().center_shape, "full_complex");
}

#[test]
fn json_report_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for args in [&["u_real", "1", "1"][..], &["gl1H_right"][..], &["borel", "2"][..]] {
        let file = zoo_file(&dir, args);
        let text = stdout(&irrep(&["analyze", &file]));
        let report = AnalysisReport::from_json_str(&text).unwrap();
        assert_eq!(AnalysisReport::from_json_str(&report.to_json_string()).unwrap(), report);
    }
}

#[test]
fn text_and_json_carry_the_same_leaves() {
    let dir = tempfile::tempdir().unwrap();
    let file = zoo_file(&dir, &["sp_complex", "1"]);
    let json = AnalysisReport::from_json_str(&stdout(&irrep(&["analyze", &file]))).unwrap();
    let text = stdout(&irrep(&["analyze", &file, "--format", "text"]));
    // Timing differs between runs; everything else must agree line by line.
    let strip = |s: &str| {
        s.lines()
            .filter(|l| !l.starts_with("timing."))
            .map(str::to_string)
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&text), strip(&json.to_text()));
}

#[test]
fn malformed_input_exits_2_naming_the_problem() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(
        &path,
        r#"{"name":"x","dimension":2,"level":"lie_algebra","generators":[[[1,0],[0,"x"]]]}"#,
    )
    .unwrap();
    let o = irrep(&["analyze", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("generator 0"));

    let missing = irrep(&["analyze", dir.path().join("absent.json").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn zoo_rejects_bad_keys_and_guard_cases() {
    assert_eq!(irrep(&["zoo", "g2"]).status.code(), Some(2));
    let o = irrep(&["zoo", "so_complex", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("reducible or guard case"));
    assert!(stdout(&irrep(&["zoo", "--list"])).lines().count() >= 11);
}

#[test]
fn check_table_passes_and_lists_seven_rows() {
    let o = irrep(&["check-table"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().filter(|l| l.ends_with("[ok]")).collect();
    assert_eq!(rows.len(), 7, "{text}");
}

#[test]
fn check_table_fails_on_a_corrupted_entry() {
    let mut entries = catalog();
    entries[0].expected.dim_sym += 1;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corrupt.json");
    fs::write(&path, serde_json::to_string(&entries).unwrap()).unwrap();
    let o = irrep(&["check-table", "--catalog", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("MISMATCH so(1,2)"));
}

#[test]
fn lorentz_scan_counts_and_guards() {
    let o = irrep(&[
        "lorentz-scan",
        "--n",
        "2",
        "--trials",
        "100",
        "--seed",
        "7",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["violations"], 0);
    assert_eq!(v["records"].as_array().unwrap().len(), 100);

    assert_eq!(
        irrep(&["lorentz-scan", "--n", "2", "--trials", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        irrep(&["lorentz-scan", "--n", "9", "--trials", "3"]).status.code(),
        Some(2)
    );
    // Missing required flag: clap's usage error.
    assert_eq!(irrep(&["lorentz-scan", "--n", "3"]).status.code(), Some(2));
}
