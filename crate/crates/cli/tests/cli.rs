use std::process::{Command, Output};

fn ninfty(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ninfty"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn c4_datasheet() {
    let out = stdout(&ninfty(&["--group", "builtin:cyclic:4", "datasheet"]));
    assert!(
        out.starts_with("G=C4\n#Transfer Systems=5\nComplexity=2\nGeneration Statistics={1,3,1}\n")
    );
    assert!(out.ends_with("#Weak equivalence types=4\n#Compatible pairs=12\n"));
}

#[test]
fn count_c30() {
    let out = stdout(&ninfty(&[
        "--group",
        "builtin:cyclic:30",
        "count",
        "--kind",
        "all",
    ]));
    assert_eq!(out, "450\n");
}

#[test]
fn missing_file_is_one_line_error() {
    let out = ninfty(&["--file", "/definitely/not/here.json", "count"]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.trim_end().lines().count(), 1, "{err}");
    assert!(err.contains("/definitely/not/here.json"));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sheet.txt");
    let out = ninfty(&[
        "--group",
        "builtin:cyclic:4",
        "-o",
        path.to_str().unwrap(),
        "count",
    ]);
    assert!(stdout(&out).is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "5\n");
}

#[test]
fn verbose_progress_goes_to_stderr() {
    let out = ninfty(&["-v", "--group", "builtin:cyclic:4", "count"]);
    assert_eq!(stdout(&out), "5\n");
    assert!(String::from_utf8(out.stderr).unwrap().contains("layer 2"));
}

#[test]
fn export_validate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.json");
    stdout(&ninfty(&[
        "--group",
        "builtin:symmetric:3",
        "-o",
        path.to_str().unwrap(),
        "export",
    ]));
    stdout(&ninfty(&["--file", path.to_str().unwrap(), "validate"]));
    let out = stdout(&ninfty(&[
        "--file",
        path.to_str().unwrap(),
        "count",
        "--kind",
        "conjugacy",
    ]));
    assert_eq!(out, "10\n");
}

#[test]
fn non_closed_system_is_rejected() {
    let out = ninfty(&[
        "--group",
        "builtin:cyclic:4",
        "classify",
        "--system",
        "0<1,1<2",
    ]);
    assert!(!out.status.success());
}

#[test]
fn classify_reports_dual_on_cyclic() {
    let out = stdout(&ninfty(&[
        "--group",
        "builtin:cyclic:4",
        "classify",
        "--system",
        "0<1",
    ]));
    assert!(out.contains("basis size=1\n"));
    assert!(out.contains("dual={(0,1),(0,2)}\n"));
}
