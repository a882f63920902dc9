use std::io::Write;
use std::process::{Command, Stdio};

fn qcat(args: &[&str], stdin: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qcat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("qcat runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn poly_of_b2_ideals() {
    let (code, out) = qcat(
        &[
            "poly", "--object", "ideal", "--type", "B", "--n", "2", "--stat", "area",
        ],
        "",
    );
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1 + 2q + q^2 + q^3 + q^4");
}

#[test]
fn map_reads_stdin() {
    let ideal = r#"{"roots": ["e2-e1","e3-e2","e4-e3","e5-e4","e6-e5","e7-e6","e8-e7","e9-e8",
        "e3-e1","e4-e2","e5-e3","e6-e4","e7-e5","e9-e7","e4-e1","e5-e2","e6-e3"]}"#;
    let (code, out) = qcat(&["map", "--via", "phiA", "--n", "9"], ideal);
    assert_eq!(code, 0);
    assert_eq!(out.trim_end(), "[7,3,4,5,2,6,9,8,1]  ls=17");
    let (code, out) = qcat(
        &["map", "--via", "psiA", "--n", "6", "--format", "csv"],
        "NNNNEEENNEEE",
    );
    assert_eq!(code, 0);
    assert_eq!(out, "\"[6,2,1,5,4,3]\",9,25\n");
}

#[test]
fn enumerate_is_sorted_and_complete() {
    let (code, out) = qcat(
        &[
            "enumerate",
            "--object",
            "revnc",
            "--type",
            "A",
            "--n",
            "4",
            "--stat",
            "ls",
        ],
        "",
    );
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 14);
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);
    let (_, out) = qcat(
        &["enumerate", "--object", "dyck", "--type", "B", "--n", "0"],
        "",
    );
    assert_eq!(out, "\n");
}

#[test]
fn exit_codes() {
    assert_eq!(
        qcat(
            &["enumerate", "--object", "ideal", "--type", "B", "--n", "9"],
            ""
        )
        .0,
        2
    );
    assert_eq!(
        qcat(
            &["enumerate", "--object", "dyck", "--type", "D", "--n", "3"],
            ""
        )
        .0,
        2
    );
    assert_eq!(qcat(&["map", "--via", "psiB", "--n", "2"], "NNNNE").0, 2);
    assert_eq!(qcat(&["frobnicate"], "").0, 2);
    assert_eq!(qcat(&["--help"], "").0, 0);
}

#[test]
fn verify_all_defaults() {
    let (code, out) = qcat(&["verify", "--all", "--jobs", "4"], "");
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().count(), 8 + 5 + 8 + 5 + 1);
    assert!(out.lines().all(|l| l.starts_with("PASS")));
    let (code, out) = qcat(&["selftest", "--format", "json"], "");
    assert_eq!(code, 0);
    assert!(out.lines().all(|l| l.contains("\"passed\":true")));
}
