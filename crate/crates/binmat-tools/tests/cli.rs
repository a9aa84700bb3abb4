use std::io::Write as _;
use std::process::{Command, Stdio};

use binmat_tools::cli;
use sha2::{Digest, Sha256};

fn run_with(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["binmat"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_with(args, "")
}

#[test]
fn split_prints_the_reduced_matrix() {
    let (code, out, _) = run(&["split", "G4", "--t", "x,y,z"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "matroid G4_T\nelements x y z e4 e5 e6 e7\n1000101\n0100110\n0010011\n0001111\n"
    );
}

#[test]
fn split_output_pipes_into_iso() {
    let (_, split, _) = run(&["split", "G4", "--t", "x,y,z"]);
    let (code, out, _) = run_with(&["iso", "-", "F7star"], &split);
    assert_eq!(code, 0);
    assert!(out.starts_with("- ~= F7star: isomorphic via "), "{out}");
}

#[test]
fn split_with_an_added_element() {
    let (code, out, _) = run(&["split", "K4", "--t", "12,34", "--with-element", "a"]);
    assert_eq!(code, 0);
    assert!(out.contains("elements 12 13 14 23 24 34 a"), "{out}");
}

#[test]
fn iso_failure_exits_one() {
    let (code, out, _) = run(&["iso", "F7", "F7star"]);
    assert_eq!(code, 1);
    assert_eq!(out, "F7 !~= F7star: not isomorphic\n");
}

#[test]
fn quotients_of_k5() {
    let (code, out, _) = run(&["quotients", "K5"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "class 1: column 0, 10 elements rank 4, realized by H4\n\
         class 2: column 1, 10 elements rank 3, realized by H5,H6\n\
         K5: 2 graphic quotient classes, catalog graphs H4,H5,H6\n"
    );
}

#[test]
fn quotients_of_k33_under_both_readings() {
    let (_, a, _) = run(&["quotients", "K33", "--exclude", "G2"]);
    let (_, b, _) = run(&["quotients", "K33", "--exclude", "G2", "--reading", "minor"]);
    assert_eq!(a, b);
    assert!(
        a.ends_with("K33: 4 graphic quotient classes, catalog graphs H7,H8,H9,H10,H11\n"),
        "{a}"
    );
}

#[test]
fn classify_reports_the_failing_pair() {
    let (code, out, _) = run(&["classify", "G1", "--k", "2"]);
    assert_eq!(code, 0);
    assert!(
        out.starts_with("G1 k=2: non-cographic at T={bl-br,tl-tr} (F7);"),
        "{out}"
    );
    let (_, out, _) = run(&["classify", "K4", "--k", "3"]);
    assert!(out.starts_with("K4 k=3: cographic-for-all-T;"), "{out}");
}

#[test]
fn has_minor_with_witness() {
    let (code, out, _) = run(&["has-minor", "G2", "G5"]);
    assert_eq!(code, 0);
    assert!(out.contains("witness replayed: true"), "{out}");
    let (code, out, _) = run(&["has-minor", "G5", "G2"]);
    assert_eq!(code, 1);
    assert_eq!(out, "G5 has no G2 minor\n");
}

#[test]
fn verify_one_check() {
    let (code, out, _) = run(&["verify", "split-g4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("CHECK split-g4 PASS "), "{out}");
    assert!(out.ends_with("SUMMARY 1/1 passed\n"));
}

#[test]
fn verify_failing_check_exits_one() {
    let (code, out, _) = run(&["verify", "coextension-counts"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("CHECK coextension-counts FAIL "), "{out}");
}

#[test]
fn records_format() {
    let (_, out, _) = run(&["--format", "records", "iso", "G2", "C3"]);
    assert!(
        out.starts_with("record=iso a=G2 b=C3 isomorphic=true map="),
        "{out}"
    );
    let (_, out, _) = run(&["verify", "split-g4", "--format", "records"]);
    assert!(
        out.starts_with("record=check id=split-g4 status=PASS detail=\""),
        "{out}"
    );
}

#[test]
fn usage_and_lookup_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["split", "G4"]).0, 2);
    let (code, _, err) = run(&["iso", "G2", "no-such-fixture"]);
    assert_eq!(code, 2);
    assert_eq!(err, "error: unknown fixture no-such-fixture\n");
    assert_eq!(run(&["verify", "no-such-check"]).0, 2);
    let (code, _, err) = run(&["search", "--k", "2", "--max-elements", "40"]);
    assert_eq!(code, 2);
    assert!(err.contains("resource"), "{err}");
    assert_eq!(run(&["classify", "G1", "--k", "7"]).0, 2);
    assert_eq!(run(&["split", "G4", "--t", "x,nope"]).0, 2);
}

#[test]
fn stdin_parse_errors_exit_two() {
    let (code, _, err) = run_with(&["iso", "-", "F7"], "matroid bad\nelements a b\n1\n");
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["--manifest", "search", "--k", "3", "--max-elements", "7"];
    let a = run(&args);
    assert_eq!(a, run(&args));
    assert_eq!(a.0, 0);
}

#[test]
fn manifest_digest_covers_the_output() {
    let (_, out, _) = run(&["--manifest", "catalog", "show", "F7"]);
    let (body, manifest) = out.split_at(out.find("manifest: ").unwrap());
    let hex: String = Sha256::digest(body.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect();
    assert!(
        manifest.contains(&format!("digest=sha256:{hex}")),
        "{manifest}"
    );
    assert!(manifest.contains("inputs=catalog:built-in"), "{manifest}");
}

#[test]
fn search_at_seven_elements() {
    let (code, out, _) = run(&["search", "--k", "3", "--max-elements", "7"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3, "{out}");
    assert!(
        lines[0].starts_with("obstruction: 7 elements rank 3 (G4,H1,Q3,G4_drawn)"),
        "{out}"
    );
    assert!(
        lines[1].starts_with("obstruction: 7 elements rank 3 (G5,H2,Q4)"),
        "{out}"
    );
    assert!(
        lines[2]
            .starts_with("k=3 max-elements=7: 2 obstructions, 0 with an M(K5) or M(K3,3) minor"),
        "{out}"
    );
}

#[test]
fn fixture_directory_override() {
    let dir = std::env::temp_dir().join(format!("binmat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(
        dir.join("path3.graph"),
        "graph path3\n# drawn for the test\n#! edges 2\nedge p 1 2\nedge q 2 3\n",
    )
    .unwrap();
    let d = dir.to_str().unwrap();
    let (code, out, _) = run(&["--fixtures", d, "catalog", "list"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1);
    assert!(out.starts_with("path3"), "{out}");
    // A failing validation stops the load.
    std::fs::write(
        dir.join("bad.graph"),
        "graph bad\n# wrong on purpose\n#! edges 5\nedge p 1 2\n",
    )
    .unwrap();
    let (code, _, err) = run(&["--fixtures", d, "catalog", "list"]);
    assert_eq!(code, 2);
    assert!(err.contains("fixture bad"), "{err}");

    // The binary honours the environment variable.
    std::fs::remove_file(dir.join("bad.graph")).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_binmat"))
        .args(["catalog", "list"])
        .env("MATROID_FIXTURES", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("path3"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_reads_stdin_and_sets_exit_codes() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_binmat"))
        .args(["iso", "-", "K4"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(
            b"graph k4\nedge a 1 2\nedge b 1 3\nedge c 1 4\nedge d 2 3\nedge e 2 4\nedge f 3 4\n",
        )
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_binmat"))
        .args(["catalog", "show", "G99"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
