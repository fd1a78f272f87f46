use std::collections::BTreeSet;

use std::io::Write;
use std::process::{Command, Output, Stdio};

use quasitri::catalog::resolve;
use quasitri::io::{from_facet_text, from_json};

fn quasitri() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_quasitri"));
    c.env_remove("QUASITRI_SEED");
    c
}

fn code(c: &mut Command) -> Option<i32> {
    c.output().unwrap().status.code()
}

fn with_stdin(c: &mut Command, input: &str) -> Output {
    let mut child = c
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = quasitri().args(args).output().unwrap();
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn rectangle_census_passes() {
    let out = stdout(&["census", "--filter", "5.*"]);
    let rows: Vec<&str> = out.lines().filter(|l| l.starts_with("5.")).collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.contains("PASS")));
    assert!(rows[0].ends_with("vertex minimal"));
    assert!(out.contains("5/5 entries pass"));
}

#[test]
fn single_census_entry() {
    let out = stdout(&["census", "--filter", "6.8"]);
    let row = out.lines().find(|l| l.starts_with("6.8 ")).unwrap();
    let cols: Vec<&str> = row.split_whitespace().collect();
    assert_eq!(
        &cols[..10],
        ["6.8", "5", "18", "18", "5", "Z^3", "18/18", "5/5", "ok", "PASS"]
    );
}

#[test]
fn unknown_key_is_an_error() {
    assert_eq!(
        code(quasitri().args(["census", "--filter", "9.9"])),
        Some(2)
    );
    assert_eq!(
        code(quasitri().args(["assemble", "--census", "9.9"])),
        Some(2)
    );
}

#[test]
fn mismatched_entry_fails_verification() {
    let out = quasitri()
        .args(["census", "--filter", "6.10"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("realize (k,l)=(2,0)"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["assemble", "--census", "6.8"][..],
        &["census", "--filter", "5.*", "--json"],
        &["charfun", "enumerate", "--polygon", "hexagon", "--json"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn header_reports_seed_and_input_hash() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.facets");
    assert_eq!(
        code(
            quasitri()
                .args(["catalog", "dump", "T4,0", "--out"])
                .arg(&path)
        ),
        Some(0)
    );
    let out = quasitri()
        .env("QUASITRI_SEED", "17")
        .arg("homology")
        .arg(&path)
        .output()
        .unwrap();
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("# quasitri "), "{err}");
    assert!(err.contains("seed=17 input=sha256:"), "{err}");
}

#[test]
fn catalog_export_round_trip() {
    for id in ["T1", "T4,0", "T9,1"] {
        let want = &resolve(id.parse().unwrap()).unwrap().complex;
        let text = stdout(&["catalog", "dump", id]);
        assert_eq!(&from_facet_text(&text).unwrap(), want);
        let json = stdout(&["catalog", "dump", id, "--format", "json"]);
        assert_eq!(&from_json(&json).unwrap(), want);
    }
}

#[test]
fn assembled_complex_verifies_as_4_manifold() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.json");
    assert_eq!(
        code(
            quasitri()
                .args(["assemble", "--tori", "T1", "T2", "T3", "T2,7", "--format", "json", "--out"])
                .arg(&path)
        ),
        Some(0)
    );
    let out = quasitri()
        .arg("verify")
        .arg(&path)
        .args(["--dim", "4", "--report", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let keys: BTreeSet<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(
        keys,
        BTreeSet::from(["f_vector", "euler", "homology", "links"])
    );
    assert_eq!(v["f_vector"][0], 14);
    assert_eq!(v["euler"], 4);
    let text = stdout(&["homology", path.to_str().unwrap()]);
    assert_eq!(text.trim(), "H0=Z H1=0 H2=Z^2 H3=0 H4=Z");
}

#[test]
fn glued_lens_space_is_recognized_by_homology() {
    let out = stdout(&["glue", "T4,0", "T9,0"]);
    assert!(out.contains("L(5,·)") && out.contains("H1=Z_5"));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.facets");
    assert_eq!(
        code(quasitri().args(["glue", "T1", "T2", "--out"]).arg(&path)),
        Some(0)
    );
    let out = quasitri()
        .args(["recognize", "--in"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let cert: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cert["verdict"], "certified-sphere");
    assert_eq!(code(quasitri().args(["glue", "T1", "T1"])), Some(2));
}

#[test]
fn charfun_commands() {
    let out = stdout(&["charfun", "lens", "--xi=-1,0", "--xj=1,3"]);
    assert_eq!(out.trim(), "L(3,2)");
    let out = stdout(&[
        "charfun",
        "enumerate",
        "--polygon",
        "rectangle",
        "--bounds",
        "-3..3",
    ]);
    let rows: Vec<&str> = out.lines().filter(|l| l.starts_with("k=")).collect();
    assert!(!rows.is_empty());
    assert!(out.ends_with(&format!("{} solutions\n", rows.len())));
    let all = stdout(&["charfun", "enumerate", "--polygon", "hexagon", "--json"]);
    let complete = stdout(&[
        "charfun",
        "enumerate",
        "--polygon",
        "hexagon",
        "--json",
        "--complete-only",
    ]);
    let all: Vec<serde_json::Value> = serde_json::from_str(&all).unwrap();
    let complete: Vec<serde_json::Value> = serde_json::from_str(&complete).unwrap();
    assert!(complete.len() < all.len());
    assert!(complete.iter().all(|s| s["complete"] == true));
    assert_eq!(
        code(quasitri().args(["charfun", "lens", "--xi=2,4", "--xj=1,0"])),
        Some(2)
    );
}

#[test]
fn bad_input_exits_with_2() {
    assert_eq!(
        code(quasitri().args(["homology", "/nonexistent/file"])),
        Some(2)
    );
    let out = with_stdin(quasitri().args(["verify", "--dim", "4"]), "0 1 2\n0 1 3\n");
    assert_eq!(out.status.code(), Some(2));
}
