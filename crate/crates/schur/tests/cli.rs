//! End-to-end runs of the command-line binary.

use std::path::PathBuf;
use std::process::Command;

fn schur() -> Command {
    Command::new(env!("CARGO_BIN_EXE_schur"))
}

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

#[test]
fn group_build_prints_profile() {
    let out = schur().args(["group", "build", "frobenius:2,3,7"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("order:    56"));
}

#[test]
fn repro_cor54_expected_pattern() {
    let out = schur().args(["repro", "cor54", "--expect"]).output().unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "cor54 --expect failed:\n{text}");
    assert!(text.contains("non-schurian"));
    // Exactly two schurian rows (7 and 11) and two non-schurian (19 and 23).
    let schurian_rows = text
        .lines()
        .filter(|l| l.split('\t').nth(2) == Some("schurian"))
        .count();
    assert_eq!(schurian_rows, 2);
}

#[test]
fn repro_table2_all_rows_hold() {
    let out = schur().args(["repro", "table2"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().count(), 12); // header + 11 rows
    assert!(text.lines().skip(1).all(|l| l.contains("true\ttrue")));
}

#[test]
fn repro_table1_with_fixtures() {
    let out = schur()
        .args(["repro", "table1", "--fixtures"])
        .arg(fixtures())
        .output()
        .unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "table1 failed:\n{text}");
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn design_check_fano() {
    let out = schur().args(["design", "check", "--q", "7"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("(7, 3, 1)"));
    assert!(text.contains("2-transitive:        true"));
}

#[test]
fn enumerate_census_c4() {
    let out = schur()
        .args(["enumerate", "--group", "c4", "--census"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("# 3 S-rings"));
    assert!(text.contains("group is Schur"));
}

#[test]
fn scheme_pipeline_inv_fuse_aut() {
    let dir = std::env::temp_dir().join("schur-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let scheme_path = dir.join("deg56.scheme");

    // Orbital scheme of the bundled degree-56 overgroup.
    let out = schur()
        .args(["scheme", "inv", "--group-file"])
        .arg(fixtures().join("grp672_deg56.txt"))
        .arg("--out")
        .arg(&scheme_path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("rank:      8"), "{text}");

    // Fuse by the valency recipe and check non-schurity via `aut`.
    let fused_path = dir.join("deg56_fused.scheme");
    let out = schur()
        .args(["scheme", "fuse", "--scheme"])
        .arg(&scheme_path)
        .args([
            "--pi",
            "1,3|2|4,5|6,7",
            "--by-valency",
            "1,3,3,12,12,12,12",
            "--clique",
            "2",
            "--not-clique",
            "3",
            "--pair",
            "4,5",
            "--pair",
            "6,7",
            "--out",
        ])
        .arg(&fused_path)
        .output()
        .unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{text}");
    assert!(text.contains("fusion is a scheme"), "{text}");

    let out = schur()
        .args(["aut", "--scheme"])
        .arg(&fused_path)
        .args(["--expect", "non-schurian"])
        .output()
        .unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{text}");
    assert!(text.contains("verdict:         non-schurian"), "{text}");
}

#[test]
fn sring_schurian_partition_file() {
    // A non-schurian S-ring over C2×D8 (= sg:16,11), as found by the census.
    let dir = std::env::temp_dir().join("schur-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c2d8_partition.txt");
    std::fs::write(&path, "0\n1 2 4 5 6 8 9 10 15\n3 7 11 12 13 14\n").unwrap();
    let out = schur()
        .args(["sring", "schurian", "--group", "sg:16,11", "--partition"])
        .arg(&path)
        .args(["--expect", "non-schurian"])
        .output()
        .unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{text}");
    assert!(text.contains("rank:    3"), "{text}");
}

#[test]
fn scheme_inv_coset_action() {
    // C6 on the cosets of ⟨3⟩: a regular C3 image, rank 3 on 3 points.
    let out = schur()
        .args(["scheme", "inv", "--group", "c6", "--action", "coset:3"])
        .output()
        .unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{text}");
    assert!(text.contains("points:    3"), "{text}");
    assert!(text.contains("rank:      3"), "{text}");
}

#[test]
fn aut_expectation_failure_exits_one() {
    let dir = std::env::temp_dir().join("schur-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rank2.scheme");
    std::fs::write(&path, "3\n0 1 1\n1 0 1\n1 1 0\n").unwrap();
    let out = schur()
        .args(["aut", "--scheme"])
        .arg(&path)
        .args(["--expect", "non-schurian"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sring_diffset_singer() {
    let out = schur()
        .args(["sring", "diffset", "--singer", "2,3", "--expect", "schurian"])
        .output()
        .unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{text}");
    assert!(text.contains("(15, 7, 3)"), "{text}");
}

#[test]
fn repro_outputs_are_byte_deterministic() {
    for args in [
        vec!["repro", "cor54"],
        vec!["repro", "table2", "--format", "json"],
    ] {
        let first = schur().args(&args).output().unwrap();
        let second = schur().args(&args).output().unwrap();
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
    let dir = fixtures();
    let run = || {
        schur()
            .args(["repro", "table1", "--fixtures"])
            .arg(&dir)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn errors_exit_two() {
    let out = schur().args(["group", "build", "nonsense:1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exhausted_enumeration_budget_is_an_error() {
    let out = schur()
        .args(["enumerate", "--group", "g16", "--census", "--budget", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("budget exhausted"), "{err}");
}
