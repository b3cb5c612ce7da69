//! End-to-end tests of the command-line binary: spot values, stream shapes,
//! exit codes, and byte-stability across thread counts.

use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_annular"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = bin(args);
    assert!(
        out.status.success(),
        "{:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    bin(args).status.code().expect("no signal")
}

#[test]
fn count_spot_values() {
    assert_eq!(stdout(&["count", "mtf", "--lambda", "3,2", "--oracle", "both"]), "1296/1296 pass\n");
    assert_eq!(stdout(&["count", "mtf", "--lambda", "4"]), "16\n");
    assert_eq!(stdout(&["count", "chains-b", "--p", "2", "--q", "1", "--connected"]), "16\n");
    assert_eq!(stdout(&["count", "chains-b", "--p", "2", "--q", "1", "--disconnected"]), "12\n");
    assert_eq!(stdout(&["count", "chains-b", "--p", "2", "--q", "1", "--oracle", "both"]), "28/28 pass\n");
    assert_eq!(stdout(&["count", "chains-marked", "--p", "2", "--q", "2"]), "96\n");
    assert_eq!(stdout(&["count", "elements-b", "--p", "2", "--q", "1"]), "20\n");
    assert_eq!(stdout(&["count", "elements-b", "--p", "2", "--q", "1", "--disconnected", "--oracle", "both"]), "12/12 pass\n");
    assert_eq!(stdout(&["count", "ncb-chains", "--max-n", "4", "--oracle", "both"]), "256/256 pass\n");
}

#[test]
fn count_multichains_with_rank_profile() {
    // Connected one-element multichains at rank 1, both flavors.
    assert_eq!(
        stdout(&["count", "chains-b", "--p", "2", "--q", "1", "--rank-profile", "1", "--connected", "--oracle", "both"]),
        "4/4 pass\n"
    );
    assert_eq!(
        stdout(&["count", "chains-marked", "--p", "2", "--q", "1", "--rank-profile", "1", "--connected", "--oracle", "both"]),
        "2/2 pass\n"
    );
    // The full profile reproduces the maximal chain counts.
    assert_eq!(
        stdout(&["count", "chains-b", "--p", "2", "--q", "1", "--rank-profile", "0,1,2,3", "--m", "4", "--connected", "--oracle", "both"]),
        "16/16 pass\n"
    );
}

#[test]
fn enumerate_line_counts_and_shapes() {
    let mtf = stdout(&["enumerate", "mtf", "--lambda", "2,1", "--format", "jsonl"]);
    assert_eq!(mtf.lines().count(), 8);
    for line in mtf.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["factors"].is_array());
    }

    let chains = stdout(&["enumerate", "chains-b", "--p", "1", "--q", "1"]);
    assert_eq!(chains.lines().count(), 4);
    for line in chains.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["connected"].is_boolean());
    }

    let elements = stdout(&["enumerate", "elements-b", "--p", "2", "--q", "1"]);
    assert_eq!(elements.lines().count(), 20);

    let csv = stdout(&["enumerate", "elements-b", "--p", "2", "--q", "1", "--format", "csv", "--limit", "3"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "display,rank,connectivity,zero_cycles");
    assert_eq!(lines[1], "e,0,0,0");
}

#[test]
fn verify_suites_pass_and_report() {
    let out = stdout(&["verify", "two-to-one", "--p", "2", "--q", "1"]);
    assert!(out.contains("PASS two-to-one-fibers [p=2,q=1]"));
    assert!(out.ends_with("suite two-to-one: 3 passed, 0 failed\n"));

    let out = stdout(&["verify", "reiner", "--max-n", "4"]);
    assert!(out.contains("PASS reiner-chains [n=4] 256"));
}

#[test]
fn verify_output_is_byte_identical_across_thread_counts() {
    let one = stdout(&["verify", "kk", "--max", "12", "--threads", "1"]);
    let many = stdout(&["verify", "kk", "--max", "12", "--threads", "7"]);
    assert_eq!(one, many);
    assert!(one.contains("suite kk: 144 passed, 0 failed"));
}

#[test]
fn usage_and_guard_errors_exit_2() {
    assert_eq!(exit_code(&["count", "mtf"]), 2);
    assert_eq!(exit_code(&["count", "chains-b", "--p", "2"]), 2);
    assert_eq!(exit_code(&["verify", "nope"]), 2);
    assert_eq!(exit_code(&["enumerate", "chains-b", "--p", "4", "--q", "4"]), 2);
    assert_eq!(exit_code(&["count", "mtf", "--lambda", "9,9", "--oracle", "enumerate"]), 2);
    assert_eq!(exit_code(&["count", "elements-b", "--p", "2", "--q", "1", "--oracle", "formula"]), 2);
    assert_eq!(exit_code(&["count", "chains-b", "--p", "2", "--q", "1", "--rank-profile", "1,2", "--m", "3"]), 2);
    assert_eq!(exit_code(&["not-a-verb"]), 2);
}

#[test]
fn guard_overrides_unlock_larger_runs() {
    // Raising the guard explicitly admits p+q = 7 element counting.
    assert_eq!(
        stdout(&["count", "elements-b", "--p", "4", "--q", "3", "--max-n", "7"]),
        "3800\n"
    );
    // Lowering it turns an otherwise fine request into a usage error.
    assert_eq!(
        exit_code(&["count", "elements-b", "--p", "2", "--q", "1", "--max-n", "2"]),
        2
    );
}

#[test]
fn export_goldens_matches_committed_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&["export-goldens", "--dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.lines().count(), 3);
    let lift = std::fs::read_to_string(dir.path().join("lift_3_2.json")).unwrap();
    assert_eq!(lift, include_str!("goldens/lift_3_2.json"));
    let hasse = std::fs::read_to_string(dir.path().join("hasse_2_1.json")).unwrap();
    assert_eq!(hasse, include_str!("goldens/hasse_2_1.json"));
    let annulus = std::fs::read_to_string(dir.path().join("annulus_4_3.json")).unwrap();
    assert_eq!(annulus, include_str!("goldens/annulus_4_3.json"));
}
