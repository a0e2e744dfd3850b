//! Acceptance suite: criteria 1 through 9 run the pinned-tolerance
//! checks from `sig6::selftest` (one printed pass/fail line each), and
//! criterion 10 exercises the compiled binary end to end — exit codes
//! and byte-identical determinism for every subcommand.

use std::process::Command;

use sig6::selftest::{self, CriterionResult};

fn check(result: CriterionResult) {
    let status = if result.pass { "PASS" } else { "FAIL" };
    println!(
        "criterion {} {} [{}] worst_ratio = {:.3e} ({})",
        result.id, status, result.name, result.worst_ratio, result.detail
    );
    assert!(
        result.pass,
        "criterion {} ({}) failed at ratio {:.3e}: {}",
        result.id, result.name, result.worst_ratio, result.detail
    );
}

#[test]
fn criterion_01_five_route_k_agreement() {
    check(selftest::criterion_1());
}

#[test]
fn criterion_02_sextic_identity_sweep() {
    check(selftest::criterion_2());
}

#[test]
fn criterion_03_bbg_parametrizations() {
    check(selftest::criterion_3());
}

#[test]
fn criterion_04_periodicity_suite() {
    check(selftest::criterion_4());
}

#[test]
fn criterion_05_pythagorean_and_boundary() {
    check(selftest::criterion_5());
}

#[test]
fn criterion_06_inversion_round_trip() {
    check(selftest::criterion_6());
}

#[test]
fn criterion_07_closed_form_vs_series() {
    check(selftest::criterion_7());
}

#[test]
fn criterion_08_weierstrass_suite() {
    check(selftest::criterion_8());
}

#[test]
fn criterion_09_modulus_map_suite() {
    check(selftest::criterion_9());
}

// ---------------------------------------------------------------------
// Criterion 10: the binary itself.

fn run_bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_sig6"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_10_self_test_exits_zero() {
    let out = run_bin(&["self-test"]);
    println!(
        "criterion 10 {} [self_test_exit_code] status = {:?}",
        if out.status.code() == Some(0) { "PASS" } else { "FAIL" },
        out.status.code()
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("id,name,worst_ratio,pass\n"));
    assert_eq!(stdout.lines().count(), 10, "header plus nine criteria");
    for line in stdout.lines().skip(1) {
        assert!(line.ends_with(",true"), "criterion line failed: {line}");
    }
}

#[test]
fn criterion_10_every_subcommand_is_deterministic() {
    let commands: &[&[&str]] = &[
        &["k-table", "--kk-grid", "0.1:0.9:9"],
        &["k-table", "--kk", "0.5", "--format", "json"],
        &["eval", "--kk", "0.6", "--u-range", "-K:K:25"],
        &["eval", "--kk", "0.3", "--u-range", "-2K:2K:17", "--format", "json"],
        &["verify-identity", "--x-grid", "0.02:0.9:45"],
        &["verify-identity", "--x-grid", "0.1:0.8:8", "--format", "json"],
        &["verify-bbg", "--p-grid", "0.05:0.95:19", "--which", "theorem"],
        &["verify-bbg", "--p-grid", "0.05:0.95:19", "--which", "corollary", "--format", "json"],
        &["roots", "--kk-grid", "0.1:0.9:9"],
        &["roots", "--kk", "0.86602540378443865", "--format", "json"],
        &["self-test"],
        &["self-test", "--format", "json"],
    ];
    for args in commands {
        let first = run_bin(args);
        let second = run_bin(args);
        assert_eq!(
            first.status.code(),
            Some(0),
            "{args:?} stderr: {}",
            String::from_utf8_lossy(&first.stderr)
        );
        assert_eq!(second.status.code(), Some(0), "{args:?}");
        assert!(!first.stdout.is_empty(), "{args:?} produced no output");
        assert_eq!(
            first.stdout, second.stdout,
            "{args:?} is not byte-identical across runs"
        );
        println!("criterion 10 PASS [determinism] {args:?}");
    }
}

#[test]
fn criterion_10_exit_codes() {
    // Usage errors exit 2.
    assert_eq!(run_bin(&["k-table"]).status.code(), Some(2));
    assert_eq!(
        run_bin(&["k-table", "--kk", "0.5", "--kk-grid", "0.1:0.9:3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run_bin(&["eval", "--kk", "1.5", "--u-range", "0:1:5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run_bin(&["eval", "--kk", "0.6", "--u-range", "0:K"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run_bin(&["no-such-command"]).status.code(), Some(2));
    // A verification that cannot meet its threshold exits 1 and names
    // the worst offender on stderr.
    let out = run_bin(&["verify-identity", "--x-grid", "0.1:0.9:5", "--tol", "1e-20"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(
        stderr.contains("worst"),
        "stderr should name the worst offender: {stderr}"
    );
    println!("criterion 10 PASS [exit_codes]");
}
