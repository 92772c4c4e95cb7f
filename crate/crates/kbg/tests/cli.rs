//! End-to-end checks against the compiled `kbg` binary: exit codes,
//! output formats, and the KBG_ORACLE_CAP environment override.

use std::process::Command;

fn kbg() -> Command {
    Command::new(env!("CARGO_BIN_EXE_kbg"))
}

#[test]
fn rank_renders_paper_table() {
    let out = kbg()
        .args(["rank", "--group", "exc:WE8", "--format", "text"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "Z x Z_(2)^31 x Z_(3)^6 x Z_(5)^2 x Z_(7)^1"
    );
}

#[test]
fn verify_identities_exits_zero() {
    let out = kbg()
        .args(["verify", "--suite", "identities", "--p", "2", "--degree", "64"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().filter(|l| l.starts_with("ok ")).count(), 9);
}

#[test]
fn oracle_json_output() {
    let out = kbg()
        .args(["oracle", "--group", "dic:2", "--primes", "2", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["order"], "8");
    assert_eq!(v["classes"], "5");
    assert_eq!(v["r"]["2"], "4");
}

#[test]
fn env_var_overrides_cap() {
    let out = kbg()
        .args(["oracle", "--group", "sym:5"])
        .env("KBG_ORACLE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    // the --cap flag takes precedence over the environment
    let out = kbg()
        .args(["oracle", "--group", "sym:5", "--cap", "1000"])
        .env("KBG_ORACLE_CAP", "10")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn distinct_error_codes() {
    let unknown = kbg().args(["rank", "--group", "frob:7"]).output().unwrap();
    assert_eq!(unknown.status.code(), Some(3));
    let fixture_only = kbg().args(["oracle", "--group", "exc:H4"]).output().unwrap();
    assert_eq!(fixture_only.status.code(), Some(3));
    let cap = kbg()
        .args(["oracle", "--group", "weylB:7", "--cap", "1000"])
        .output()
        .unwrap();
    assert_eq!(cap.status.code(), Some(4));
    let usage = kbg().args(["rank"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let domain = kbg()
        .args(["rank", "--group", "sym:4", "--primes", "6"])
        .output()
        .unwrap();
    assert_eq!(domain.status.code(), Some(5));
}

#[test]
fn figure_writes_file() {
    let dir = std::env::temp_dir().join("kbg_figure_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("grid.csv");
    let out = kbg()
        .args([
            "figure",
            "--p",
            "2",
            "--cutoff",
            "10",
            "--resolution",
            "16",
            "--out",
            path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("re_x,im_x,re_g,im_g\n"));
    assert!(text.lines().count() > 100);
    std::fs::remove_file(&path).ok();
}

#[test]
fn series_cross_checks_closed_form() {
    // coefficients of the Weyl B series match rank output family-wise
    let out = kbg()
        .args(["series", "--family", "b", "--p", "2", "--degree", "6", "--format", "csv"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let last = text.lines().last().unwrap();
    // r~(2, W(B6)) = sum of r~(2,S_m) r~(2,S_{6-m}) = 1*6+1*4+2*4+2*2+4*2+4*1+6*1 = 40
    assert_eq!(last, "6,40");
}

#[test]
fn verify_oracle_suite_small_cap_fails_cleanly() {
    // the full sweep includes an order-645120 instance; a small cap must
    // surface as the cap-exceeded exit code, not a panic
    let out = kbg()
        .args(["verify", "--suite", "oracle", "--cap", "50000"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}
