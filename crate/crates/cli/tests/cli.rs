//! CLI-level behavior: exit codes, deterministic text output, JSON shape,
//! and the constants cache, exercised through the library entry point and
//! the built binary.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["periodlab"];
    argv.extend_from_slice(args);
    periodlab_cli::run(argv)
}

#[test]
fn exit_codes() {
    // success
    let (code, out) = run(&["period", "compute", "pi", "--digits", "10"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("3.141592654 ± 10^-10"), "{out}");
    // computational error: domain violation
    let (code, out) = run(&["period", "compute", "zeta", "--s", "1"]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("DomainError"), "{out}");
    // usage error: unknown flag
    let (code, _) = run(&["period", "compute", "pi", "--frobnicate"]);
    assert_eq!(code, 2);
    // usage error: digits over the maximum
    let (code, out) = run(&["period", "compute", "pi", "--digits", "20000"]);
    assert_eq!(code, 2, "{out}");
}

#[test]
fn text_output_is_deterministic() {
    let args = ["mzv", "dims", "--max-weight", "6"];
    let (c1, o1) = run(&args);
    let (c2, o2) = run(&args);
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert_eq!(o1, o2, "identical argv must produce byte-identical text");
}

#[test]
fn json_lines_roundtrip() {
    let (code, out) = run(&["--json", "period", "compute", "zeta", "--s", "3", "--digits", "30"]);
    assert_eq!(code, 0, "{out}");
    let mut value_line = None;
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("every line is JSON");
        if v["kind"] == "value" {
            value_line = Some(v);
        } else if v["kind"] == "meta" {
            assert!(v["nondeterministic"].is_array());
        }
    }
    let v = value_line.expect("a value line");
    assert_eq!(v["digits"], 30);
    // the JSON decimal matches the text-mode decimal
    let (_, text) = run(&["period", "compute", "zeta", "--s", "3", "--digits", "30"]);
    let decimal = v["decimal"].as_str().unwrap();
    assert!(text.contains(decimal), "JSON {decimal} not in text {text}");
    assert!(decimal.starts_with("1.2020569031595942"));
}

#[test]
fn env_var_sets_default_digits() {
    // process-level env manipulation: run the built binary instead
    let exe = env!("CARGO_BIN_EXE_periodlab");
    let out = Command::new(exe)
        .args(["period", "compute", "pi"])
        .env("PERIODLAB_DIGITS", "12")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("precision: 12 digits"), "{text}");
    assert!(text.contains("3.14159265359"), "{text}");
}

#[test]
fn binary_exit_codes_match() {
    let exe = env!("CARGO_BIN_EXE_periodlab");
    let ok = Command::new(exe)
        .args(["galois", "describe", "--class", "zeta(3)"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let text = String::from_utf8_lossy(&ok.stdout);
    assert!(text.contains("Q^× ⋉ Q"), "{text}");
    assert!(text.contains("(πi)^3"), "{text}");

    let bad = Command::new(exe)
        .args(["galois", "describe", "--class", "zeta(1)"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));

    let usage = Command::new(exe).args(["bogus"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn cache_speeds_reuse_and_survives_corruption() {
    let dir = std::env::temp_dir().join(format!("periodlab-cli-cache-{}", std::process::id()));
    let _ = std::fs::create_dir_all(&dir);
    let cache_path = dir.join("c.json");
    let cache = cache_path.to_str().unwrap();

    let args = ["period", "compute", "gamma", "--x", "1/4", "--digits", "40", "--cache", cache];
    let (c1, o1) = run(&args);
    assert_eq!(c1, 0, "{o1}");
    assert!(cache_path.exists());
    let (c2, o2) = run(&args);
    assert_eq!(c2, 0);
    assert_eq!(o1, o2, "cache hit must not change the text output");

    // corrupt cache: ignored, recomputed, identical output
    std::fs::write(&cache_path, "garbage").unwrap();
    let (c3, o3) = run(&args);
    assert_eq!(c3, 0);
    assert_eq!(o1, o3, "corrupt cache must be ignored");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn conjugates_and_probe_commands() {
    let (code, out) = run(&[
        "galois", "conjugates", "--class", "pi", "--params", "2,1/3", "--digits", "20",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("conjugate[r=2]"), "{out}");
    assert!(out.contains("6.2831853071795864769"), "2π expected: {out}");

    let (code, out) = run(&[
        "galois", "conjugates", "--class", "elliptic(4,0)", "--params", "(1,0),(0,1)",
        "--digits", "15",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("2.62205755429212"), "{out}");

    // zero parameter rejected with a computational exit
    let (code, out) = run(&["galois", "conjugates", "--class", "pi", "--params", "0"]);
    assert_eq!(code, 1);
    assert!(out.contains("ZeroParameter"), "{out}");
}

#[test]
fn golden_ratio_hunt_via_cli() {
    let (code, out) = run(&[
        "relation", "hunt", "--values", "1,phi,phi^2", "--max-norm", "100", "--digits", "40",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("1·1 + 1·phi - 1·phi^2 = 0"), "{out}");
}

#[test]
fn minpoly_command() {
    let (code, out) = run(&[
        "relation", "minpoly", "--value", "sqrt(2)", "--max-degree", "2", "--max-norm", "50",
        "--digits", "40",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("degree 2"), "{out}");
    assert!(out.contains("-2 + 1·x^2"), "{out}");
}

#[test]
fn hyp_command_matches_agm_route() {
    let (code, out) = run(&[
        "period", "compute", "hyp", "--upper", "1/2,1/2", "--lower", "1", "--z", "1/4",
        "--digits", "30",
    ]);
    assert_eq!(code, 0, "{out}");
    // 2F1(1/2,1/2;1;1/4) = 1/agm(1, sqrt(3)/2); the identity itself is
    // pinned against the AGM at 50 digits by acceptance criterion 6
    assert!(out.contains("1.07318200714936437505"), "{out}");
}
