//! End-to-end checks of the binary: exit-code contract, stream separation,
//! determinism, JSON round-trips, config-file handling.

use std::process::{Command, Output};

use k3cert::report::{parse_report, ResultItem};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3cert"))
        .args(args)
        .env_remove("K3CERT_CONFIG")
        .output()
        .expect("binary runs")
}

fn run_with_config(args: &[&str], config: &str) -> Output {
    let dir = std::env::temp_dir().join(format!("k3cert-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("cfg-{:x}.json", fxhash(config)));
    std::fs::write(&path, config).unwrap();
    Command::new(env!("CARGO_BIN_EXE_k3cert"))
        .args(args)
        .env("K3CERT_CONFIG", &path)
        .output()
        .expect("binary runs")
}

fn fxhash(s: &str) -> u64 {
    s.bytes().fold(0xcbf29ce484222325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3))
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn exit_code_golden_matrix() {
    // (args, expected exit code)
    let matrix: &[(&[&str], i32)] = &[
        (&["rho", "--g", "11", "--r", "2", "--d", "9"], 0),
        (&["qform", "represents", "--a", "1", "--b", "0", "--c", "1", "--target", "-1"], 0),
        (&["qform", "represents", "--a", "1", "--b", "0", "--c", "-2", "--target", "-1"], 0),
        // indefinite, target 5, tiny bound: genuinely inconclusive
        (&["qform", "represents", "--a", "1", "--b", "0", "--c", "-61", "--target", "5", "--bound", "10"], 2),
        (&["minus-two-free", "--hsq", "6", "--csq", "20", "--hc", "13"], 0),
        // constructed (-2)-vector refutes the claim
        (&["minus-two-free", "--hsq", "-2", "--csq", "2", "--hc", "0"], 1),
        (&["exceptional-pairs", "--gmax", "30"], 0),
        (&["certify", "gonality", "--g", "13", "--r", "3", "--d", "12"], 0),
        // growth hypothesis fails badly: window minimum drops under T
        (&["certify", "gonality", "--g", "30", "--r", "3", "--d", "12"], 1),
        // hypotheses fail but the window minimum still meets T: inconclusive
        (&["certify", "gonality", "--g", "8", "--r", "2", "--d", "9"], 2),
        (&["certify", "clifford-net", "--g", "13", "--r", "3", "--d", "12"], 0),
        (&["genus11"], 0),
        (&["lattice", "solve", "--hsq", "6", "--csq", "20", "--hc", "13", "--deg", "9", "--selfint", "2"], 0),
        (&["thresholds", "--g", "11", "--d", "10", "--k", "7"], 0),
    ];
    for (args, expected) in matrix {
        let out = run(args);
        assert_eq!(out.status.code(), Some(*expected), "args {args:?}: {out:?}");
    }
}

#[test]
fn input_errors_exit_3_with_clean_stdout() {
    for args in [
        vec!["rho", "--g", "11"],
        vec!["rho", "--g", "x", "--r", "2", "--d", "9"],
        vec!["no-such-command"],
        vec!["minus-two-free", "--hsq", "5", "--csq", "20", "--hc", "13"], // odd H^2
        vec!["qform", "represents", "--a", "1", "--b", "0", "--c", "1", "--target", "-1", "--bound", "0"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(3), "args {args:?}");
        assert!(out.stdout.is_empty(), "stdout must stay clean for {args:?}");
        assert!(!out.stderr.is_empty(), "diagnostics expected for {args:?}");
    }
}

#[test]
fn rho_prints_bare_value() {
    let out = run(&["rho", "--g", "11", "--r", "2", "--d", "9"]);
    assert_eq!(stdout(&out), "-1\n");
}

#[test]
fn byte_identical_reruns() {
    for args in [
        vec!["genus11", "--json"],
        vec!["exceptional-pairs", "--gmax", "30", "--json"],
        vec!["certify", "gonality", "--g", "13", "--r", "3", "--d", "12", "--json"],
        vec!["thresholds", "--g", "11", "--d", "10", "--k", "7", "--format", "markdown"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "nondeterministic output for {args:?}");
    }
}

#[test]
fn json_reports_parse_and_round_trip() {
    let out = run(&["genus11", "--json"]);
    let report = parse_report(&stdout(&out)).unwrap();
    assert_eq!(report.tool, "k3cert");
    assert_eq!(report.version, env!("CARGO_PKG_VERSION"));
    let reserialized = k3cert::report::emit_report(&report, k3cert::report::Format::Json);
    assert_eq!(stdout(&out), reserialized);
    match &report.results[0] {
        ResultItem::Suite { report: suite, .. } => {
            assert!(suite.all_pass);
            assert_eq!(suite.lattice, (6, 20, 13));
        }
        other => panic!("unexpected item {other:?}"),
    }
}

#[test]
fn certify_json_carries_hypotheses_and_minus_one_check() {
    let out = run(&["certify", "gonality", "--g", "21", "--r", "4", "--d", "18", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = parse_report(&stdout(&out)).unwrap();
    let (cert, rep) = match (&report.results[0], &report.results[1]) {
        (
            ResultItem::Minimization { certificate, .. },
            ResultItem::Representation { certificate: rep, .. },
        ) => (certificate, rep),
        other => panic!("unexpected items {other:?}"),
    };
    assert_eq!(cert.min_found, 12);
    assert_eq!(cert.threshold, 12);
    assert_eq!(cert.window, (-172, 172));
    assert!(cert.tail_ok);
    assert!(cert.hypotheses.values().all(|&v| v));
    // the quadratic form does represent -1 here; reported, not gating
    assert_eq!(rep.status, k3cert::qform::RepStatus::Yes);
}

#[test]
fn thresholds_markdown_has_exact_fractions() {
    let out = run(&["thresholds", "--g", "11", "--d", "10", "--k", "7", "--format", "markdown"]);
    let text = stdout(&out);
    for needle in [
        "| nene | >= | 121/12 | no |",
        "| sese | >= | 21/2 | no |",
        "| fiducia | > | 41/4 | no |",
        "| vai | < | 34/3 | yes |",
    ] {
        assert!(text.contains(needle), "missing {needle:?} in:\n{text}");
    }
}

#[test]
fn lattice_file_input() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("k3cert-lattice-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"h_sq": 6, "c_sq": 20, "hc": 13}"#).unwrap();
    let out = run(&["minus-two-free", "--lattice", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    std::fs::write(&path, r#"{"h_sq": 6, "c_sq": 20, "hc": 13, "extra": 1}"#).unwrap();
    let out = run(&["minus-two-free", "--lattice", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let _ = std::fs::remove_file(&path);
}

#[test]
fn config_file_controls_defaults() {
    // search bound comes from the config and is echoed in the certificate
    let out = run_with_config(
        &["qform", "represents", "--a", "1", "--b", "0", "--c", "-2", "--target", "-1", "--json"],
        r#"{"search_bound": 7}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let report = parse_report(&stdout(&out)).unwrap();
    match &report.results[0] {
        ResultItem::Representation { certificate, .. } => {
            assert_eq!(certificate.bound_used, Some(7));
        }
        other => panic!("unexpected item {other:?}"),
    }

    // n_window flows into certify
    let out = run_with_config(
        &["certify", "gonality", "--g", "13", "--r", "3", "--d", "12", "--json"],
        r#"{"n_window": 50}"#,
    );
    let report = parse_report(&stdout(&out)).unwrap();
    match &report.results[0] {
        ResultItem::Minimization { certificate, .. } => {
            assert_eq!(certificate.window, (-50, 50));
        }
        other => panic!("unexpected item {other:?}"),
    }

    // unknown keys are rejected
    let out = run_with_config(&["genus11"], r#"{"search_bound": 7, "wat": 1}"#);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn mukai_vector_json_shape() {
    let out = run(&[
        "mukai", "lm", "--hsq", "6", "--csq", "20", "--hc", "13", "--g", "11", "--r", "2",
        "--d", "10", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let vector = &value["results"][0]["vector"]["vector"];
    assert_eq!(vector["rank"], 3);
    assert_eq!(vector["c1"], serde_json::json!([0, 1]));
    assert_eq!(vector["s"], 3);
}

#[test]
fn timestamps_only_on_request() {
    let plain = run(&["rho", "--g", "11", "--r", "2", "--d", "9", "--json"]);
    assert!(!stdout(&plain).contains("timestamp_unix_secs"));
    let stamped = run(&["rho", "--g", "11", "--r", "2", "--d", "9", "--json", "--timestamps"]);
    assert!(stdout(&stamped).contains("timestamp_unix_secs"));
}
