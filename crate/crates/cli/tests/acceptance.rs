//! Acceptance: CLI contract. A scripted suite of 12 invocations covers
//! every subcommand and both error classes, asserting exit codes and
//! byte-stable JSON round-trips.

use std::process::{Command, Output};

use serde_json::Value;

use catalan_series_cli::json::to_canonical_string;

fn invoke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catalan-series"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Exit 0, stdout is one JSON line that survives parse -> re-serialize
/// byte-identically; returns the parsed envelope.
fn expect_json(args: &[&str]) -> Value {
    let out = invoke(args);
    assert!(
        out.status.success(),
        "{args:?} exited {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8(out.stdout).expect("utf-8 stdout");
    let line = stdout.strip_suffix('\n').expect("trailing newline");
    let value: Value = serde_json::from_str(line).expect("valid JSON");
    assert_eq!(
        to_canonical_string(&value),
        line,
        "round trip not byte-identical for {args:?}"
    );
    for key in ["command", "inputs", "results", "exact"] {
        assert!(value.get(key).is_some(), "{args:?} missing {key}");
    }
    value
}

fn expect_exit(args: &[&str], code: i32) {
    let out = invoke(args);
    assert_eq!(
        out.status.code(),
        Some(code),
        "{args:?}: stderr {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(
        !out.stderr.is_empty(),
        "{args:?}: expected a message on stderr"
    );
}

#[test]
fn criterion_10_cli_contract() {
    // 1. catalan, plain
    let v = expect_json(&["catalan", "0", "--count", "7"]);
    assert_eq!(
        v["results"]["values"],
        serde_json::json!(["1", "1", "2", "5", "14", "42", "132"])
    );

    // 2. catalan, cross-checked
    let v = expect_json(&["catalan", "10", "--mode", "both"]);
    assert_eq!(v["results"]["values"][0], "16796");
    assert_eq!(v["results"]["agreement"], serde_json::json!(true));

    // 3. catalan, negative index -> usage error
    expect_exit(&["catalan", "-1"], 2);

    // 4. series, both sources agree
    let v = expect_json(&["series", "--A", "1", "--B", "1", "--order", "9", "--source", "both"]);
    assert_eq!(v["results"]["first_mismatch_degree"], Value::Null);

    // 5. series, exact rational pipeline
    let v = expect_json(&["series", "--A", "2", "--B", "-3/2", "--order", "5"]);
    assert_eq!(v["results"]["coefficients"][5], "36");

    // 6. series, unparsable rational -> usage error
    expect_exit(&["series", "--A", "1/0", "--B", "1", "--order", "3"], 2);

    // 7. radius from (A, B)
    let v = expect_json(&["radius", "--A", "1", "--B", "-1", "--n", "1000"]);
    assert_eq!(v["results"]["analytic_radius"].as_f64(), Some(0.5));
    let estimate = v["results"]["hadamard_estimate"].as_f64().unwrap();
    assert!((estimate - 0.5).abs() / 0.5 < 0.02, "estimate {estimate}");

    // 8. radius from geometry
    let v = expect_json(&["radius", "--m", "2", "--alpha", "1", "--e", "1"]);
    let vt = v["results"]["v_threshold"].as_f64().unwrap();
    assert!((vt - 3.4641016).abs() < 1e-6, "v threshold {vt}");

    // 9. radius, both parameter sets -> usage error
    expect_exit(
        &["radius", "--A", "1", "--B", "-1", "--m", "2", "--alpha", "1", "--e", "1"],
        2,
    );

    // 10. radius, degenerate B: infinite radius, estimate omitted
    let v = expect_json(&["radius", "--A", "1", "--B", "0"]);
    assert_eq!(v["results"]["analytic_radius"], "inf");
    assert!(v["results"].get("hadamard_estimate").is_none());

    // 11. eval inside the radius
    let v = expect_json(&["eval", "--A", "1", "--B", "-1", "--w", "0.25", "--order", "81"]);
    assert!(v["results"]["abs_error"].as_f64().unwrap() < 1e-10);
    assert_eq!(v["results"]["inside_radius"], serde_json::json!(true));

    // 12. eval past the branch point -> domain error naming it
    let out = invoke(&["eval", "--A", "1", "--B", "1", "--w", "0.6", "--order", "5"]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("0.5"), "stderr must name the branch point: {stderr}");

    println!("[criterion 10] PASS  12 invocations: exit codes and byte-stable JSON");
}
