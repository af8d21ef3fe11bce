//! End-to-end tests of the command-line interface: output payloads, exit
//! status contract, and byte-determinism of reports.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gwa-blocks"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn block_preset_sl2() {
    for c in 0..=5 {
        let out = run(&["block", "--preset", "sl2", "--weight", &c.to_string()]);
        assert!(out.status.success());
        let text = stdout(&out);
        assert!(text.contains("block of size 2"), "{text}");
        assert!(text.contains(&format!("weight {}", -c - 2)));
        assert!(text.contains(&format!("weight {c}")));
    }
}

#[test]
fn block_preset_quantum() {
    let out = run(&["block", "--preset", "quantum", "--weight", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("block of size 2"));
    assert!(text.contains("weight 2"));
}

#[test]
fn block_from_config_file() {
    let path = std::env::temp_dir().join("gwa-cli-quadratic.cfg");
    std::fs::write(
        &path,
        "kind = polyshift\nr = 1\ngamma = 1\nz0 = 0,-5/3,1\nz1 = 1\nweight = 0\nbound = 32\n",
    )
    .unwrap();
    let out = run(&["block", "--config", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("block of size 3"), "{text}");
    assert!(text.contains("singular degrees [1, 3]"));
}

#[test]
fn dims_formula_and_oracle() {
    let out = run(&["dims", "--n", "3", "--ext", "L1", "L2", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("= 1"));
    // Outside the formula table: distinguished result, then oracle rerouting.
    let out = run(&["dims", "--n", "4", "--ext", "M3/M1", "P1/P3", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("unsupported"));
    let out = run(&["dims", "--n", "4", "--ext", "M3/M1", "P1/P3", "1", "--oracle"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("(oracle)"));
}

#[test]
fn dims_from_presentation_reports_block_first() {
    let out = run(&[
        "dims", "--preset", "sl2", "--weight", "0", "--ext", "L1", "L2", "1", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["results"]["n"], 2);
    assert_eq!(v["results"]["block"]["size"], 2);
    assert_eq!(v["results"]["dim"], 1);
}

#[test]
fn hilbert_json_payload() {
    let out = run(&["hilbert", "--n", "2", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["results"]["koszul"], true);
    assert_eq!(v["results"]["det_E"], serde_json::json!([1]));
    // Row-major coefficient lists per entry.
    assert_eq!(
        v["results"]["hilbert_E"],
        serde_json::json!([[[1], [0, 1]], [[0, 1], [1, 0, 1]]])
    );
    assert_eq!(
        v["results"]["hilbert_A"],
        serde_json::json!([[[1, 0, 1], [0, 1]], [[0, 1], [1]]])
    );
}

#[test]
fn tableau_golden_figures() {
    let out = run(&["tableau", "--psi", "5,3,2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "5\n432\n321\n21\n1\n");
    let out = run(&["tableau", "--skew", "6,4,3,2", "/", "4,3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "6\n5432\n::21\n::1\n");
    let out = run(&["tableau", "--skew", "6,4,3,2/4,3"]);
    assert_eq!(stdout(&out), "6\n5432\n::21\n::1\n");
    let out = run(&["tableau", "--object", "T3", "--n", "3"]);
    assert_eq!(stdout(&out), "321\n21\n1\n");
}

#[test]
fn submodules_counts_and_refusal() {
    let out = run(&["submodules", "--n", "3", "--object", "P1/P3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("4 submodules"));
    let out = run(&["submodules", "--n", "4", "--object", "P1/P5", "--ceiling", "100"]);
    assert_eq!(out.status.code(), Some(3), "resource refusal is exit 3");
}

#[test]
fn verify_scopes_and_exit_codes() {
    let out = run(&["verify", "--scope", "formulas", "--n-max", "8"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let out = run(&["verify", "--scope", "oracle", "--n-max", "4"]);
    assert!(out.status.success(), "{}", stdout(&out));
    // The tableau scope passes up to n = 3; from n = 4 it reports the
    // documented extension-count deviation and exits 2.
    let out = run(&["verify", "--scope", "styt", "--n-max", "3"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let out = run(&["verify", "--scope", "styt", "--n-max", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, vec!["tableau_extension_conformance"]);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["block", "--preset", "nope", "--weight", "0"]).status.code(), Some(1));
    assert_eq!(run(&["dims", "--ext", "L1", "L2", "1"]).status.code(), Some(1));
    assert_eq!(
        run(&["dims", "--n", "3", "--ext", "L9", "L1", "0"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["tableau", "--psi", "2,2"]).status.code(), Some(1));
    assert_eq!(run(&["nonsense"]).status.code(), Some(1));
    assert_eq!(
        run(&["submodules", "--n", "2", "--object", "P1", "--field", "q"]).status.code(),
        Some(1)
    );
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for args in [
        vec!["hilbert", "--n", "3", "--format", "json"],
        vec!["verify", "--scope", "formulas", "--n-max", "5", "--format", "json"],
        vec!["block", "--preset", "sl2", "--weight", "2", "--format", "json"],
        vec!["submodules", "--n", "3", "--object", "P1/P4", "--format", "json"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.code() == b.status.code());
        assert_eq!(a.stdout, b.stdout, "nondeterministic report for {args:?}");
    }
}
