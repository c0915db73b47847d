use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringbuckle"))
        .args(args)
        .env_remove("RINGBUCKLE_QUAD_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn hydrostatic_critical_row() {
    let out = run(&["critical", "--load", "hydrostatic", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = text.lines().find(|l| l.starts_with("hydrostatic,2,")).unwrap();
    assert!(row.starts_with("hydrostatic,2,3,3,admissible,2.999"), "{row}");
    assert!(row.contains(",yes,") && row.contains("cos 2θ"));
}

#[test]
fn central_third_harmonic() {
    let text = stdout(&run(&["critical", "--load", "central", "--m-max", "6", "--format", "csv"]));
    assert!(text.lines().any(|l| l.starts_with("central,3,9.14285714286,64/7,")));
}

#[test]
fn json_has_one_record_per_load() {
    let out = run(&["critical", "--load", "all", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let records = v.as_array().unwrap();
    assert_eq!(records.len(), 4);
    let lambdas: Vec<_> = records.iter().map(|r| r["critical_fraction"].as_str().unwrap()).collect();
    assert_eq!(lambdas, ["4", "3", "9/2", "9/4"]);
}

#[test]
fn postbuckle_is_byte_identical() {
    let args = ["postbuckle", "--load", "all", "--format", "csv"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().next(), Some("load,case_H,C_over_rho,lambda,stability"));
    assert_eq!(text.lines().count(), 1 + 4 * 41);
}

#[test]
fn every_format_is_deterministic() {
    for cmd in ["critical", "inextensible"] {
        for format in ["csv", "json", "table"] {
            let a = run(&[cmd, "--format", format]);
            let b = run(&[cmd, "--format", format]);
            assert_eq!(a.stdout, b.stdout, "{cmd} {format}");
        }
    }
}

#[test]
fn dead_load_rotation_multiplier() {
    let out = run(&["rigid", "--load", "dead", "--beta-R", "1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = text.lines().nth(1).unwrap();
    let modified: f64 = row.split(',').nth(4).unwrap().parse().unwrap();
    assert!((modified - 36.0 / 11.0).abs() < 1e-9);
}

#[test]
fn singular_central_translation_exits_2() {
    let out = run(&["rigid", "--load", "central", "--a1", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn inextensible_table() {
    let out = run(&["inextensible", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(
        text.lines().next(),
        Some("load,naive_lambda,corrected_lambda,extensible_lambda,identity_residual")
    );
    assert!(text.contains("dead,,4,4,"));
    assert!(text.contains("central,-36,4.5,4.5,"));
}

#[test]
fn invalid_options_are_reported_together() {
    let out = run(&["postbuckle", "--samples", "1", "--cmax", "-1", "--h", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().filter(|l| l.trim_start().starts_with("- ")).count(), 3, "{err}");
}

#[test]
fn unknown_load_and_bad_quadrature_exit_2() {
    assert_eq!(run(&["critical", "--load", "wind"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_ringbuckle"))
        .args(["inextensible"])
        .env("RINGBUCKLE_QUAD_N", "two")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let strict = run(&["verify"]);
    assert_eq!(strict.status.code(), Some(1));
    let json = run(&["verify", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    let failed: Vec<_> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["id"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(failed, ["path-vs-stationarity", "rigid-rotation-dead"]);
    assert_eq!(run(&["verify", "--tolerance-scale", "0"]).status.code(), Some(1));
}

#[test]
fn output_goes_to_file() {
    let dir = std::env::temp_dir().join(format!("ringbuckle-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("crit.csv");
    let out = run(&["critical", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&run(&["critical", "--format", "csv"])));
    std::fs::remove_dir_all(dir).unwrap();
}
