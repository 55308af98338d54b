use std::process::{Command, Output};

use serde_json::Value;

fn srho(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srho"))
        .args(args)
        .env_remove("SRHO_GRID_N")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn f(v: &Value, key: &str) -> f64 {
    v[key].as_f64().unwrap_or_else(|| panic!("{key} missing in {v}"))
}

#[test]
fn constants_for_unit_sigma() {
    let v = json_of(&srho(&["constants", "--sigma", "1"]));
    assert_eq!(v["schema"], 1);
    assert!((f(&v, "m") - 0.506_053).abs() < 1e-5);
    assert!((f(&v, "t2") - 1.916_72).abs() < 1e-4);
    assert!((f(&v, "gamma0") - 0.065_423_8).abs() < 1e-6);
    assert!((f(&v, "tau") - 0.832_934).abs() < 1e-4);
    assert!((f(&v, "c0") - 1f64.cos()).abs() < 1e-15);
    assert!((f(&v, "c1") - 1f64.cosh()).abs() < 1e-15);
    assert!((f(&v["growth"], "lower") - 0.619).abs() < 1e-3);
    // l and t0 satisfy the chord equation
    let (l, t0) = (f(&v, "l"), f(&v, "t0"));
    let tau = t0 / 2.0;
    assert!(((tau.sin()).sin() * (tau.cos()).sinh() - l).abs() < 1e-12);
}

#[test]
fn starlike_order_radius_inverts_cosine() {
    let v = json_of(&srho(&["radius", "--class", "starlike-order", "--zeta", "0.8775825619"]));
    assert!((f(&v, "radius") - 0.25).abs() < 1e-9);
    assert!(f(&v, "residual") <= 1e-10);
}

#[test]
fn boundary_rows_at_quarter_turns() {
    let out = srho(&["boundary", "--sigma", "1", "--samples", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<f64>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert!(text.starts_with("t,x,y\n"));
    assert_eq!(rows.len(), 4);
    let ts: Vec<f64> = rows.iter().map(|r| r[0]).collect();
    let pi = std::f64::consts::PI;
    assert_eq!(ts, [-pi, -pi / 2.0, 0.0, pi / 2.0]);
    assert_eq!(rows[2][1], 1f64.cosh());
    assert_eq!(rows[2][2], 0.0);
}

#[test]
fn floats_are_printed_with_seventeen_digits() {
    let out = srho(&["thresholds", "--sigma", "1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"zeta\":5.4030230586813977e-1"), "{text}");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(srho(&["no-such-verb"]).status.code(), Some(2));
    assert_eq!(srho(&["radius", "--class", "janowski", "--A", "0.5"]).status.code(), Some(2));
    assert_eq!(srho(&["constants", "--sigma", "2"]).status.code(), Some(2));
    assert_eq!(srho(&["check", "--c", "1.2", "--kappa", "0.5"]).status.code(), Some(2));
    let out = srho(&["radius", "--class", "f2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn failed_checks_exit_with_one() {
    assert_eq!(srho(&["check", "--kappa", "0.6"]).status.code(), Some(0));
    assert_eq!(srho(&["check", "--kappa", "0.9"]).status.code(), Some(1));
    assert_eq!(srho(&["check", "--A", "0.4", "--B", "0.0"]).status.code(), Some(0));
    assert_eq!(srho(&["check", "--A", "0.9", "--B", "0.0"]).status.code(), Some(1));
    assert_eq!(srho(&["verify", "--family", "exp-line", "--param", "0.4"]).status.code(), Some(0));
    assert_eq!(srho(&["verify", "--family", "exp-line", "--param", "0.5"]).status.code(), Some(1));
}

#[test]
fn sharpness_probe_for_a_radius() {
    let v = json_of(&srho(&["verify", "--class", "f2", "--n", "1"]));
    assert_eq!(v["sharpness"]["pass"], true);
    assert_eq!(v["radius"]["case"], "right edge");
}

#[test]
fn output_is_byte_stable_and_out_matches_stdout() {
    let args = ["check", "--family", "koebe", "--param", "0.2"];
    let a = srho(&args);
    let b = srho(&args);
    assert_eq!(a.stdout, b.stdout);
    let dir = std::env::temp_dir().join(format!("srho-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("koebe.json");
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    let c = srho(&with_out);
    assert_eq!(c.status.code(), Some(0));
    assert!(c.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn figures_emit_csv_and_svg() {
    let dir = std::env::temp_dir().join(format!("srho-fig-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let svg = dir.join("inc.svg");
    let out = srho(&["figure", "--name", "inclusions", "--samples", "90", "--svg", svg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("curve,t,x,y\n"));
    // the region itself is sampled on a half-open circle
    assert_eq!(text.lines().count(), 1 + 90 + 6 * 91);
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    std::fs::remove_dir_all(&dir).unwrap();

    let gc = String::from_utf8(srho(&["figure", "--name", "gc", "--samples", "10"]).stdout).unwrap();
    assert!(gc.lines().nth(1).unwrap().starts_with("c=0.6,"));
    let region = String::from_utf8(srho(&["figure", "--name", "region", "--samples", "4"]).stdout).unwrap();
    assert_eq!(region, String::from_utf8(srho(&["boundary", "--samples", "4"]).stdout).unwrap());
}

#[test]
fn grid_override_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_srho"))
        .args(["constants"])
        .env("SRHO_GRID_N", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_srho"))
        .args(["constants"])
        .env("SRHO_GRID_N", "4001")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((f(&v, "m") - 0.506_053).abs() < 1e-5);
}

#[test]
fn suite_exit_code_tracks_criteria() {
    let out = srho(&["suite"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 9, "{text}");
    for (i, l) in lines[..8].iter().enumerate() {
        assert!(l.starts_with(&format!("criterion {} [", i + 1)), "{l}");
    }
    let all = lines[..8].iter().all(|l| l.contains("[PASS]"));
    assert_eq!(out.status.code(), Some(if all { 0 } else { 1 }));
    assert_eq!(lines[8] == "8/8 criteria pass", all);
}
