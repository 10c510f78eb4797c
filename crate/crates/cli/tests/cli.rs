use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bellsim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bellsim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_config(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn data_rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

const SWEEP: &str = r#"
[scenario]
family = "pol"

[[axis]]
name = "n"
start = 1
stop = 3
steps = 3

[[axis]]
name = "eta2"
start = 0.6
stop = 1.0
steps = 5
"#;

#[test]
fn unknown_command_exits_4() {
    assert_eq!(code(&bellsim(&["plot"])), 4);
}

#[test]
fn unknown_figure_is_a_config_error() {
    let out = bellsim(&["figure", "fig9"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown figure"));
}

#[test]
fn bad_configs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&bellsim(&["sweep", "--config", "/nonexistent/run.toml"])), 2);
    let garbage = write_config(dir.path(), "bad.toml", "[scenario\nfamily = ");
    assert_eq!(code(&bellsim(&["sweep", "--config", &garbage])), 2);
    let range = write_config(
        dir.path(),
        "range.toml",
        "[scenario]\nfamily = \"ecs\"\nalpha = 9.0\n[[axis]]\nname = \"eta2\"\nstart = 0.5\nstop = 1.0\nsteps = 2\n",
    );
    assert_eq!(code(&bellsim(&["sweep", "--config", &range])), 2);
    assert_eq!(code(&bellsim(&["threshold", "--family", "ecs"])), 2);
}

#[test]
fn sweep_is_deterministic_and_complete() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "run.toml", SWEEP);
    let a = bellsim(&["sweep", "--config", &cfg, "--jobs", "1"]);
    let b = bellsim(&["sweep", "--config", &cfg, "--jobs", "3"]);
    assert_eq!(code(&a), 0);
    assert_eq!(code(&b), 0);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(!text.contains('\r'));
    assert!(text.ends_with('\n'));
    let header: Vec<&str> = text.lines().take_while(|l| l.starts_with('#')).collect();
    assert_eq!(header.len(), 2);
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 3 * 5);
    let ns: Vec<&str> = rows.iter().map(|r| r[1].as_str()).collect();
    assert_eq!(ns[..6], ["1", "1", "1", "1", "1", "2"]);
    for r in &rows {
        let b: f64 = r[8].parse().unwrap();
        assert!(b <= 2.8285);
    }
}

#[test]
fn sweep_writes_output_path() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("out.csv");
    let text = format!(
        "{SWEEP}\n[output]\npath = \"{}\"\n[options]\nwall_time = true\n",
        target.display()
    );
    let cfg = write_config(dir.path(), "run.toml", &text);
    let out = bellsim(&["sweep", "--config", &cfg]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let csv = std::fs::read_to_string(&target).unwrap();
    assert!(csv.lines().nth(1).unwrap().ends_with("wall_time_s"));
}

#[test]
fn polarization_thresholds() {
    for (n, expected) in [("1", 0.8284), ("2", 0.5858)] {
        let out = bellsim(&["threshold", "--family", "pol", "--n", n, "--eta1", "1"]);
        assert_eq!(code(&out), 0);
        let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(json["status"], "found");
        let eta = json["eta_star"].as_f64().unwrap();
        assert!((eta - expected).abs() < 1e-3, "n = {n}: {eta}");
        assert_eq!(json["tol"].as_f64().unwrap(), 1e-4);
    }
}

#[test]
fn missing_violation_is_a_status_not_an_error() {
    let out = bellsim(&[
        "threshold",
        "--family",
        "ets",
        "--V",
        "10",
        "--d",
        "0.5",
        "--tol",
        "1e-3",
    ]);
    assert_eq!(code(&out), 0);
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["status"], "no_violation");
    assert!(json["eta_star"].is_null());
}

#[test]
fn fig2a_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig2a.csv");
    let out = bellsim(&["figure", "fig2a", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let rows = data_rows(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(rows.len(), 4 * 101);
    let at = |n: &str, eta: &str| -> f64 {
        rows.iter().find(|r| r[1] == n && r[7] == eta).unwrap()[8]
            .parse()
            .unwrap()
    };
    assert!((at("1", "1.0000000000") - 2.8284).abs() < 1e-4);

    // n = 4 at its threshold, off the figure grid
    let cfg = write_config(
        dir.path(),
        "n4.toml",
        "[scenario]\nfamily = \"pol\"\nn = 4\n[[axis]]\nname = \"eta2\"\nstart = 0.356\nstop = 0.357\nsteps = 2\n",
    );
    let out = bellsim(&["sweep", "--config", &cfg]);
    let b: f64 = data_rows(&stdout(&out))[0][8].parse().unwrap();
    assert!((b - 2.0).abs() < 5e-3, "{b}");
}

#[test]
fn validate_reports_each_check() {
    let out = bellsim(&["validate"]);
    let text = stdout(&out);
    assert_eq!(code(&out), 0, "{text}");
    assert!(text.lines().all(|l| l.starts_with("PASS") || l.starts_with("WARN")));
    assert!(text.contains("PASS fockspace-vs-closed-form"));
    assert!(text.contains("PASS dyad-vs-fock-oracle"));
    assert!(text.contains("ets-closed-form-vs-quadrature"));
}

#[test]
fn validate_fails_on_corrupted_helper() {
    let out = bellsim(&["validate", "--inject-fault", "fockspace"]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("FAIL fockspace-vs-closed-form"));
}
