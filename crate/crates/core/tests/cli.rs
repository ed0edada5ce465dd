use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn anyonsim(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anyonsim"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn validate_builtin_ising() {
    let tmp = TempDir::new().unwrap();
    let o = anyonsim(&["--model", "ising", "validate"], tmp.path());
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o)
        .lines()
        .find(|l| l.starts_with("max residual"))
        .unwrap()
        .to_string();
    let residual: f64 = line.trim_start_matches("max residual ").parse().unwrap();
    assert!(residual < 1e-12);
}

#[test]
fn validate_inconsistent_file_exits_one() {
    let tmp = TempDir::new().unwrap();
    let bad = r#"{"charges": ["I", "s"], "fusion": [["s", "s", "I"]], "R": [["s", "s", "I", 0.0, 1.0]]}"#;
    fs::write(tmp.path().join("bad.json"), bad).unwrap();
    let o = anyonsim(&["--model", "bad.json", "validate"], tmp.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAILED"));
}

#[test]
fn unitarity_violation_exits_one() {
    let tmp = TempDir::new().unwrap();
    fs::write(
        tmp.path().join("c.json"),
        r#"{"model": "ising", "probe": "sigma", "t1": [1, 0], "r1": [1, 0]}"#,
    )
    .unwrap();
    let o = anyonsim(&["--config", "c.json", "interfere"], tmp.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("splitter 1"));
}

#[test]
fn malformed_config_is_usage_error_with_position() {
    let tmp = TempDir::new().unwrap();
    fs::write(
        tmp.path().join("c.json"),
        "{\n  \"model\": \"ising\",\n  \"probes\": 3\n}",
    )
    .unwrap();
    let o = anyonsim(&["--config", "c.json", "interfere"], tmp.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn interfere_is_reproducible_and_flags_override() {
    let tmp = TempDir::new().unwrap();
    fs::write(
        tmp.path().join("c.json"),
        r#"{"model": "ising", "probe": "sigma", "N": 5, "seed": 1, "theta_I": 0.8}"#,
    )
    .unwrap();
    let run = |out: &str| {
        let o = anyonsim(
            &[
                "--config",
                "c.json",
                "--trials",
                "20",
                "--probes",
                "30",
                "--out",
                out,
                "interfere",
            ],
            tmp.path(),
        );
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    };
    run("a");
    run("b");
    for f in ["trajectories.jsonl", "summary.csv", "asymptotic.json"] {
        let a = fs::read(tmp.path().join("a").join(f)).unwrap();
        let b = fs::read(tmp.path().join("b").join(f)).unwrap();
        assert_eq!(a, b, "{f} differs");
    }
    let lines = fs::read_to_string(tmp.path().join("a/trajectories.jsonl")).unwrap();
    assert_eq!(lines.lines().count(), 20 * 30);
}

#[test]
fn single_probe_fraction_tracks_population() {
    let tmp = TempDir::new().unwrap();
    let o = anyonsim(
        &[
            "--trials",
            "10000",
            "--probes",
            "1",
            "--rho00",
            "0.3",
            "--out",
            "o",
            "interfere",
        ],
        tmp.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let csv = fs::read_to_string(tmp.path().join("o/summary.csv")).unwrap();
    let mut rows = csv.lines();
    assert_eq!(rows.next(), Some("trial,seed,n,N,fraction,collapsed_class"));
    let transmitted: usize = rows
        .map(|r| r.split(',').nth(2).unwrap().parse::<usize>().unwrap())
        .sum();
    let fraction = transmitted as f64 / 10_000.0;
    assert!((fraction - 0.3).abs() < 3.0 * (0.3f64 * 0.7 / 10_000.0).sqrt());
}

#[test]
fn degenerate_tuning_exits_three_without_output() {
    let tmp = TempDir::new().unwrap();
    fs::write(tmp.path().join("c.json"), r#"{"t1": [1, 0], "r1": [0, 0], "N": 3}"#).unwrap();
    let o = anyonsim(&["--config", "c.json", "--out", "o", "interfere"], tmp.path());
    assert_eq!(o.status.code(), Some(3));
    assert!(!tmp.path().join("o/summary.csv").exists());
}

#[test]
fn double_twist_routes_to_twisted_path() {
    let tmp = TempDir::new().unwrap();
    let o = anyonsim(
        &["--twists", "0,2", "--trials", "100", "--out", "o", "interfere"],
        tmp.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(tmp.path().join("o/twisted_histogram.csv").exists());
    let magic = fs::read_to_string(tmp.path().join("o/magic.json")).unwrap();
    assert!(magic.contains("fidelity"));
}

#[test]
fn protocol_table_lists_both_gates() {
    let tmp = TempDir::new().unwrap();
    let o = anyonsim(&["--out", "o", "protocol"], tmp.path());
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("-0.250000"));
    assert!(text.contains("-0.750000"));
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(tmp.path().join("o/protocol.json")).unwrap()).unwrap();
    assert_eq!(json["outcomes"].as_array().unwrap().len(), 4);
}

#[test]
fn sweep_and_dump_write_files() {
    let tmp = TempDir::new().unwrap();
    let o = anyonsim(
        &[
            "--probes", "4", "--out", "o", "sweep", "--param", "delta", "--from", "-1", "--to", "1", "--steps", "5",
        ],
        tmp.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = fs::read_to_string(tmp.path().join("o/sweep.csv")).unwrap();
    assert_eq!(csv.lines().count(), 6);
    assert!(csv.starts_with("delta,pr_transmit,p_I,p_sigma,p_psi,mean_fraction"));

    let o = anyonsim(&["--model", "fibonacci", "--out", "o", "dump"], tmp.path());
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(tmp.path().join("o/dump.json")).unwrap()).unwrap();
    assert_eq!(json["charges"], serde_json::json!(["I", "tau"]));
    assert!(json["O_t"]["tau"].is_array());
}

#[test]
fn bad_flag_is_usage_error() {
    let tmp = TempDir::new().unwrap();
    assert_eq!(anyonsim(&["--twists", "2", "dump"], tmp.path()).status.code(), Some(2));
    assert_eq!(
        anyonsim(&["--trials", "0", "interfere"], tmp.path()).status.code(),
        Some(2)
    );
}
