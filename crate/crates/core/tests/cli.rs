use std::path::Path;
use std::process::{Command, Output};

fn mixfourier(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mixfourier")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn constants_exit_codes() {
    let o = mixfourier(&["constants", "--r", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\n2,2,1,1.000000000000000,1.000000000000000\n"));

    let o = mixfourier(&["constants", "--r", "4/3", "--dim", "2", "--format", "json"]);
    let row: serde_json::Value = serde_json::from_str(stdout(&o).lines().nth(1).unwrap()).unwrap();
    assert!((row["constant_power"].as_f64().unwrap() - 0.87739).abs() < 1e-5);

    let o = mixfourier(&["constants", "--r", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_restriction_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.jsonl");
    let o = mixfourier(&["verify", "restriction", "--p", "4/3", "--trials", "100", "--seed", "7", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 102);
    let config: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(config["config"]["seed"], 7);
    assert_eq!(config["config"]["exponents"]["p"], "4/3");
    let report: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(report["inequality"], "restriction");
}

#[test]
fn verify_bilinear_names_relation() {
    let o = mixfourier(&["verify", "bilinear", "--p", "2", "--s", "2", "--q", "2", "--t", "2", "--r", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("r-relation"));
}

#[test]
fn verify_variant_plancherel_csv() {
    let o = mixfourier(&["verify", "variant", "--p", "2", "--s", "2", "--trials", "10", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# config "));
    assert_eq!(lines.next().unwrap(), "inequality_id,exponents,ratio,pass");
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 10);
    for row in rows {
        let ratio: f64 = row.split(',').nth(2).unwrap().parse().unwrap();
        assert!(ratio <= 1.0 + 1e-6);
    }
}

#[test]
fn sweep_blowup_writes_csv_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("blowup.csv");
    let o = mixfourier(&["sweep", "blowup", "--p", "2", "--s", "4/3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = std::fs::read_to_string(&out).unwrap();
    assert!(csv.contains("parameter,observed,log_parameter,log_observed"));
    let footer = csv.lines().last().unwrap().trim_start_matches("# ");
    let fit: serde_json::Value = serde_json::from_str(footer).unwrap();
    assert!((fit["fitted_slope"].as_f64().unwrap() + 0.25).abs() <= 0.05);
    let sidecar = Path::new(&format!("{}.json", out.display())).to_path_buf();
    let doc: serde_json::Value = serde_json::from_slice(&std::fs::read(sidecar).unwrap()).unwrap();
    assert_eq!(doc["reports"][0]["grids"].as_array().unwrap().len(), 6);
}

#[test]
fn sweep_gates_and_necessity() {
    assert_eq!(mixfourier(&["sweep", "blowup", "--p", "2", "--s", "2"]).status.code(), Some(2));
    let o = mixfourier(&["sweep", "necessity", "--p", "4", "--s", "2", "--q", "4", "--t", "2", "--r", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for r in doc["reports"].as_array().unwrap() {
        assert!(r["fitted_slope"].as_f64().unwrap().abs() <= 0.02);
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(mixfourier(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(mixfourier(&["verify", "variant", "--p", "x/y"]).status.code(), Some(2));
}
