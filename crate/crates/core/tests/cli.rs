// Copyright 2026 The mbqed authors
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

use std::path::Path;
use std::process::{Command, Output};

fn mbqed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mbqed")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_config(dir: &Path, text: &str) -> String {
    let path = dir.join("run.toml");
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const SMALL: &str = "[grid]\nr_min_angstrom = 10.0\nr_max_angstrom = 50.0\ncount = 5\neta = [1e-2, 2e-2]\n";

#[test]
fn sweep_csv_shape() {
    let out = mbqed(&["sweep"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "eta,R_angstrom,R_au,delta_v_int_au,quad_error_au,delta_v_approx_au,rel_diff,status"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 150);
    assert!(rows.iter().all(|r| r.len() == 8 && r[7] == "ok"));
    assert_eq!(rows[0][1].parse::<f64>().unwrap(), 5.0);
    assert_eq!(rows[29][1].parse::<f64>().unwrap(), 100.0);
}

#[test]
fn sweep_is_byte_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), SMALL);
    let mut files = Vec::new();
    for threads in ["1", "3", "8"] {
        let path = dir.path().join(format!("sweep_{threads}.json"));
        let out = mbqed(&[
            "sweep",
            "--config",
            &cfg,
            "--threads",
            threads,
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
        files.push(std::fs::read(path).unwrap());
    }
    assert_eq!(files[0], files[1]);
    assert_eq!(files[1], files[2]);
    let rows: serde_json::Value = serde_json::from_slice(&files[0]).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 10);
}

#[test]
fn flags_override_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), &format!("[output]\nformat = \"json\"\n\n{SMALL}"));
    let json = stdout(&mbqed(&["sweep", "--config", &cfg]));
    assert!(json.trim_start().starts_with('['));
    let csv = stdout(&mbqed(&["sweep", "--config", &cfg, "--format", "csv"]));
    assert!(csv.starts_with("eta,"));
    assert_eq!(csv.lines().count(), 11);
}

#[test]
fn fit_from_file_matches_fresh_fit() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), SMALL);
    let sweep = dir.path().join("sweep.csv");
    assert_eq!(mbqed(&["sweep", "--config", &cfg, "--out", sweep.to_str().unwrap()]).status.code(), Some(0));
    let from_file = stdout(&mbqed(&["fit", "--input", sweep.to_str().unwrap()]));
    let fresh = stdout(&mbqed(&["fit", "--config", &cfg]));
    assert_eq!(from_file, fresh);
    let mut lines = from_file.lines();
    assert_eq!(lines.next().unwrap(), "eta,amplitude_au,exponent,residual_rms,n_points");
    for line in lines {
        let exponent: f64 = line.split(',').nth(2).unwrap().parse().unwrap();
        assert!((-2.0..-0.9).contains(&exponent), "{line}");
    }
}

#[test]
fn crossover_grid() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "[crossover]\neta = 2e-2\nomega = { min = 0.02, max = 0.2, count = 4, spacing = \"linear\" }\n\
         r_angstrom = { min = 5.0, max = 500.0, count = 6, spacing = \"log\" }\n",
    );
    let out = mbqed(&["crossover", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "omega_au,R_angstrom,log10_ratio,status");
    assert_eq!(text.lines().count(), 25);
}

#[test]
fn single_point_commands() {
    let self_energy = stdout(&mbqed(&["selfenergy"]));
    assert_eq!(self_energy.lines().count(), 3);
    assert!(self_energy.contains("self_energy_1") && self_energy.contains("self_energy_2"));
    let a2 = stdout(&mbqed(&["a2", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&a2).unwrap();
    assert!(v[0]["value_au"].as_f64().unwrap() < 0.0);
    assert!(v[1]["value_au"].as_f64().unwrap() > 0.0);
}

#[test]
fn oracle_writes_fixtures_where_asked() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_mbqed"))
        .args(["oracle", "--write-fixtures", "--trapezoid-points", "200000"])
        .env("MBQED_FIXTURES", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read_to_string(dir.path().join("oracle_v1.json")).unwrap();
    let fixtures: serde_json::Value = serde_json::from_str(&written).unwrap();
    assert_eq!(fixtures.as_array().unwrap().len(), 33);
    assert!(stdout(&out).starts_with("quantity,main_value,oracle_value,rel_diff,tolerance,pass"));
}

#[test]
fn exit_codes() {
    assert_eq!(mbqed(&["--help"]).status.code(), Some(0));
    assert_eq!(mbqed(&["unknown"]).status.code(), Some(2));
    assert_eq!(mbqed(&["sweep", "--rel-tol", "-1"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = write_config(dir.path(), "[grid]\ncount = 1\n");
    assert_eq!(mbqed(&["sweep", "--config", &bad]).status.code(), Some(2));
    let typo = write_config(dir.path(), "[grid]\ncuont = 4\n");
    assert_eq!(mbqed(&["sweep", "--config", &typo]).status.code(), Some(2));
    let hopeless =
        write_config(dir.path(), "[grid]\nr_min_angstrom = 0.5\nr_max_angstrom = 1.0\ncount = 3\neta = [1e-2]\n");
    let out = mbqed(&["sweep", "--config", &hopeless]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("every point failed"));
    let partial =
        write_config(dir.path(), "[grid]\nr_min_angstrom = 0.5\nr_max_angstrom = 20.0\ncount = 3\neta = [1e-2]\n");
    assert_eq!(mbqed(&["sweep", "--config", &partial]).status.code(), Some(0));
}
