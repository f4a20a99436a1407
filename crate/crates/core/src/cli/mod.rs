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

//! Command-line front end.
//!
//! ```text
//! mbqed sweep      ΔV₁₂ⁱⁿᵗ and its series approximation on an (η, R) grid
//! mbqed fit        power-law fit per η, from a sweep file or a fresh sweep
//! mbqed crossover  log₁₀ of the R⁻¹ term over the London energy on an (ω, R) grid
//! mbqed selfenergy renormalised self-energy of both oscillators
//! mbqed a2         two-photon shift from the A² term
//! mbqed oracle     production paths against brute-force references
//! ```
//!
//! Settings come from `--config` (TOML, see [`config`]) with flags taking
//! precedence. Exit status is 0 on success, also when some grid points fail,
//! 2 for configuration errors and 3 when every point fails.

pub mod config;
pub mod table;

use crate::analysis::{crossover_ratio, power_law_fit, SweepPoint};
use crate::error::{Error, Result};
use crate::qdo::Atom;
use crate::radiative::{delta_e_a2, delta_u_self, delta_v_int};
use crate::series::delta_v_approx;
use crate::units::{angstrom_to_bohr, convert_energy, UnitSystem};
use clap::{Parser, Subcommand};
use config::{OutputFormat, RunConfig};
use rayon::prelude::*;
use std::io::Write;
use std::path::PathBuf;
use table::{Cell, Table};

#[derive(Debug, Parser)]
#[command(name = "mbqed", version, about = "Radiative interaction between two quantum Drude oscillators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// TOML run configuration
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output file (default: standard output)
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Worker threads (default: available parallelism)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Relative quadrature tolerance
    #[arg(long = "rel-tol", global = true)]
    pub rel_tol: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    Sweep,
    Fit {
        /// CSV written by `sweep`; without it a sweep is run first
        #[arg(long)]
        input: Option<PathBuf>,
    },
    Crossover,
    Selfenergy,
    A2,
    Oracle {
        /// Also write the reference values to the fixtures directory
        #[arg(long)]
        write_fixtures: bool,
        /// Nodes for the trapezoid reference
        #[arg(long, default_value_t = crate::oracle::TRAPEZOID_POINTS)]
        trapezoid_points: usize,
    },
}

/// A finished command: the table plus per-point problems.
#[derive(Debug, Clone, Default)]
pub struct Outcome {
    pub table: Table,
    pub warnings: Vec<String>,
    pub failed: usize,
    pub total: usize,
}

impl Outcome {
    pub fn all_failed(&self) -> bool {
        self.total > 0 && self.failed == self.total
    }
}

/// Merge the flags into the file configuration.
pub fn resolve_config(cli: &Cli) -> Result<RunConfig> {
    let mut config = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(f) = cli.format {
        config.output.format = f;
    }
    if let Some(p) = &cli.out {
        config.output.path = Some(p.clone());
    }
    if let Some(t) = cli.threads {
        config.threads = Some(t);
    }
    if let Some(r) = cli.rel_tol {
        config.quadrature.rel_tol = r;
    }
    config.validate()?;
    Ok(config)
}

fn pool(config: &RunConfig) -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = config.threads {
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| Error::Config(e.to_string()))
}

fn short(e: &Error) -> &'static str {
    match e {
        Error::InvalidRegime { .. } => "invalid_regime",
        Error::ToleranceNotMet { .. } => "tolerance_not_met",
        Error::Unsupported(_) => "unsupported",
        Error::InvalidParameter { .. } => "invalid_parameter",
        _ => "error",
    }
}

pub const SWEEP_COLUMNS: [&str; 8] =
    ["eta", "R_angstrom", "R_au", "delta_v_int_au", "quad_error_au", "delta_v_approx_au", "rel_diff", "status"];

pub fn cmd_sweep(config: &RunConfig) -> Result<Outcome> {
    let rs = config.grid.r_axis().values();
    let points: Vec<(f64, f64)> =
        config.grid.sorted_eta().into_iter().flat_map(|eta| rs.iter().map(move |&r| (eta, r))).collect();
    let eval = |&(eta, r): &(f64, f64)| -> (Vec<Cell>, Option<String>, bool) {
        let r_au = angstrom_to_bohr(r);
        let nan = f64::NAN;
        let dimer = match config.dimer_at(r, eta) {
            Ok(d) => d,
            Err(e) => {
                let row = vec![
                    eta.into(),
                    r.into(),
                    r_au.into(),
                    nan.into(),
                    nan.into(),
                    nan.into(),
                    nan.into(),
                    short(&e).into(),
                ];
                return (row, Some(format!("eta={eta:e} R={r:e} A: {e}")), true);
            }
        };
        let (exact, err, status, warning, failed) = match delta_v_int(&dimer, &config.quadrature) {
            Ok(v) => (v.value, v.abs_error_estimate, "ok", None, false),
            Err(Error::ToleranceNotMet { best }) => (
                best.value,
                best.abs_error_estimate,
                "tolerance_not_met",
                Some(format!("eta={eta:e} R={r:e} A: tolerance not met")),
                false,
            ),
            Err(e) => (nan, nan, short(&e), Some(format!("eta={eta:e} R={r:e} A: {e}")), true),
        };
        let approx = delta_v_approx(&dimer).unwrap_or(nan);
        let rel = (approx - exact).abs() / exact.abs();
        let row =
            vec![eta.into(), r.into(), r_au.into(), exact.into(), err.into(), approx.into(), rel.into(), status.into()];
        (row, warning, failed)
    };
    let results: Vec<_> = pool(config)?.install(|| points.par_iter().map(eval).collect());
    let mut out = Outcome { table: Table::new(&SWEEP_COLUMNS), total: results.len(), ..Outcome::default() };
    for (row, warning, failed) in results {
        out.table.push(row);
        out.warnings.extend(warning);
        out.failed += usize::from(failed);
    }
    Ok(out)
}

pub const FIT_COLUMNS: [&str; 5] = ["eta", "amplitude_au", "exponent", "residual_rms", "n_points"];

/// Fit each η group of a sweep table.
pub fn fit_table(sweep: &Table) -> Result<Outcome> {
    let col = |name| sweep.column(name).ok_or_else(|| Error::Config(format!("sweep table lacks column `{name}`")));
    let (ie, ir, iv, ierr) = (col("eta")?, col("R_au")?, col("delta_v_int_au")?, col("quad_error_au")?);
    let mut groups: Vec<(f64, Vec<SweepPoint>)> = Vec::new();
    for row in &sweep.rows {
        let get = |i: usize| row[i].as_f64().unwrap_or(f64::NAN);
        let eta = get(ie);
        let point = SweepPoint { r: get(ir), value: get(iv), error: get(ierr) };
        match groups.iter_mut().find(|(e, _)| *e == eta) {
            Some((_, pts)) => pts.push(point),
            None => groups.push((eta, vec![point])),
        }
    }
    groups.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut out = Outcome { table: Table::new(&FIT_COLUMNS), total: groups.len(), ..Outcome::default() };
    for (eta, points) in groups {
        match power_law_fit(&points) {
            Ok(fit) => out.table.push(vec![
                eta.into(),
                fit.amplitude.into(),
                fit.exponent.into(),
                fit.residual_rms.into(),
                points.len().into(),
            ]),
            Err(e) => {
                out.warnings.push(format!("eta={eta:e}: skipped, {e}"));
                out.failed += 1;
            }
        }
    }
    Ok(out)
}

fn read_sweep_csv(path: &std::path::Path) -> Result<Table> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    let mut table = Table::new(&SWEEP_COLUMNS);
    for record in table::parse_csv(&text) {
        let row = SWEEP_COLUMNS
            .iter()
            .map(|c| {
                let raw = record.get(*c).map(String::as_str).unwrap_or("NaN");
                raw.parse::<f64>().map(Cell::Float).unwrap_or_else(|_| Cell::Text(raw.to_string()))
            })
            .collect();
        table.push(row);
    }
    Ok(table)
}

pub fn cmd_fit(config: &RunConfig, input: Option<&std::path::Path>) -> Result<Outcome> {
    let sweep = match input {
        Some(path) => read_sweep_csv(path)?,
        None => cmd_sweep(config)?.table,
    };
    fit_table(&sweep)
}

pub const CROSSOVER_COLUMNS: [&str; 4] = ["omega_au", "R_angstrom", "log10_ratio", "status"];

pub fn cmd_crossover(config: &RunConfig) -> Result<Outcome> {
    let spec = config.crossover;
    let base = config.dimer_at(spec.r_angstrom.min, spec.eta)?;
    let rs = spec.r_angstrom.values();
    let cells: Vec<(f64, f64)> =
        spec.omega.values().into_iter().flat_map(|w| rs.iter().map(move |&r| (w, r))).collect();
    let results: Vec<_> = pool(config)?
        .install(|| cells.par_iter().map(|&(w, r)| (w, r, crossover_ratio(&base, w, angstrom_to_bohr(r)))).collect());
    let mut out = Outcome { table: Table::new(&CROSSOVER_COLUMNS), total: results.len(), ..Outcome::default() };
    for (w, r, res) in results {
        match res {
            Ok(v) => out.table.push(vec![w.into(), r.into(), v.into(), "ok".into()]),
            Err(e) => {
                out.warnings.push(format!("omega={w:e} R={r:e} A: {e}"));
                out.failed += 1;
                out.table.push(vec![w.into(), r.into(), f64::NAN.into(), short(&e).into()]);
            }
        }
    }
    Ok(out)
}

const ENERGY_COLUMNS: [&str; 7] =
    ["quantity", "separation_angstrom", "eta", "value_au", "value_joule", "value_ev", "abs_error_au"];

fn energy_row(name: &str, config: &RunConfig, v: &crate::radiative::RadiativeResult) -> Vec<Cell> {
    vec![
        name.into(),
        config.point.separation_angstrom.into(),
        config.point.eta.into(),
        v.value.into(),
        convert_energy(v.value, UnitSystem::Atomic, UnitSystem::Si).into(),
        convert_energy(v.value, UnitSystem::Atomic, UnitSystem::Natural).into(),
        v.abs_error_estimate.into(),
    ]
}

pub fn cmd_selfenergy(config: &RunConfig) -> Result<Outcome> {
    let d = config.dimer_at(config.point.separation_angstrom, config.point.eta)?;
    let mut table = Table::new(&ENERGY_COLUMNS);
    for (name, atom) in [("self_energy_1", Atom::First), ("self_energy_2", Atom::Second)] {
        table.push(energy_row(name, config, &delta_u_self(&d, atom)?));
    }
    Ok(Outcome { table, total: 2, ..Outcome::default() })
}

pub fn cmd_a2(config: &RunConfig) -> Result<Outcome> {
    let d = config.dimer_at(config.point.separation_angstrom, config.point.eta)?;
    let mut table = Table::new(&ENERGY_COLUMNS);
    table.push(energy_row("a2_shift", config, &delta_e_a2(&d)));
    table.push(energy_row("delta_v_int", config, &delta_v_int(&d, &config.quadrature)?));
    Ok(Outcome { table, total: 1, ..Outcome::default() })
}

pub const ORACLE_COLUMNS: [&str; 6] = ["quantity", "main_value", "oracle_value", "rel_diff", "tolerance", "pass"];

pub fn cmd_oracle(write_fixtures: bool, trapezoid_points: usize) -> Result<Outcome> {
    let reports = crate::oracle::cross_checks(trapezoid_points, 100)?;
    let mut out = Outcome { table: Table::new(&ORACLE_COLUMNS), total: reports.len(), ..Outcome::default() };
    for r in reports {
        if !r.pass {
            out.warnings.push(r.to_string());
        }
        out.table.push(vec![
            r.quantity.into(),
            r.main_value.into(),
            r.oracle_value.into(),
            r.rel_diff.into(),
            r.tolerance.into(),
            (if r.pass { "true" } else { "false" }).into(),
        ]);
    }
    if write_fixtures {
        let dir = crate::oracle::fixtures_dir();
        let path = crate::oracle::write_fixtures(&dir, &crate::oracle::generate_fixtures()?)?;
        eprintln!("fixtures written to {}", path.display());
    }
    Ok(out)
}

pub fn run(cli: &Cli) -> Result<(Outcome, RunConfig)> {
    let config = resolve_config(cli)?;
    let outcome = match &cli.command {
        Command::Sweep => cmd_sweep(&config)?,
        Command::Fit { input } => cmd_fit(&config, input.as_deref())?,
        Command::Crossover => cmd_crossover(&config)?,
        Command::Selfenergy => cmd_selfenergy(&config)?,
        Command::A2 => cmd_a2(&config)?,
        Command::Oracle { write_fixtures, trapezoid_points } => cmd_oracle(*write_fixtures, *trapezoid_points)?,
    };
    Ok((outcome, config))
}

fn emit(outcome: &Outcome, config: &RunConfig) -> Result<()> {
    let text = outcome.table.render(config.output.format)?;
    match &config.output.path {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Parse `args`, run, write output and return the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = run(&cli).and_then(|(outcome, config)| {
        emit(&outcome, &config)?;
        Ok(outcome)
    });
    match result {
        Ok(outcome) => {
            for w in &outcome.warnings {
                eprintln!("warning: {w}");
            }
            if outcome.all_failed() {
                eprintln!("error: every point failed");
                3
            } else {
                0
            }
        }
        Err(e @ Error::Config(_)) => {
            eprintln!("error: {e}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> RunConfig {
        RunConfig::from_toml("[grid]\ncount = 4\neta = [2e-2, 1e-3]\nr_min_angstrom = 10.0\nr_max_angstrom = 40.0")
            .unwrap()
    }

    #[test]
    fn sweep_shape_and_order() {
        let out = cmd_sweep(&small()).unwrap();
        assert_eq!(out.table.rows.len(), 8);
        assert_eq!(out.failed, 0);
        let eta: Vec<f64> = out.table.rows.iter().map(|r| r[0].as_f64().unwrap()).collect();
        assert_eq!(eta, vec![1e-3, 1e-3, 1e-3, 1e-3, 2e-2, 2e-2, 2e-2, 2e-2]);
        let r: Vec<f64> = out.table.rows[..4].iter().map(|r| r[1].as_f64().unwrap()).collect();
        assert!(r.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn sweep_flags_bad_points() {
        let cfg = RunConfig::from_toml("[grid]\ncount = 3\neta = [1e-2]\nr_min_angstrom = 0.5\nr_max_angstrom = 20.0")
            .unwrap();
        let out = cmd_sweep(&cfg).unwrap();
        assert_eq!(out.failed, 1);
        assert!(!out.all_failed());
        assert_eq!(out.table.rows[0][7], Cell::Text("invalid_regime".into()));
    }

    #[test]
    fn fit_groups() {
        let out = cmd_fit(&small(), None).unwrap();
        assert_eq!(out.table.rows.len(), 2);
        for row in &out.table.rows {
            assert!(row[2].as_f64().unwrap() < 0.0);
        }
    }

    #[test]
    fn single_point_commands() {
        let cfg = small();
        assert_eq!(cmd_selfenergy(&cfg).unwrap().table.rows.len(), 2);
        let a2 = cmd_a2(&cfg).unwrap();
        assert!(a2.table.rows[0][3].as_f64().unwrap() < 0.0);
    }

    #[test]
    fn flag_overrides() {
        let cli =
            Cli::try_parse_from(["mbqed", "sweep", "--rel-tol", "1e-6", "--threads", "2", "--format", "json"]).unwrap();
        let cfg = resolve_config(&cli).unwrap();
        assert_eq!(cfg.quadrature.rel_tol, 1e-6);
        assert_eq!(cfg.threads, Some(2));
        assert_eq!(cfg.output.format, OutputFormat::Json);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(main_with_args(["mbqed", "sweep", "--threads", "0"]), 2);
        assert_eq!(main_with_args(["mbqed", "nonsense"]), 2);
        assert_eq!(main_with_args(["mbqed", "sweep", "--config", "/nonexistent/x.toml"]), 2);
    }
}
