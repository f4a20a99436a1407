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

//! Acceptance criteria. Each one prints a single PASS or FAIL line; the
//! process exits non-zero if any criterion fails.

use mbqed::analysis::{dipole_from_polarizability, force_estimate};
use mbqed::cli::config::RunConfig;
use mbqed::cli::{cmd_crossover, cmd_sweep, fit_table, main_with_args};
use mbqed::mbd::NormalModeData;
use mbqed::oracle::{cross_checks, sample_dimers, TRAPEZOID_POINTS};
use mbqed::prelude::*;
use mbqed::series::c1_integral;
use mbqed::units::ANGSTROM_M;
use nalgebra::Matrix6;
use std::time::Instant;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| if i + 1 == n { hi } else { lo * (hi / lo).powf(i as f64 / (n - 1) as f64) }).collect()
}

fn row_sum_norm(m: &Matrix6<f64>) -> f64 {
    m.row_iter().map(|r| r.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
}

fn argon(r_angstrom: f64, eta: f64) -> DimerSystem {
    DimerSystem::argon(angstrom_to_bohr(r_angstrom), eta).unwrap()
}

/// Default sweep (Argon, 5–100 Å, 30 log points, five η) on one thread.
fn default_sweep() -> (mbqed::cli::Outcome, f64) {
    let config = RunConfig { threads: Some(1), ..RunConfig::default() };
    let start = Instant::now();
    let out = cmd_sweep(&config).expect("sweep runs");
    (out, start.elapsed().as_secs_f64())
}

fn fit_exponents(sweep: &mbqed::cli::Outcome, seconds: f64) -> Verdict {
    let fits = match fit_table(&sweep.table) {
        Ok(f) => f,
        Err(e) => return verdict(false, format!("fit failed: {e}")),
    };
    let mut ok = fits.failed == 0 && fits.table.rows.len() == 5 && seconds < 60.0;
    let mut parts = Vec::new();
    for row in &fits.table.rows {
        let (eta, p) = (row[0].as_f64().unwrap(), row[2].as_f64().unwrap());
        ok &= (-1.15..=-0.95).contains(&p);
        parts.push(format!("η={eta:e}: {p:.3}"));
    }
    verdict(ok, format!("exponents [{}] in [-1.15, -0.95], sweep {seconds:.2} s", parts.join(", ")))
}

fn series_accuracy() -> Verdict {
    let spec = QuadratureSpec::default();
    let mut worst = (0.0f64, 0.0);
    for r in log_grid(10.0, 100.0, 46) {
        let d = argon(r, 2e-2);
        let exact = delta_v_int(&d, &spec).unwrap().value;
        let rel = (delta_v_approx(&d).unwrap() - exact).abs() / exact.abs();
        if rel > worst.0 {
            worst = (rel, r);
        }
    }
    verdict(worst.0 <= 0.05, format!("worst relative gap {:.3e} at R = {:.1} Å (limit 5e-2)", worst.0, worst.1))
}

fn repulsion(sweep: &mbqed::cli::Outcome) -> Verdict {
    let col = sweep.table.column("delta_v_int_au").unwrap();
    let values: Vec<f64> = sweep.table.rows.iter().map(|r| r[col].as_f64().unwrap_or(f64::NAN)).collect();
    let positive = values.iter().filter(|v| **v > 0.0).count();
    let c1_ok = log_grid(1e-4, 1e2, 121).into_iter().all(|a| c1_integral(a) > 0.0);
    verdict(
        positive == values.len() && c1_ok,
        format!("{positive}/{} sweep points positive, c̄₁ > 0 on 121 k̄_Q values: {c1_ok}", values.len()),
    )
}

fn short_range_dominance() -> Verdict {
    let hit = log_grid(5.0, 15.0, 101).into_iter().find(|&r| {
        let c = coefficients(&argon(r, 1e-3)).unwrap();
        let [t1, _, t9] = c.terms(angstrom_to_bohr(r));
        t9.abs() > t1.abs()
    });
    let crossing = bohr_to_angstrom(coefficients(&argon(10.0, 1e-3)).unwrap().crossover_radius());
    match hit {
        Some(r) => verdict(true, format!("R⁻⁹ term larger at R = {r:.2} Å, equal magnitudes at {crossing:.2} Å")),
        None => verdict(false, format!("R⁻¹ term dominates on all of [5, 15] Å, crossing at {crossing:.2} Å")),
    }
}

fn force_window() -> Verdict {
    let ar = QdoParams::argon();
    let mu = dipole_from_polarizability(ar.polarizability(), ar.energy());
    let forces: Vec<f64> = [10.0, 100.0]
        .iter()
        .map(|nm| force_estimate(mu, mu, ar.energy(), ar.energy(), angstrom_to_bohr(nm * 1e-9 / ANGSTROM_M)))
        .collect();
    let ok = forces.iter().all(|f| (1e-23..=1e-19).contains(f));
    verdict(ok, format!("F(10 nm) = {:.3e} N, F(100 nm) = {:.3e} N", forces[0], forces[1]))
}

fn crossover_reach() -> Verdict {
    let config = RunConfig::default();
    let out = cmd_crossover(&config).expect("crossover runs");
    let best = out
        .table
        .rows
        .iter()
        .filter_map(|r| Some((r[2].as_f64()?, r[0].as_f64()?, r[1].as_f64()?)))
        .filter(|(v, _, _)| v.is_finite())
        .fold((f64::NEG_INFINITY, 0.0, 0.0), |acc, x| if x.0 > acc.0 { x } else { acc });
    verdict(
        best.0 >= -1.0,
        format!(
            "max log₁₀ ratio {:.3} at ω = {:.3} Ha, R = {:.0} Å (η = {:e}, {} cells)",
            best.0,
            best.1,
            best.2,
            config.crossover.eta,
            out.table.rows.len()
        ),
    )
}

fn oracle_equivalence() -> Verdict {
    let reports = cross_checks(TRAPEZOID_POINTS, 100).expect("oracle runs");
    let relevant: Vec<_> = reports
        .iter()
        .filter(|r| ["delta_v_int", "c1 ", "c7 ", "c9 ", "eigenfrequencies"].iter().any(|p| r.quantity.starts_with(p)))
        .collect();
    let failed: Vec<String> = relevant.iter().filter(|r| !r.pass).map(|r| r.quantity.clone()).collect();
    let worst_quad =
        relevant.iter().filter(|r| r.quantity.starts_with("delta_v_int")).map(|r| r.rel_diff).fold(0.0, f64::max);
    verdict(
        failed.is_empty() && relevant.len() == 21,
        format!("{} checks, worst quadrature gap {worst_quad:.2e}, failing: {failed:?}", relevant.len()),
    )
}

fn structural_invariants() -> Verdict {
    let (mut symplectic, mut ortho) = (0.0f64, 0.0f64);
    for d in sample_dimers(100).iter().chain([argon(5.0, 1e-2), argon(100.0, 1e-3)].iter()) {
        let data = NormalModeData::new(d).unwrap();
        let (x, y) = (&data.bogo_x, &data.bogo_y);
        symplectic = symplectic.max(row_sum_norm(&(x * x.transpose() - y * y.transpose() - Matrix6::identity())));
        let n = data.mode_matrix();
        ortho = ortho.max(row_sum_norm(&(n * n.transpose() - Matrix6::identity())));
    }
    let spec = QuadratureSpec::default();
    let silent = QdoParams::new(QdoParams::argon().mass, 0.07, 1e-170).unwrap();
    let off = DimerSystem::homoatomic(silent, angstrom_to_bohr(10.0), 1e-2).unwrap();
    let zero = delta_v_int(&off, &spec).map(|v| v.value.abs()).unwrap_or(f64::INFINITY);
    let d = argon(10.0, 1e-2);
    let ratio = delta_e_a2(&d).value / delta_e_a2(&d.with_separation(2.0 * d.separation).unwrap()).value;
    let ok = symplectic <= 1e-12 && ortho <= 1e-12 && zero <= spec.abs_tol && ((ratio - 8.0) / 8.0).abs() <= 1e-10;
    verdict(
        ok,
        format!(
            "symplectic {symplectic:.1e}, orthonormality {ortho:.1e}, |ΔV(γ=0)| {zero:.1e}, A² doubling ratio {ratio}"
        ),
    )
}

fn determinism() -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let paths = [dir.path().join("a.csv"), dir.path().join("b.csv")];
    for (p, threads) in paths.iter().zip(["1", "4"]) {
        let code = main_with_args(["mbqed", "sweep", "--threads", threads, "--out", p.to_str().unwrap()]);
        if code != 0 {
            return verdict(false, format!("sweep exited with {code}"));
        }
    }
    let (a, b) = (std::fs::read(&paths[0]).unwrap(), std::fs::read(&paths[1]).unwrap());
    verdict(a == b && !a.is_empty(), format!("{} bytes each, identical: {}", a.len(), a == b))
}

fn main() {
    let (sweep, seconds) = default_sweep();
    let results = [
        ("1 power-law exponents", fit_exponents(&sweep, seconds)),
        ("2 series vs quadrature", series_accuracy()),
        ("3 repulsion", repulsion(&sweep)),
        ("4 short-range R⁻⁹ dominance", short_range_dominance()),
        ("5 force window", force_window()),
        ("6 crossover reachability", crossover_reach()),
        ("7 oracle equivalence", oracle_equivalence()),
        ("8 structural invariants", structural_invariants()),
        ("9 determinism", determinism()),
    ];
    let mut failures = 0;
    for (name, v) in &results {
        println!("{} criterion {name}: {}", if v.pass { "PASS" } else { "FAIL" }, v.detail);
        failures += usize::from(!v.pass);
    }
    println!("acceptance: {} passed, {failures} failed", results.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
