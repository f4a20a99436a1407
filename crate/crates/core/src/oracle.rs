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

//! Brute-force reference computations.
//!
//! Nothing in here calls into the production numerics: the integrand, the
//! angular kernels, the eigenvalues and the integration rules are written out
//! again in the plainest form available. Uniform grids with compensated
//! summation stand in for adaptive quadrature.

use crate::error::Result;
use crate::qdo::DimerSystem;
use crate::units::CODATA_2018;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::path::{Path, PathBuf};

/// Environment variable naming the directory that holds the fixture file.
pub const FIXTURES_ENV: &str = "MBQED_FIXTURES";
pub const FIXTURES_FILE: &str = "oracle_v1.json";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub quantity: String,
    pub main_value: f64,
    pub oracle_value: f64,
    pub rel_diff: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl OracleReport {
    pub fn new(quantity: impl Into<String>, main_value: f64, oracle_value: f64, tolerance: f64) -> Self {
        let rel_diff = (main_value - oracle_value).abs() / oracle_value.abs().max(1e-300);
        Self { quantity: quantity.into(), main_value, oracle_value, rel_diff, tolerance, pass: rel_diff <= tolerance }
    }
}

impl std::fmt::Display for OracleReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} {:<40} main={:e} oracle={:e} rel={:.2e} (tol {:.0e})",
            if self.pass { "ok  " } else { "FAIL" },
            self.quantity,
            self.main_value,
            self.oracle_value,
            self.rel_diff,
            self.tolerance
        )
    }
}

/// Neumaier-compensated running sum.
#[derive(Default)]
struct Compensated {
    sum: f64,
    carry: f64,
}

impl Compensated {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.carry
    }
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// f⊥ and f∥ from sin/cos, or from 16 Taylor terms for x < 0.5.
fn kernels(x: f64) -> (f64, f64) {
    if x < 0.5 {
        let (mut perp, mut par) = (0.0, 0.0);
        for m in 0..16u32 {
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            let base = sign * x.powi(2 * m as i32) / factorial(2 * m + 3);
            let mf = f64::from(m);
            perp += 4.0 * (mf + 1.0).powi(2) * base;
            par += 4.0 * (mf + 1.0) * base;
        }
        (perp, par)
    } else {
        let x3 = x.powi(3);
        ((x * x.cos() + (x * x - 1.0) * x.sin()) / x3, 2.0 * (x.sin() - x * x.cos()) / x3)
    }
}

/// Both roots of t² − (p + s)t + (ps − g²) for the symmetric block
/// [[p, g], [g, s]], larger first.
fn block_roots(p: f64, s: f64, g: f64) -> (f64, f64) {
    let mean = 0.5 * (p + s);
    let half_gap = 0.5 * (p - s);
    let disc = (half_gap * half_gap + g * g).sqrt();
    let hi = mean + disc;
    (hi, (p * s - g * g) / hi)
}

/// Mode frequencies from the three 2×2 potential blocks, solved by the
/// quadratic formula. Order x+, x−, y+, y−, z+, z−.
pub fn direct_diagonalization(d: &DimerSystem) -> [f64; 6] {
    let g = d.a.charge * d.b.charge / ((d.a.mass * d.b.mass).sqrt() * d.separation.powi(3));
    let (p, s) = (d.a.freq.powi(2), d.b.freq.powi(2));
    let mut out = [0.0; 6];
    for (axis, factor) in [1.0, 1.0, -2.0].into_iter().enumerate() {
        let (hi, lo) = block_roots(p, s, factor * g);
        out[2 * axis] = hi.sqrt();
        out[2 * axis + 1] = lo.sqrt();
    }
    out
}

/// The radiative integrand rebuilt from the direct eigenvalues: each axis
/// contributes Fᵢ γᵢ u /(√(ω₁ω₂)(ω̃₊² − ω̃₋²)) · [ω̃₊/(u + ω̃₊) − ω̃₋/(u + ω̃₋)].
pub fn reference_integrand(d: &DimerSystem, kbar: f64) -> f64 {
    let freqs = direct_diagonalization(d);
    let g = d.a.charge * d.b.charge / ((d.a.mass * d.b.mass).sqrt() * d.separation.powi(3));
    let k_m = d.eta / d.a.qdo_length().max(d.b.qdo_length());
    let u = kbar * k_m / CODATA_2018.alpha_fsc;
    let (perp, par) = kernels(kbar * k_m * d.separation);
    let norm = (d.a.freq * d.b.freq).sqrt();
    let mut sum = 0.0;
    for (axis, (factor, f)) in [(1.0, perp), (1.0, perp), (-2.0, par)].into_iter().enumerate() {
        let (wp, wm) = (freqs[2 * axis], freqs[2 * axis + 1]);
        if g == 0.0 {
            continue;
        }
        // (wp/(u+wp) − wm/(u+wm))/(wp² − wm²) with the difference taken exactly
        let split = u / ((u + wp) * (u + wm) * (wp + wm));
        sum += f * factor * g / norm * u * split;
    }
    sum
}

/// ΔV written through SI constants: α E_M Q₁Q₂ √(E₁E₂)/(π c²) with Q = Z/√m,
/// converted back to hartree.
pub fn energy_scale_si(d: &DimerSystem) -> f64 {
    let k = CODATA_2018;
    let hartree = k.hartree_j;
    let k_m = d.eta / (d.a.qdo_length().max(d.b.qdo_length()) * k.bohr_m);
    let e_m = k.hbar_si * k.c_si * k_m;
    let q1 = d.a.charge / (d.a.mass * k.electron_mass_kg).sqrt();
    let q2 = d.b.charge / (d.b.mass * k.electron_mass_kg).sqrt();
    let e12 = (d.a.freq * hartree * d.b.freq * hartree).sqrt();
    k.alpha_fsc * e_m * q1 * q2 * e12 / (PI * k.c_si * k.c_si) / hartree
}

/// Trapezoid rule for ΔV₁₂ⁱⁿᵗ on `n_points` uniform nodes over k̄ ∈ [0, 1].
/// The integrand vanishes at k̄ = 0.
pub fn trapezoid_integral(d: &DimerSystem, n_points: usize) -> f64 {
    let n_points = n_points.max(1000);
    let h = 1.0 / (n_points - 1) as f64;
    let mut acc = Compensated::default();
    for j in 1..n_points {
        let w = if j == n_points - 1 { 0.5 } else { 1.0 };
        acc.add(w * reference_integrand(d, j as f64 * h));
    }
    -energy_scale_si(d) * acc.total() * h
}

/// Composite Simpson on [0, 1] with `intervals` (even) subintervals.
fn simpson<F: Fn(f64) -> f64>(f: F, intervals: usize) -> f64 {
    let n = intervals + intervals % 2;
    let h = 1.0 / n as f64;
    let mut acc = Compensated::default();
    acc.add(f(0.0));
    acc.add(f(1.0));
    for j in 1..n {
        let w = if j % 2 == 1 { 4.0 } else { 2.0 };
        acc.add(w * f(j as f64 * h));
    }
    acc.total() * h / 3.0
}

/// c̄₁, c̄₇, c̄₉ by integrating the per-k̄ coefficient functions, with
/// c̄ₙ = −∫₀¹ c̄ₙ⁽ᴵ⁾(k̄) dk̄.
pub fn coefficient_quadrature(d: &DimerSystem) -> (f64, f64, f64) {
    let a0 = d.a.charge.powi(2) / (d.a.mass * d.a.freq.powi(2));
    let k_m = d.eta / d.a.qdo_length().max(d.b.qdo_length());
    let a = d.a.freq * CODATA_2018.alpha_fsc / k_m;
    let p3 = |k: f64| k * k + 4.0 * k * a + 5.0 * a * a;
    let n = 200_000;
    let c1 = simpson(|k| a0 * k_m * k_m * k.powi(4) / (15.0 * (k + a).powi(2)), n);
    let c7 = -simpson(|k| a0.powi(3) * k.powi(4) * k_m * k_m * p3(k) / (60.0 * (k + a).powi(4)), n);
    let c9 = simpson(|k| a0.powi(3) * k * k * p3(k) / (4.0 * (k + a).powi(4)), n);
    (c1, c7, c9)
}

/// G(u) = u·arctan(1/u) − 1, summed as a series for u > 1.
fn g_term(u: f64) -> f64 {
    if u <= 4.0 {
        u * (1.0 / u).atan() - 1.0
    } else {
        let y2 = 1.0 / (u * u);
        let (mut sum, mut p) = (0.0, -y2);
        for n in 1..60 {
            sum += p / (2 * n + 1) as f64;
            p *= -y2;
            if p.abs() < 1e-20 {
                break;
            }
        }
        sum
    }
}

/// ∫₀^∞ Σᵢⱼ Fᵢⱼ(u, R)² du for two centres on the z axis, by Simpson after
/// u = R t/(1 − t).
pub fn a2_u_integral(r: f64, intervals: usize) -> f64 {
    let integrand = |t: f64| {
        if t >= 1.0 {
            return 0.0;
        }
        let u = t / (1.0 - t);
        let g = g_term(u);
        let fxx = 1.0 / (1.0 + u * u) + g;
        let fzz = -2.0 * g;
        (2.0 * fxx * fxx + fzz * fzz) / (1.0 - t).powi(2)
    };
    simpson(integrand, intervals) / r.powi(3)
}

/// A² two-photon shift from the u integral, ΔE₂ = −q₁²q₂²/(2π² m₁m₂ c³) ∫ΣF² du.
pub fn a2_shift(d: &DimerSystem, intervals: usize) -> f64 {
    let c = 1.0 / CODATA_2018.alpha_fsc;
    let q4 = (d.a.charge * d.b.charge).powi(2);
    -q4 / (2.0 * PI * PI * d.a.mass * d.b.mass * c.powi(3)) * a2_u_integral(d.separation, intervals)
}

/// One frozen reference value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub quantity: String,
    pub inputs: BTreeMap<String, f64>,
    pub value: f64,
    pub method: String,
    pub grid_size: usize,
}

impl Fixture {
    fn new(quantity: &str, inputs: &[(&str, f64)], value: f64, method: &str, grid_size: usize) -> Self {
        Self {
            quantity: quantity.into(),
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            value,
            method: method.into(),
            grid_size,
        }
    }
}

/// Distances (Å) and cutoffs used for the quadrature anchors.
pub const ANCHORS: [(f64, f64); 5] = [(20.0, 1e-2), (5.0, 2e-2), (10.0, 1e-3), (50.0, 5e-3), (100.0, 2e-2)];

pub const TRAPEZOID_POINTS: usize = 1_000_000;

fn argon_at(r_angstrom: f64, eta: f64) -> Result<DimerSystem> {
    let bohr = r_angstrom * crate::units::ANGSTROM_M / CODATA_2018.bohr_m;
    DimerSystem::argon(bohr, eta)
}

/// Every reference value the test suite freezes.
pub fn generate_fixtures() -> Result<Vec<Fixture>> {
    let k = CODATA_2018;
    let mut out = Vec::new();

    // E_h = mₑc²α² and a₀ = ħ/(mₑcα)
    let eh = k.electron_mass_kg * k.c_si * k.c_si * k.alpha_fsc * k.alpha_fsc;
    out.push(Fixture::new("hartree_joule", &[], eh, "m_e c^2 alpha^2", 0));
    let a0 = k.hbar_si / (k.electron_mass_kg * k.c_si * k.alpha_fsc);
    out.push(Fixture::new("angstrom_bohr", &[], 1e-10 / a0, "hbar/(m_e c alpha)", 0));

    let argon = crate::qdo::QdoParams::argon();
    out.push(Fixture::new("argon_qdo_length", &[], (0.5 / (argon.mass * argon.freq)).sqrt(), "sqrt(1/(2 m w))", 0));

    // unequal oscillators, unit masses and charges, coupling 0.1
    let a = crate::qdo::QdoParams::new(1.0, 1.0, 1.0)?;
    let b = crate::qdo::QdoParams::new(1.0, 2.0, 1.0)?;
    let hetero = DimerSystem::new(a, b, 10f64.cbrt(), 1.0)?;
    for (i, w) in direct_diagonalization(&hetero).iter().enumerate() {
        out.push(Fixture::new(
            &format!("hetero_mode_freq_{}", crate::mbd::MODE_LABELS[i]),
            &[("w1", 1.0), ("w2", 2.0), ("gamma", 0.1)],
            *w,
            "quadratic formula",
            0,
        ));
    }

    for (r, eta) in ANCHORS {
        let d = argon_at(r, eta)?;
        out.push(Fixture::new(
            "argon_delta_v_int",
            &[("r_angstrom", r), ("eta", eta)],
            trapezoid_integral(&d, TRAPEZOID_POINTS),
            "uniform trapezoid, compensated sum",
            TRAPEZOID_POINTS,
        ));
    }

    let d = argon_at(10.0, 1e-2)?;
    out.push(Fixture::new("argon_energy_scale", &[("eta", 1e-2)], energy_scale_si(&d), "SI constants", 0));

    for eta in [1e-3, 2e-3, 5e-3, 1e-2, 2e-2] {
        let d = argon_at(10.0, eta)?;
        let (c1, c7, c9) = coefficient_quadrature(&d);
        for (name, v) in [("c1", c1), ("c7", c7), ("c9", c9)] {
            out.push(Fixture::new(
                &format!("argon_{name}"),
                &[("eta", eta)],
                v,
                "composite Simpson of per-kbar coefficient",
                200_000,
            ));
        }
    }

    let d = argon_at(10.0, 1e-2)?;
    out.push(Fixture::new(
        "argon_a2_shift",
        &[("r_angstrom", 10.0)],
        a2_shift(&d, 400_000),
        "Simpson over mapped u",
        400_000,
    ));

    // response-derived dipole of Argon and the resulting force
    let mu = (0.5 * 11.1 * 0.07f64).sqrt();
    for r_nm in [10.0, 100.0] {
        let r = r_nm * 1e-9 / k.bohr_m;
        let f_au = 2.0 * k.alpha_fsc.powi(3) / PI * mu * mu * 0.07 * 0.07 / (r * r);
        out.push(Fixture::new(
            "argon_force_newton",
            &[("r_nm", r_nm)],
            f_au * k.hartree_j / k.bohr_m,
            "Eh/a0 force unit",
            0,
        ));
    }
    Ok(out)
}

/// Directory holding the fixtures: `$MBQED_FIXTURES`, or the crate's own
/// `fixtures/` folder.
pub fn fixtures_dir() -> PathBuf {
    std::env::var_os(FIXTURES_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
}

pub fn write_fixtures(dir: &Path, fixtures: &[Fixture]) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(FIXTURES_FILE);
    let mut text = serde_json::to_string_pretty(fixtures)?;
    text.push('\n');
    std::fs::write(&path, text)?;
    Ok(path)
}

pub fn load_fixtures(dir: &Path) -> Result<Vec<Fixture>> {
    let text = std::fs::read_to_string(dir.join(FIXTURES_FILE))?;
    Ok(serde_json::from_str(&text)?)
}

/// Look up a fixture by name and exact inputs.
pub fn find<'a>(fixtures: &'a [Fixture], quantity: &str, inputs: &[(&str, f64)]) -> Option<&'a Fixture> {
    fixtures.iter().find(|f| {
        f.quantity == quantity
            && f.inputs.len() == inputs.len()
            && inputs.iter().all(|(k, v)| f.inputs.get(*k) == Some(v))
    })
}

/// Deterministic spread of valid dimers: a Weyl sequence over masses,
/// frequencies, charge signs and coupling strengths with |2γ| ≤ 0.98.
pub fn sample_dimers(count: usize) -> Vec<DimerSystem> {
    let phi = [
        0.618_033_988_749_895,
        0.754_877_666_246_693,
        0.569_840_290_998_053,
        0.671_043_606_703_789,
        0.535_687_952_238_064,
    ];
    (1..=count)
        .map(|i| {
            let u: Vec<f64> = phi.iter().map(|p| (i as f64 * p).fract()).collect();
            let m1 = 10f64.powf(-1.0 + 2.0 * u[0]);
            let m2 = 10f64.powf(-1.0 + 2.0 * u[1]);
            let w1 = 10f64.powf(-1.5 + 2.0 * u[2]);
            let w2 = 10f64.powf(-1.5 + 2.0 * u[3]);
            let two_gamma = 0.98 * u[4];
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            let a = crate::qdo::QdoParams::new(m1, w1, 1.0).expect("positive parameters");
            let b = crate::qdo::QdoParams::new(m2, w2, sign).expect("positive parameters");
            let r = (2.0 / (two_gamma.max(1e-9) * (m1 * m2).sqrt() * w1 * w2)).cbrt();
            DimerSystem::new(a, b, r, 0.5).expect("valid geometry")
        })
        .collect()
}

/// Compare the production paths against the references above.
pub fn cross_checks(trapezoid_points: usize, dimers: usize) -> Result<Vec<OracleReport>> {
    use crate::radiative::{delta_e_a2, delta_v_int, energy_scale, QuadratureSpec};
    let spec = QuadratureSpec::default();
    let mut out = Vec::new();
    for (r, eta) in ANCHORS {
        let d = argon_at(r, eta)?;
        let main = delta_v_int(&d, &spec)?.value;
        out.push(OracleReport::new(
            format!("delta_v_int R={r}A eta={eta:e}"),
            main,
            trapezoid_integral(&d, trapezoid_points),
            1e-8,
        ));
    }
    let d = argon_at(10.0, 1e-2)?;
    out.push(OracleReport::new("energy_scale eta=1e-2", energy_scale(&d), energy_scale_si(&d), 1e-10));
    for eta in [1e-3, 2e-3, 5e-3, 1e-2, 2e-2] {
        let d = argon_at(10.0, eta)?;
        let main = crate::series::coefficients(&d)?;
        let (c1, c7, c9) = coefficient_quadrature(&d);
        for (name, m, o) in [("c1", main.c1, c1), ("c7", main.c7, c7), ("c9", main.c9, c9)] {
            out.push(OracleReport::new(format!("{name} eta={eta:e}"), m, o, 1e-10));
        }
    }
    out.push(OracleReport::new("a2_shift R=10A", delta_e_a2(&d).value, a2_shift(&d, 400_000), 1e-10));
    let mut worst = OracleReport::new("eigenfrequencies", 1.0, 1.0, 1e-12);
    for dimer in sample_dimers(dimers) {
        let main = crate::mbd::eigenfrequencies(&dimer)?;
        for (m, o) in main.iter().zip(direct_diagonalization(&dimer)) {
            let r = OracleReport::new("eigenfrequencies", *m, o, 1e-12);
            if r.rel_diff > worst.rel_diff {
                worst = r;
            }
        }
    }
    worst.quantity = format!("eigenfrequencies (worst of {dimers} dimers)");
    out.push(worst);
    Ok(out)
}
