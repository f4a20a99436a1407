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

//! Fits, crossover maps and order-of-magnitude estimates built on top of the
//! radiative and series results.

use crate::error::{Error, Result};
use crate::qdo::{DimerSystem, QdoParams};
use crate::series;
use crate::units::{convert_force, UnitSystem, CODATA_2018};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// One sample of a distance sweep, all in atomic units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub r: f64,
    pub value: f64,
    pub error: f64,
}

/// y = amplitude · R^exponent. `residual_rms` is measured in natural-log space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerLawFit {
    pub amplitude: f64,
    pub exponent: f64,
    pub residual_rms: f64,
}

impl PowerLawFit {
    pub fn predict(&self, r: f64) -> f64 {
        self.amplitude * r.powf(self.exponent)
    }
}

/// Unweighted least-squares line through (ln R, ln y).
pub fn power_law_fit(points: &[SweepPoint]) -> Result<PowerLawFit> {
    if points.len() < 3 {
        return Err(Error::TooFewPoints { needed: 3, got: points.len() });
    }
    for (index, p) in points.iter().enumerate() {
        if !(p.value > 0.0) || !(p.r > 0.0) {
            return Err(Error::NonPositiveValue { index, value: if p.r > 0.0 { p.value } else { p.r } });
        }
    }
    let n = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.r.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.value.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxx, mut sxy) = (0.0, 0.0);
    for (x, y) in xs.iter().zip(&ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if sxx == 0.0 {
        return Err(crate::error::invalid("r", "all sample distances coincide"));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss: f64 = xs.iter().zip(&ys).map(|(x, y)| (y - intercept - slope * x).powi(2)).sum();
    Ok(PowerLawFit { amplitude: intercept.exp(), exponent: slope, residual_rms: (ss / n).sqrt() })
}

/// London dispersion coefficient of two oscillators,
/// C₆ = (3/2) 𝒜₀₁𝒜₀₂ ω₁ω₂/(ω₁ + ω₂).
pub fn london_c6(a: &QdoParams, b: &QdoParams) -> f64 {
    1.5 * a.polarizability() * b.polarizability() * a.freq * b.freq / (a.freq + b.freq)
}

/// log₁₀ of the leading repulsive term ΔV c̄₁/R over the dispersion energy
/// C₆/R⁶, after retuning both oscillators to frequency `omega` at fixed
/// polarizability and charge.
pub fn crossover_ratio(d: &DimerSystem, omega: f64, r: f64) -> Result<f64> {
    let tuned = DimerSystem::new(d.a.with_freq(omega)?, d.b.with_freq(omega)?, r, d.eta)?;
    tuned.check_regime()?;
    let c = series::coefficients(&tuned)?;
    let lead = c.delta_v_scale * c.c1 / r;
    let c6 = london_c6(&tuned.a, &tuned.b);
    Ok((lead * r.powi(6) / c6).log10())
}

/// Per-oscillator charge such that the leading MB-QED term of an identical
/// pair reads q_eff²/R up to the cutoff factor, q_eff = α^{3/2} 𝒜₀^{1/4} E^{3/4}/√π.
pub fn effective_charge(q: &QdoParams) -> f64 {
    CODATA_2018.alpha_fsc.powf(1.5) * q.polarizability().powf(0.25) * q.energy().powf(0.75) / PI.sqrt()
}

/// Transition dipole of an oscillator from 𝒜₀ ≃ 2|d|²/E.
pub fn dipole_from_polarizability(polarizability: f64, energy: f64) -> f64 {
    (0.5 * polarizability * energy).sqrt()
}

/// Force F ≈ (2α³/π) μ₁μ₂E₁E₂/R² in newtons. Dipoles, energies and distance in
/// atomic units.
pub fn force_estimate(mu1: f64, mu2: f64, e1: f64, e2: f64, r: f64) -> f64 {
    let alpha = CODATA_2018.alpha_fsc;
    let au = 2.0 * alpha.powi(3) / PI * mu1 * mu2 * e1 * e2 / (r * r);
    convert_force(au, UnitSystem::Atomic, UnitSystem::Si)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radiative::energy_scale;
    use crate::units::{angstrom_to_bohr, ev_to_hartree, DEBYE_AU};
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn synthetic(amp: f64, p: f64, rs: &[f64]) -> Vec<SweepPoint> {
        rs.iter().map(|&r| SweepPoint { r, value: amp * r.powf(p), error: 0.0 }).collect()
    }

    #[test]
    fn exact_power_laws() {
        let rs: Vec<f64> = (1..=10).map(|i| i as f64).collect();
        let f = power_law_fit(&synthetic(5.0, -1.0, &rs)).unwrap();
        assert_relative_eq!(f.amplitude, 5.0, max_relative = 1e-12);
        assert_relative_eq!(f.exponent, -1.0, max_relative = 1e-12);
        assert!(f.residual_rms < 1e-12);
        let f6 = power_law_fit(&synthetic(2.0, -6.0, &rs)).unwrap();
        assert_relative_eq!(f6.exponent, -6.0, max_relative = 1e-12);
        assert_relative_eq!(f6.predict(3.0), 2.0 / 729.0, max_relative = 1e-11);
    }

    #[test]
    fn rejects_bad_input() {
        let mut pts = synthetic(1.0, -1.0, &[1.0, 2.0, 3.0, 4.0]);
        pts[2].value = -1.0;
        assert!(matches!(power_law_fit(&pts), Err(Error::NonPositiveValue { index: 2, .. })));
        assert!(matches!(power_law_fit(&pts[..2]), Err(Error::TooFewPoints { .. })));
    }

    #[test]
    fn c6_symmetric() {
        let a = QdoParams::argon();
        let b = a.with_freq(0.1).unwrap();
        assert_relative_eq!(london_c6(&a, &b), london_c6(&b, &a), max_relative = 1e-15);
        // identical oscillators: (3/4) 𝒜₀² ω
        assert_relative_eq!(london_c6(&a, &a), 0.75 * 11.1 * 11.1 * 0.07, max_relative = 1e-12);
    }

    #[test]
    fn crossover_monotone_in_distance() {
        let d = DimerSystem::argon(10.0, 2e-2).unwrap();
        let mut prev = f64::NEG_INFINITY;
        for j in 0..20 {
            let r = angstrom_to_bohr(5.0 * 100f64.powf(j as f64 / 19.0));
            let v = crossover_ratio(&d, 0.07, r).unwrap();
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn effective_charge_identities() {
        let q = QdoParams::argon();
        let alpha = CODATA_2018.alpha_fsc;
        let product = effective_charge(&q).powi(2);
        let expected = alpha.powi(3) * q.polarizability().sqrt() * q.energy().powf(1.5) / PI;
        assert_relative_eq!(product, expected, max_relative = 1e-14);
        let big = QdoParams::from_response(16.0 * q.polarizability(), q.energy(), q.charge).unwrap();
        assert_relative_eq!(effective_charge(&big), 2.0 * effective_charge(&q), max_relative = 1e-14);
        // the leading prefactor carries √(𝒜₀₁𝒜₀₂)(E₁E₂)^{3/2}, the square of q_eff,1·q_eff,2
        // up to π/α³
        let d = DimerSystem::argon(angstrom_to_bohr(20.0), 1e-2).unwrap();
        let lead = alpha.powi(3) * q.polarizability() * q.energy().powi(3) / PI;
        assert_relative_eq!(energy_scale(&d), lead * d.cutoff_energy(), max_relative = 1e-13);
        assert_relative_eq!(lead, product * product * PI / alpha.powi(3), max_relative = 1e-13);
    }

    #[test]
    fn force_window() {
        let q = QdoParams::argon();
        let mu = dipole_from_polarizability(q.polarizability(), q.energy());
        assert_relative_eq!(mu, (11.1 * 0.07 / 2.0f64).sqrt(), max_relative = 1e-15);
        let nm = angstrom_to_bohr(10.0);
        for r in [10.0 * nm, 100.0 * nm] {
            let f = force_estimate(mu, mu, q.energy(), q.energy(), r);
            assert!((1e-23..=1e-19).contains(&f), "{f}");
        }
        // strongly polar objects
        let (mu, e) = (75.0 * DEBYE_AU, ev_to_hartree(1.5));
        let f = force_estimate(mu, mu, e, e, 100.0 * nm);
        assert!((1e-21..=1e-19).contains(&f), "{f}");
        let f1 = force_estimate(1.0, 2.0, 0.1, 0.2, 50.0);
        assert_relative_eq!(f1 / force_estimate(1.0, 2.0, 0.1, 0.2, 200.0), 16.0, max_relative = 1e-14);
    }

    proptest! {
        #[test]
        fn recovers_power_laws(amp in 1e-10f64..1e10, p in -8.0f64..2.0, scale in 1e-3f64..1e3,
                               rs in proptest::collection::vec(0.1f64..1e3, 3..40)) {
            let mut rs = rs;
            rs.sort_by(f64::total_cmp);
            rs.dedup_by(|a, b| (*a / *b - 1.0).abs() < 1e-3);
            prop_assume!(rs.len() >= 3);
            let f = power_law_fit(&synthetic(amp, p, &rs)).unwrap();
            prop_assert!((f.exponent - p).abs() < 1e-9);
            prop_assert!((f.amplitude / amp - 1.0).abs() < 1e-9);
            let g = power_law_fit(&synthetic(amp * scale, p, &rs)).unwrap();
            prop_assert!((g.exponent - f.exponent).abs() < 1e-9);
            prop_assert!((g.amplitude / (f.amplitude * scale) - 1.0).abs() < 1e-9);
        }

        #[test]
        fn force_symmetry(m1 in 0.1f64..50.0, m2 in 0.1f64..50.0, e1 in 0.01f64..1.0, e2 in 0.01f64..1.0) {
            let a = force_estimate(m1, m2, e1, e2, 100.0);
            let b = force_estimate(m2, m1, e2, e1, 100.0);
            prop_assert!((a - b).abs() <= 1e-15 * a);
        }
    }
}
