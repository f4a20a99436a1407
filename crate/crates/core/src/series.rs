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

//! # Double expansion in coupling and retardation
//!
//! For identical oscillators the integrand expands in odd powers of γ and even
//! powers of τ. Each γᵖ block has the closed form
//!
//! ```text
//! −k̄² (wₚ f∥ − f⊥)(k̄τ) Pₚ(k̄, k̄_Q) / (Nₚ (k̄ + k̄_Q)ᵖ⁺¹)
//! ```
//!
//! with (w, N, P) = (1, 1, 1), (4, 8, 5k̄_Q² + 4k̄k̄_Q + k̄²) and
//! (16, 128, 63k̄_Q⁴ + 122k̄_Q³k̄ + 102k̄_Q²k̄² + 42k̄_Qk̄³ + 7k̄⁴), and the
//! kernels replaced by their Maclaurin polynomials up to τ^{m_τ}.
//!
//! Keeping γ and γ³ up to τ² and writing γ = 𝒜₀/R³, τ = k_M R turns the
//! potential into three powers of the distance,
//!
//! ```text
//! ΔV₁₂ⁱⁿᵗ ≈ ΔV (c̄₁/R + c̄₇/R⁷ + c̄₉/R⁹)
//! ```

use crate::error::{invalid, Error, Result};
use crate::qdo::DimerSystem;
use crate::radiative::{self, angular, QuadratureSpec};
use crate::units::UnitSystem;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesCoefficients {
    /// Coefficient of R⁻¹, in bohr.
    pub c1: f64,
    /// Coefficient of R⁻⁷, in bohr⁷.
    pub c7: f64,
    /// Coefficient of R⁻⁹, in bohr⁹.
    pub c9: f64,
    pub delta_v_scale: f64,
    pub kbar_q: f64,
    pub unit: UnitSystem,
}

impl SeriesCoefficients {
    /// The three contributions (c̄₁/R, c̄₇/R⁷, c̄₉/R⁹), each multiplied by ΔV.
    pub fn terms(&self, r: f64) -> [f64; 3] {
        [
            self.delta_v_scale * self.c1 / r,
            self.delta_v_scale * self.c7 / r.powi(7),
            self.delta_v_scale * self.c9 / r.powi(9),
        ]
    }

    pub fn evaluate(&self, r: f64) -> f64 {
        self.terms(r).iter().sum()
    }

    /// Distance below which the R⁻⁹ term outweighs the R⁻¹ term.
    pub fn crossover_radius(&self) -> f64 {
        (self.c9 / self.c1).abs().powf(0.125)
    }
}

/// ∫₀¹ k̄⁴/(15(k̄ + a)²) dk̄.
pub fn c1_integral(a: f64) -> f64 {
    if a < 2.0 {
        let acoth = 0.5 * (1.0 / a).ln_1p();
        (2.0 * (6.0 * a * a + 3.0 * a - 1.0) * a + 1.0 - 24.0 * (a + 1.0) * a.powi(3) * acoth) / (45.0 * (a + 1.0))
    } else {
        // expand 1/(k̄ + a)² in k̄/a
        let mut sum = 0.0;
        let mut p = 1.0 / (a * a);
        for n in 0..200 {
            let nf = n as f64;
            let term = (nf + 1.0) * p / (nf + 5.0);
            sum += term;
            if term.abs() < 1e-18 * sum.abs() {
                break;
            }
            p *= -1.0 / a;
        }
        sum / 15.0
    }
}

/// ∫₀¹ k̄⁴(k̄² + 4k̄a + 5a²)/(60(k̄ + a)⁴) dk̄.
pub fn c7_integral(a: f64) -> f64 {
    (3.0 * a + 1.0) / (180.0 * (a + 1.0).powi(3))
}

/// ∫₀¹ k̄²(k̄² + 4k̄a + 5a²)/(4(k̄ + a)⁴) dk̄.
pub fn c9_integral(a: f64) -> f64 {
    (3.0 + 5.0 * a) / (12.0 * (1.0 + a).powi(3))
}

fn require_homoatomic(d: &DimerSystem) -> Result<()> {
    if d.is_homoatomic() {
        Ok(())
    } else {
        Err(Error::Unsupported("the series expansion covers identical oscillators only".into()))
    }
}

/// Closed-form coefficients for an identical pair.
pub fn coefficients(d: &DimerSystem) -> Result<SeriesCoefficients> {
    require_homoatomic(d)?;
    let a0 = d.a.polarizability();
    let km2 = d.cutoff_wavenumber().powi(2);
    let a = d.kbar_q();
    Ok(SeriesCoefficients {
        c1: a0 * km2 * c1_integral(a),
        c7: -a0.powi(3) * km2 * c7_integral(a),
        c9: a0.powi(3) * c9_integral(a),
        delta_v_scale: radiative::energy_scale(d),
        kbar_q: a,
        unit: UnitSystem::Atomic,
    })
}

/// ΔV (c̄₁/R + c̄₇/R⁷ + c̄₉/R⁹) in hartree.
pub fn delta_v_approx(d: &DimerSystem) -> Result<f64> {
    Ok(coefficients(d)?.evaluate(d.separation))
}

const BLOCK_WEIGHT: [f64; 3] = [1.0, 4.0, 16.0];
const BLOCK_NORM: [f64; 3] = [1.0, 8.0, 128.0];

fn block_polynomial(block: usize, k: f64, a: f64) -> f64 {
    match block {
        0 => 1.0,
        1 => 5.0 * a * a + 4.0 * a * k + k * k,
        _ => 63.0 * a.powi(4) + 122.0 * a.powi(3) * k + 102.0 * a * a * k * k + 42.0 * a * k.powi(3) + 7.0 * k.powi(4),
    }
}

/// Truncated double expansion of the integrand: odd γ powers up to `m_gamma`
/// (at most 5) and τ powers up to `m_tau`.
pub fn expanded_integrand(kbar: f64, gamma: f64, tau: f64, kbar_q: f64, m_gamma: usize, m_tau: usize) -> Result<f64> {
    if m_gamma > 5 {
        return Err(Error::Unsupported(format!("coupling order {m_gamma} exceeds the available γ⁵ block")));
    }
    let x2 = (kbar * tau).powi(2);
    // truncated kernel polynomials
    let (mut perp, mut par, mut pow) = (0.0, 0.0, 1.0);
    for m in 0..=m_tau / 2 {
        let (cp, cl) = angular::series_coefficients(m);
        perp += cp * pow;
        par += cl * pow;
        pow *= x2;
    }
    let base = kbar + kbar_q;
    let mut sum = 0.0;
    for block in 0..3 {
        let p = 2 * block + 1;
        if p > m_gamma {
            break;
        }
        let kernel = BLOCK_WEIGHT[block] * par - perp;
        sum -= gamma.powi(p as i32) * kbar * kbar * kernel * block_polynomial(block, kbar, kbar_q)
            / (BLOCK_NORM[block] * base.powi(p as i32 + 1));
    }
    Ok(sum)
}

/// Upper bound on the relative error of the truncated expansion:
/// max over a uniform k̄ grid of |ℐ − ℐ_appr| divided by |∫ℐ|.
pub fn truncation_error(d: &DimerSystem, m_gamma: usize, m_tau: usize, kbar_grid: usize) -> Result<f64> {
    require_homoatomic(d)?;
    if m_gamma < 1 || m_tau < 1 {
        return Err(invalid("order", "expansion orders must be ≥ 1"));
    }
    if kbar_grid < 64 {
        return Err(invalid("kbar_grid", format!("need ≥ 64 samples, got {kbar_grid}")));
    }
    let (g, tau, a) = (d.gamma(), d.tau(), d.kbar_q());
    if g == 0.0 {
        return Ok(0.0);
    }
    let spec = QuadratureSpec::default();
    let total = -radiative::delta_v_int(d, &spec)?.value / radiative::energy_scale(d);
    let mut worst = 0.0f64;
    for j in 0..kbar_grid {
        let k = j as f64 / (kbar_grid - 1) as f64;
        let exact = radiative::integrand(k, g, tau, a)?;
        let approx = expanded_integrand(k, g, tau, a, m_gamma, m_tau)?;
        worst = worst.max((exact - approx).abs());
    }
    Ok(worst / total.abs())
}
