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

//! # Second-order radiative energies
//!
//! Coupling the six collective modes to transverse photons through p·A and
//! integrating out the photons leaves a distance-dependent shift
//!
//! ```text
//! ΔV₁₂ⁱⁿᵗ(R) = −ΔV ∫₀¹ ℐ(k̄; γ, τ, k̄_Q) dk̄
//! ```
//!
//! with photon momentum k = k̄ k_M, τ = k_M R, and the energy scale
//! ΔV = α³ E_M q₁q₂ √(ω₁ω₂)/(π√(m₁m₂)). For identical oscillators this scale is
//! α³ E_M 𝒜₀ E³/π. Positive values mean repulsion.
//!
//! Per axis, the sum over the two modes of the weighted propagator collapses to
//! a single term proportional to the coupling, so ℐ is evaluated as
//!
//! ```text
//! ℐ = Σᵢ Fᵢ(k̄τ) γᵢ u² / (√(ω₁ω₂) (ω̃ᵢ₊ + ω̃ᵢ₋)(u + ω̃ᵢ₊)(u + ω̃ᵢ₋)),  u = c k_M k̄
//! ```
//!
//! with F = f⊥ on x, y and f∥ on z. No difference of nearly equal numbers is
//! formed, which matters at γ ~ 10⁻⁶.

pub mod angular;
pub mod quadrature;

use crate::error::{invalid, Error, Result};
use crate::mbd::{NormalModeData, MODE_LABELS};
use crate::qdo::{Atom, DimerSystem};
use crate::units::{UnitSystem, CODATA_2018};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

pub use angular::{f_diff, f_par, f_perp};

/// An energy together with how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiativeResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub n_evals: usize,
    pub unit: UnitSystem,
}

impl RadiativeResult {
    fn exact(value: f64) -> Self {
        Self { value, abs_error_estimate: 0.0, n_evals: 0, unit: UnitSystem::Atomic }
    }

    /// The same energy expressed in another unit system.
    pub fn to_unit(&self, unit: UnitSystem) -> Self {
        let conv = |v| crate::units::convert_energy(v, self.unit, unit);
        Self { value: conv(self.value), abs_error_estimate: conv(self.abs_error_estimate), n_evals: self.n_evals, unit }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    /// Absolute tolerance on the energy, in hartree.
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self { rel_tol: 1e-9, abs_tol: 1e-30, max_subdivisions: 2000 }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(invalid("rel_tol", format!("must be > 0, got {}", self.rel_tol)));
        }
        if !(self.abs_tol >= 0.0) {
            return Err(invalid("abs_tol", format!("must be ≥ 0, got {}", self.abs_tol)));
        }
        if self.max_subdivisions == 0 {
            return Err(invalid("max_subdivisions", "must be ≥ 1"));
        }
        Ok(())
    }

    pub fn with_rel_tol(self, rel_tol: f64) -> Self {
        Self { rel_tol, ..self }
    }
}

/// Dimensionless integrand for identical oscillators, in the variables
/// used by the series expansion.
///
/// `gamma` is the dimensionless coupling, `tau` = k_M R and `kbar_q` = ω/(c k_M).
pub fn integrand(kbar: f64, gamma: f64, tau: f64, kbar_q: f64) -> Result<f64> {
    if !(2.0 * gamma.abs() < 1.0) {
        return Err(Error::InvalidRegime { two_gamma: 2.0 * gamma.abs() });
    }
    // D(g) = 2g k̄ / ((s₊ + s₋)(k̄ + s₊k̄_Q)(k̄ + s₋k̄_Q)), s± = √(1 ± g)
    let d = |g: f64| {
        let (sp, sm) = ((1.0 + g).sqrt(), (1.0 - g).sqrt());
        2.0 * g * kbar / ((sp + sm) * (kbar + sp * kbar_q) * (kbar + sm * kbar_q))
    };
    let x = kbar * tau;
    Ok(kbar * (f_perp(x) * d(gamma) - 0.5 * f_par(x) * d(2.0 * gamma)))
}

/// The integrand of a specific dimer with its normal modes solved once.
#[derive(Debug, Clone)]
pub struct DimerIntegrand {
    couplings: [f64; 3],
    mode_freqs: [[f64; 2]; 3],
    omega_geo: f64,
    photon_energy: f64,
    tau: f64,
}

impl DimerIntegrand {
    pub fn new(d: &DimerSystem) -> Result<Self> {
        let modes = NormalModeData::new(d)?;
        Ok(Self::from_modes(d, &modes))
    }

    pub fn from_modes(d: &DimerSystem, modes: &NormalModeData) -> Self {
        Self {
            couplings: modes.couplings,
            mode_freqs: [modes.axes[0].freqs, modes.axes[1].freqs, modes.axes[2].freqs],
            omega_geo: (d.a.freq * d.b.freq).sqrt(),
            photon_energy: d.cutoff_energy(),
            tau: d.tau(),
        }
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn eval(&self, kbar: f64) -> f64 {
        let x = kbar * self.tau;
        let kernels = [f_perp(x), f_perp(x), f_par(x)];
        let u = self.photon_energy * kbar;
        let mut sum = 0.0;
        for ((f, g), [wp, wm]) in kernels.iter().zip(self.couplings).zip(self.mode_freqs) {
            sum += f * g * u * u / ((wp + wm) * (u + wp) * (u + wm));
        }
        sum / self.omega_geo
    }
}

/// Assemble ℐ mode by mode from the correlation tensor,
/// ℐ = Σ_{iα} Fᵢ 𝒞⁽¹²⁾_{iα} u/(u + ω̃_{iα}).
///
/// The two branches of each axis nearly cancel at weak coupling, so this is a
/// cross-check rather than the production path.
pub fn integrand_from_modes(d: &DimerSystem, kbar: f64) -> Result<f64> {
    let modes = NormalModeData::new(d)?;
    let cross = modes.correlation().cross();
    let x = kbar * d.tau();
    let kernels = [f_perp(x), f_perp(x), f_par(x)];
    let u = d.cutoff_energy() * kbar;
    let mut sum = 0.0;
    for (mode, c) in cross.iter().enumerate() {
        let w = modes.freqs[mode];
        sum += kernels[mode / 2] * c * u / (u + w);
    }
    Ok(sum)
}

/// Energy prefactor ΔV in hartree.
pub fn energy_scale(d: &DimerSystem) -> f64 {
    let alpha = CODATA_2018.alpha_fsc;
    alpha.powi(3) * d.cutoff_energy() * d.a.charge * d.b.charge * (d.a.freq * d.b.freq).sqrt()
        / (PI * (d.a.mass * d.b.mass).sqrt())
}

/// ΔV₁₂ⁱⁿᵗ by adaptive quadrature. Positive means repulsive.
pub fn delta_v_int(d: &DimerSystem, spec: &QuadratureSpec) -> Result<RadiativeResult> {
    spec.validate()?;
    let integrand = DimerIntegrand::new(d)?;
    let scale = energy_scale(d);
    let tol = quadrature::Tolerance {
        rel: spec.rel_tol,
        abs: spec.abs_tol / scale.abs(),
        max_subdivisions: spec.max_subdivisions,
    };
    let max_width = 2.0 * PI / integrand.tau() / 8.0;
    let r = quadrature::integrate(|k| integrand.eval(k), 0.0, 1.0, max_width, tol);
    let result = RadiativeResult {
        value: -scale * r.value,
        abs_error_estimate: scale.abs() * r.abs_error,
        n_evals: r.n_evals,
        unit: UnitSystem::Atomic,
    };
    if r.converged {
        Ok(result)
    } else {
        Err(Error::ToleranceNotMet { best: result })
    }
}

/// Renormalised, distance-independent dressing of oscillator `atom` by the
/// photon field:
///
/// ```text
/// ΔU_a = q_a²/(3π m_a c³) Σ_{iα} 𝒩²_{iα,a} ω̃²_{iα} ln(1 + c k_M/ω̃_{iα})
/// ```
pub fn delta_u_self(d: &DimerSystem, atom: Atom) -> Result<RadiativeResult> {
    let modes = NormalModeData::new(d)?;
    let corr = modes.correlation();
    let c = CODATA_2018.c_atomic();
    let em = d.cutoff_energy();
    let q = d.atom(atom);
    let sum: f64 = (0..MODE_LABELS.len())
        .map(|mode| {
            let w = modes.freqs[mode];
            corr.mode_weight(atom, mode) * w * w * (em / w).ln_1p()
        })
        .sum();
    Ok(RadiativeResult::exact(q.charge * q.charge / (3.0 * PI * q.mass * c.powi(3)) * sum))
}

/// Two-photon shift from the diamagnetic A² term at second order,
/// ΔE₂ = −q₁²q₂²/(4π m₁m₂ c³ R³). Attractive and of fourth order in the charges.
pub fn delta_e_a2(d: &DimerSystem) -> RadiativeResult {
    let c = CODATA_2018.c_atomic();
    let q2 = (d.a.charge * d.b.charge).powi(2);
    RadiativeResult::exact(-q2 / (4.0 * PI * d.a.mass * d.b.mass * c.powi(3) * d.separation.powi(3)))
}
