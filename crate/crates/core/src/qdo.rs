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

//! Quantum Drude oscillators and the two-oscillator geometry.
//!
//! A single oscillator is fixed by its mass, angular frequency and charge
//! (atomic units). The static polarizability is 𝒜₀ = q²/(mω²), the
//! zero-point length is λ = (2mω)^{-1/2} and the excitation energy is E = ω.

use crate::error::{invalid, Error, Result};
use crate::units::CODATA_2018;
use serde::{Deserialize, Serialize};

/// Static dipole polarizability of argon used for the dimer benchmarks (a₀³).
pub const ARGON_POLARIZABILITY: f64 = 11.1;
/// Excitation energy ħω of the argon oscillator (Eₕ).
pub const ARGON_EXCITATION_ENERGY: f64 = 0.07;
/// η·k̄_Q for the argon dimer; fixes the zero-point length of the argon oscillator.
pub const ARGON_KBAR_Q_ETA: f64 = 2.52e-3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QdoParams {
    pub mass: f64,
    pub freq: f64,
    pub charge: f64,
}

impl QdoParams {
    pub fn new(mass: f64, freq: f64, charge: f64) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(invalid("mass", format!("must be finite and > 0, got {mass}")));
        }
        if !(freq.is_finite() && freq > 0.0) {
            return Err(invalid("freq", format!("must be finite and > 0, got {freq}")));
        }
        if !charge.is_finite() || charge == 0.0 {
            return Err(invalid("charge", format!("must be finite and non-zero, got {charge}")));
        }
        Ok(Self { mass, freq, charge })
    }

    /// Build an oscillator from its response properties: polarizability 𝒜₀,
    /// excitation energy E = ħω and a chosen charge. The mass follows from
    /// 𝒜₀ = q²/(mω²).
    pub fn from_response(polarizability: f64, energy: f64, charge: f64) -> Result<Self> {
        if !(polarizability.is_finite() && polarizability > 0.0) {
            return Err(invalid("polarizability", format!("must be > 0, got {polarizability}")));
        }
        if !(energy.is_finite() && energy > 0.0) {
            return Err(invalid("energy", format!("must be > 0, got {energy}")));
        }
        Self::new(charge * charge / (polarizability * energy * energy), energy, charge)
    }

    /// Like [`QdoParams::from_response`] but pins the zero-point length λ
    /// instead of the charge. Since λ² = 𝒜₀ω/(2q²), the charge is
    /// q = (𝒜₀ω/2)^{1/2}/λ.
    pub fn from_response_and_length(polarizability: f64, energy: f64, length: f64) -> Result<Self> {
        if !(length.is_finite() && length > 0.0) {
            return Err(invalid("length", format!("must be > 0, got {length}")));
        }
        if !(polarizability.is_finite() && polarizability > 0.0) {
            return Err(invalid("polarizability", format!("must be > 0, got {polarizability}")));
        }
        let charge = (0.5 * polarizability * energy).sqrt() / length;
        Self::from_response(polarizability, energy, charge)
    }

    /// Argon oscillator: 𝒜₀ = 11.1 a₀³ and E = 0.07 Eₕ, with the length chosen so
    /// that the dimensionless oscillator wavenumber is k̄_Q = 2.52·10⁻³/η.
    pub fn argon() -> Self {
        let length = ARGON_KBAR_Q_ETA * CODATA_2018.c_atomic() / ARGON_EXCITATION_ENERGY;
        Self::from_response_and_length(ARGON_POLARIZABILITY, ARGON_EXCITATION_ENERGY, length)
            .expect("argon parameters are valid")
    }

    /// Static polarizability 𝒜₀ = q²/(mω²).
    pub fn polarizability(&self) -> f64 {
        self.charge * self.charge / (self.mass * self.freq * self.freq)
    }

    /// Zero-point length (ħ/2mω)^{1/2}.
    pub fn qdo_length(&self) -> f64 {
        (0.5 / (self.mass * self.freq)).sqrt()
    }

    /// Excitation energy ħω.
    pub fn energy(&self) -> f64 {
        self.freq
    }

    /// Mass-reduced charge q/√m.
    pub fn reduced_charge(&self) -> f64 {
        self.charge / self.mass.sqrt()
    }

    /// Same polarizability and charge, different frequency.
    pub fn with_freq(&self, freq: f64) -> Result<Self> {
        Self::from_response(self.polarizability(), freq, self.charge)
    }
}

/// Which oscillator of the dimer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Atom {
    First,
    Second,
}

impl Atom {
    pub fn index(self) -> usize {
        match self {
            Atom::First => 0,
            Atom::Second => 1,
        }
    }
}

/// Two oscillators on the z axis a distance `separation` apart, with the photon
/// cutoff k_M = η/λ_max.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimerSystem {
    pub a: QdoParams,
    pub b: QdoParams,
    pub separation: f64,
    pub eta: f64,
}

impl DimerSystem {
    pub fn new(a: QdoParams, b: QdoParams, separation: f64, eta: f64) -> Result<Self> {
        if !(separation.is_finite() && separation > 0.0) {
            return Err(invalid("separation", format!("must be > 0, got {separation}")));
        }
        if !(eta > 0.0 && eta <= 1.0) {
            return Err(invalid("eta", format!("must lie in (0, 1], got {eta}")));
        }
        Ok(Self { a, b, separation, eta })
    }

    pub fn homoatomic(q: QdoParams, separation: f64, eta: f64) -> Result<Self> {
        Self::new(q, q, separation, eta)
    }

    /// Argon dimer at `separation` bohr.
    pub fn argon(separation: f64, eta: f64) -> Result<Self> {
        Self::homoatomic(QdoParams::argon(), separation, eta)
    }

    pub fn atom(&self, atom: Atom) -> &QdoParams {
        match atom {
            Atom::First => &self.a,
            Atom::Second => &self.b,
        }
    }

    pub fn with_separation(&self, separation: f64) -> Result<Self> {
        Self::new(self.a, self.b, separation, self.eta)
    }

    pub fn with_eta(&self, eta: f64) -> Result<Self> {
        Self::new(self.a, self.b, self.separation, eta)
    }

    /// The dimer with the two oscillators exchanged.
    pub fn swapped(&self) -> Self {
        Self { a: self.b, b: self.a, ..*self }
    }

    /// λ_QDOM, the larger of the two zero-point lengths.
    pub fn qdo_length_max(&self) -> f64 {
        self.a.qdo_length().max(self.b.qdo_length())
    }

    /// Photon cutoff k_M = η/λ_QDOM.
    pub fn cutoff_wavenumber(&self) -> f64 {
        self.eta / self.qdo_length_max()
    }

    /// Cutoff photon energy E_M = ħck_M.
    pub fn cutoff_energy(&self) -> f64 {
        CODATA_2018.c_atomic() * self.cutoff_wavenumber()
    }

    /// τ = k_M R.
    pub fn tau(&self) -> f64 {
        self.cutoff_wavenumber() * self.separation
    }

    /// k̄_Q = ω/(c k_M), using the geometric mean frequency for unlike oscillators.
    pub fn kbar_q(&self) -> f64 {
        (self.a.freq * self.b.freq).sqrt() / self.cutoff_energy()
    }

    /// Dipole coupling in frequency² units, q₁q₂/(√(m₁m₂) R³).
    pub fn coupling_frequency_sq(&self) -> f64 {
        self.a.charge * self.b.charge / ((self.a.mass * self.b.mass).sqrt() * self.separation.powi(3))
    }

    /// Dimensionless coupling γ, normalised by ω₁ω₂. Equals 𝒜₀/R³ for identical
    /// oscillators. Not checked against the validity bound.
    pub fn gamma(&self) -> f64 {
        self.coupling_frequency_sq() / (self.a.freq * self.b.freq)
    }

    /// Per-axis couplings (γ, γ, −2γ), failing when |2γ| ≥ 1.
    pub fn coupling_gamma(&self) -> Result<[f64; 3]> {
        let g = self.gamma();
        self.check_regime()?;
        Ok([g, g, -2.0 * g])
    }

    pub fn check_regime(&self) -> Result<()> {
        let two_gamma = 2.0 * self.gamma().abs();
        if two_gamma.is_finite() && two_gamma < 1.0 {
            Ok(())
        } else {
            Err(Error::InvalidRegime { two_gamma })
        }
    }

    /// Both oscillators share the same frequency to 1e-12 relative.
    pub fn is_resonant(&self) -> bool {
        (self.a.freq - self.b.freq).abs() <= 1e-12 * self.a.freq.max(self.b.freq)
    }

    /// Identical oscillators up to 1e-12 relative in every parameter.
    pub fn is_homoatomic(&self) -> bool {
        let close = |x: f64, y: f64| (x - y).abs() <= 1e-12 * x.abs().max(y.abs());
        close(self.a.mass, self.b.mass) && close(self.a.freq, self.b.freq) && close(self.a.charge, self.b.charge)
    }
}
