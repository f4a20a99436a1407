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

//! # Physical constants and unit systems
//!
//! Everything inside the crate is computed in Hartree atomic units
//! (ħ = e = mₑ = 4πε₀ = 1, c = 1/α). The three systems below only meet at I/O
//! boundaries.
//!
//! | system  | energy | length | mass   | force     |
//! |---------|--------|--------|--------|-----------|
//! | Atomic  | Eₕ     | a₀     | mₑ     | Eₕ/a₀     |
//! | SI      | J      | m      | kg     | N         |
//! | Natural | eV     | eV⁻¹   | eV/c²  | eV²       |
//!
//! Natural units set ħ = c = 1 with the electronvolt as the base unit.
//!
//! ```
//! use mbqed::units::{convert_energy, UnitSystem};
//! let joules = convert_energy(1.0, UnitSystem::Atomic, UnitSystem::Si);
//! assert!((joules / 4.3597447222071e-18 - 1.0).abs() < 1e-15);
//! ```

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum UnitSystem {
    Si,
    Natural,
    #[default]
    Atomic,
}

impl std::fmt::Display for UnitSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            UnitSystem::Si => "si",
            UnitSystem::Natural => "natural",
            UnitSystem::Atomic => "atomic",
        };
        f.write_str(s)
    }
}

/// Kinds of quantity that can be moved between unit systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dimension {
    Energy,
    Length,
    Mass,
    Force,
}

/// Fundamental constants, stored in SI.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    /// Fine-structure constant (dimensionless)
    pub alpha_fsc: f64,
    /// Hartree energy in joules
    pub hartree_j: f64,
    /// Bohr radius in metres
    pub bohr_m: f64,
    pub hbar_si: f64,
    pub c_si: f64,
    pub eps0_si: f64,
    pub electron_mass_kg: f64,
    pub elementary_charge_c: f64,
}

/// CODATA 2018 recommended values.
pub const CODATA_2018: Constants = Constants {
    alpha_fsc: 7.297_352_569_3e-3,
    hartree_j: 4.359_744_722_207_1e-18,
    bohr_m: 5.291_772_109_03e-11,
    hbar_si: 1.054_571_817_646_156_5e-34,
    c_si: 299_792_458.0,
    eps0_si: 8.854_187_812_8e-12,
    electron_mass_kg: 9.109_383_701_5e-31,
    elementary_charge_c: 1.602_176_634e-19,
};

/// Fine-structure constant.
pub const ALPHA_FSC: f64 = CODATA_2018.alpha_fsc;

/// One debye in atomic units of dipole moment (e·a₀).
pub const DEBYE_AU: f64 = 0.393_430_3;

/// One ångström in metres.
pub const ANGSTROM_M: f64 = 1e-10;

impl Constants {
    /// Speed of light in atomic units, 1/α.
    pub fn c_atomic(&self) -> f64 {
        1.0 / self.alpha_fsc
    }

    /// ħc in eV·m.
    pub fn hbar_c_ev_m(&self) -> f64 {
        self.hbar_si * self.c_si / self.elementary_charge_c
    }

    /// How many SI units one unit of `dim` in `system` is worth.
    pub fn si_factor(&self, dim: Dimension, system: UnitSystem) -> f64 {
        let e = self.elementary_charge_c;
        match (system, dim) {
            (UnitSystem::Si, _) => 1.0,
            (UnitSystem::Atomic, Dimension::Energy) => self.hartree_j,
            (UnitSystem::Atomic, Dimension::Length) => self.bohr_m,
            (UnitSystem::Atomic, Dimension::Mass) => self.electron_mass_kg,
            (UnitSystem::Atomic, Dimension::Force) => self.hartree_j / self.bohr_m,
            (UnitSystem::Natural, Dimension::Energy) => e,
            (UnitSystem::Natural, Dimension::Length) => self.hbar_c_ev_m(),
            (UnitSystem::Natural, Dimension::Mass) => e / (self.c_si * self.c_si),
            (UnitSystem::Natural, Dimension::Force) => e / self.hbar_c_ev_m(),
        }
    }

    pub fn convert(&self, value: f64, dim: Dimension, from: UnitSystem, to: UnitSystem) -> f64 {
        if from == to {
            return value;
        }
        value * (self.si_factor(dim, from) / self.si_factor(dim, to))
    }
}

/// Convert an energy between unit systems using [`CODATA_2018`].
pub fn convert_energy(value: f64, from: UnitSystem, to: UnitSystem) -> f64 {
    CODATA_2018.convert(value, Dimension::Energy, from, to)
}

/// Convert a length between unit systems using [`CODATA_2018`].
pub fn convert_length(value: f64, from: UnitSystem, to: UnitSystem) -> f64 {
    CODATA_2018.convert(value, Dimension::Length, from, to)
}

pub fn convert_force(value: f64, from: UnitSystem, to: UnitSystem) -> f64 {
    CODATA_2018.convert(value, Dimension::Force, from, to)
}

pub fn angstrom_to_bohr(r: f64) -> f64 {
    r * ANGSTROM_M / CODATA_2018.bohr_m
}

pub fn bohr_to_angstrom(r: f64) -> f64 {
    r * CODATA_2018.bohr_m / ANGSTROM_M
}

/// Electronvolts to hartree.
pub fn ev_to_hartree(e: f64) -> f64 {
    convert_energy(e, UnitSystem::Natural, UnitSystem::Atomic)
}
