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

//! Radiative many-body QED interaction between two quantum Drude oscillators.
//!
//! Two charged harmonic oscillators coupled by the instantaneous dipole
//! potential form six collective modes. Dressing those modes with transverse
//! photons up to a cutoff k_M produces, beyond the familiar R⁻⁶ dispersion, a
//! weak repulsive tail that decays as R⁻¹. The crate evaluates that tail
//! exactly by quadrature, through its short closed-form expansion
//! ΔV (c̄₁/R + c̄₇/R⁷ + c̄₉/R⁹), and through several derived quantities.
//!
//! ```
//! use mbqed::prelude::*;
//!
//! let dimer = DimerSystem::argon(angstrom_to_bohr(20.0), 1e-2)?;
//! let exact = delta_v_int(&dimer, &QuadratureSpec::default())?;
//! let approx = delta_v_approx(&dimer)?;
//! assert!(exact.value > 0.0);
//! assert!((approx / exact.value - 1.0).abs() < 0.05);
//! # Ok::<(), mbqed::Error>(())
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod cli;
pub mod error;
pub mod mbd;
pub mod oracle;
pub mod qdo;
pub mod radiative;
pub mod series;
pub mod units;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::analysis::{
        crossover_ratio, effective_charge, force_estimate, london_c6, power_law_fit, PowerLawFit, SweepPoint,
    };
    pub use crate::error::{Error, Result};
    pub use crate::mbd::{eigenfrequencies, NormalModeData};
    pub use crate::qdo::{Atom, DimerSystem, QdoParams};
    pub use crate::radiative::{delta_e_a2, delta_u_self, delta_v_int, energy_scale, QuadratureSpec, RadiativeResult};
    pub use crate::series::{coefficients, delta_v_approx, SeriesCoefficients};
    pub use crate::units::{angstrom_to_bohr, bohr_to_angstrom, UnitSystem};
}
