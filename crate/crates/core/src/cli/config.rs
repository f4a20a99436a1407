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

//! Run configuration read from TOML.
//!
//! ```toml
//! threads = 4
//!
//! [dimer]
//! a = { preset = "argon" }
//! b = { polarizability = 11.1, energy = 0.07, charge = 1.0 }
//!
//! [grid]
//! r_min_angstrom = 5.0
//! r_max_angstrom = 100.0
//! count = 30
//! spacing = "log"
//! eta = [2e-2, 1e-2]
//! ```
//!
//! Every section is optional; the defaults reproduce the Argon sweep.

use crate::error::{Error, Result};
use crate::qdo::{DimerSystem, QdoParams};
use crate::radiative::QuadratureSpec;
use crate::units::angstrom_to_bohr;
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Log,
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    Argon,
}

/// One oscillator, given by preset, mechanical parameters or response
/// properties. A response entry pins either the charge or the length.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AtomSpec {
    Preset {
        preset: Preset,
    },
    Mechanical {
        mass: f64,
        freq: f64,
        charge: f64,
    },
    Response {
        polarizability: f64,
        energy: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        charge: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        length: Option<f64>,
    },
}

impl Default for AtomSpec {
    fn default() -> Self {
        AtomSpec::Preset { preset: Preset::Argon }
    }
}

impl AtomSpec {
    pub fn build(&self) -> Result<QdoParams> {
        match *self {
            AtomSpec::Preset { preset: Preset::Argon } => Ok(QdoParams::argon()),
            AtomSpec::Mechanical { mass, freq, charge } => QdoParams::new(mass, freq, charge),
            AtomSpec::Response { polarizability, energy, charge, length } => match (charge, length) {
                (Some(_), Some(_)) => Err(Error::Config(
                    "give either `charge` or `length` for a response-defined oscillator, not both".into(),
                )),
                (_, Some(l)) => QdoParams::from_response_and_length(polarizability, energy, l),
                (q, None) => QdoParams::from_response(polarizability, energy, q.unwrap_or(1.0)),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct DimerSpec {
    pub a: AtomSpec,
    /// Defaults to a copy of `a`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<AtomSpec>,
}

impl DimerSpec {
    pub fn build(&self, separation: f64, eta: f64) -> Result<DimerSystem> {
        let a = self.a.build()?;
        let b = match &self.b {
            Some(spec) => spec.build()?,
            None => a,
        };
        DimerSystem::new(a, b, separation, eta)
    }
}

/// A one-dimensional sample grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub count: usize,
    #[serde(default)]
    pub spacing: Spacing,
}

impl Axis {
    pub fn validate(&self, name: &str) -> Result<()> {
        if self.count < 2 {
            return Err(Error::Config(format!("{name}: count must be ≥ 2, got {}", self.count)));
        }
        if !(self.min < self.max) || !self.min.is_finite() || !self.max.is_finite() {
            return Err(Error::Config(format!("{name}: need min < max, got {} and {}", self.min, self.max)));
        }
        if self.spacing == Spacing::Log && !(self.min > 0.0) {
            return Err(Error::Config(format!("{name}: log spacing needs min > 0")));
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    return self.max;
                }
                let t = i as f64 / last;
                match self.spacing {
                    Spacing::Linear => self.min + (self.max - self.min) * t,
                    Spacing::Log => (self.min.ln() + (self.max / self.min).ln() * t).exp(),
                }
            })
            .map(|v| v.clamp(self.min, self.max))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GridSpec {
    pub r_min_angstrom: f64,
    pub r_max_angstrom: f64,
    pub count: usize,
    pub spacing: Spacing,
    pub eta: Vec<f64>,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            r_min_angstrom: 5.0,
            r_max_angstrom: 100.0,
            count: 30,
            spacing: Spacing::Log,
            eta: vec![2e-2, 1e-2, 5e-3, 2e-3, 1e-3],
        }
    }
}

impl GridSpec {
    pub fn r_axis(&self) -> Axis {
        Axis { min: self.r_min_angstrom, max: self.r_max_angstrom, count: self.count, spacing: self.spacing }
    }

    /// Cutoffs in ascending order, duplicates removed.
    pub fn sorted_eta(&self) -> Vec<f64> {
        let mut eta = self.eta.clone();
        eta.sort_by(f64::total_cmp);
        eta.dedup();
        eta
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CrossoverSpec {
    pub omega: Axis,
    pub r_angstrom: Axis,
    pub eta: f64,
}

impl Default for CrossoverSpec {
    fn default() -> Self {
        Self {
            omega: Axis { min: 0.02, max: 0.2, count: 19, spacing: Spacing::Log },
            r_angstrom: Axis { min: 5.0, max: 500.0, count: 41, spacing: Spacing::Log },
            eta: 2e-2,
        }
    }
}

/// Single-geometry settings for `selfenergy` and `a2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PointSpec {
    pub separation_angstrom: f64,
    pub eta: f64,
}

impl Default for PointSpec {
    fn default() -> Self {
        Self { separation_angstrom: 10.0, eta: 1e-2 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct OutputSpec {
    pub format: OutputFormat,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
    pub dimer: DimerSpec,
    pub grid: GridSpec,
    pub quadrature: QuadratureSpec,
    pub crossover: CrossoverSpec,
    pub point: PointSpec,
    pub output: OutputSpec,
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let config: Self = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn validate(&self) -> Result<()> {
        self.grid.r_axis().validate("grid")?;
        if self.grid.eta.is_empty() {
            return Err(Error::Config("grid.eta must list at least one value".into()));
        }
        for &eta in
            self.grid.eta.iter().chain(std::iter::once(&self.crossover.eta)).chain(std::iter::once(&self.point.eta))
        {
            if !(eta > 0.0 && eta <= 1.0) {
                return Err(Error::Config(format!("eta must lie in (0, 1], got {eta}")));
            }
        }
        self.crossover.omega.validate("crossover.omega")?;
        self.crossover.r_angstrom.validate("crossover.r_angstrom")?;
        if !(self.point.separation_angstrom > 0.0) {
            return Err(Error::Config("point.separation_angstrom must be > 0".into()));
        }
        if self.threads == Some(0) {
            return Err(Error::Config("threads must be ≥ 1".into()));
        }
        self.quadrature.validate().map_err(|e| Error::Config(e.to_string()))?;
        self.dimer.build(1.0, 1.0).map_err(|e| Error::Config(e.to_string()))?;
        Ok(())
    }

    /// The dimer at `r_angstrom` and cutoff `eta`.
    pub fn dimer_at(&self, r_angstrom: f64, eta: f64) -> Result<DimerSystem> {
        self.dimer.build(angstrom_to_bohr(r_angstrom), eta)
    }
}
