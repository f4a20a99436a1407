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

//! # Normal modes of the dipole-coupled dimer
//!
//! In mass-weighted coordinates ξ = √m r the dimer Hamiltonian separates into
//! three independent 2×2 problems, one per Cartesian axis, with potential block
//!
//! ```text
//! K_i = | ω₁²  γᵢ  |     γ_x = γ_y = q₁q₂/(√(m₁m₂)R³),  γ_z = −2γ_x
//!       | γᵢ   ω₂² |
//! ```
//!
//! Each block gives a pair of collective ("plasmon") modes with frequencies
//! ω̃²_{i±} = 2λ_{i±} and an orthonormal 2×2 mode matrix 𝒩. The Bogoliubov
//! blocks X, Y map atomic ladder operators onto normal-mode ones, and
//! ℳ = Xᵀ − Yᵀ, 𝒮 = Xᵀ + Yᵀ carry atomic positions and momenta respectively.
//!
//! Indexing: atomic coordinates are ordered (x₁, x₂, y₁, y₂, z₁, z₂) and
//! modes (x+, x−, y+, y−, z+, z−).

use crate::error::{Error, Result};
use crate::qdo::{Atom, DimerSystem};
use nalgebra::SMatrix;

pub type Matrix6 = SMatrix<f64, 6, 6>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// '+' is always the higher root of the axis block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub const ALL: [Branch; 2] = [Branch::Plus, Branch::Minus];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Position of mode (axis, branch) in the six-mode ordering.
pub fn mode_index(axis: Axis, branch: Branch) -> usize {
    2 * axis.index() + branch.index()
}

pub const MODE_LABELS: [&str; 6] = ["x+", "x-", "y+", "y-", "z+", "z-"];

/// Solution of one axis block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisModes {
    /// λ_{i,±}: half the eigenvalues of the potential block
    pub lambda: [f64; 2],
    /// ω̃_{i,±} = √(2λ)
    pub freqs: [f64; 2],
    /// Rows are modes (+, −), columns atoms (1, 2).
    pub modes: [[f64; 2]; 2],
}

/// Diagonalise [[ω₁², g], [g, ω₂²]].
///
/// Sign convention: every mode row has its first non-zero entry positive.
/// At g = 0 with ω₁ = ω₂ the identity is returned.
pub fn solve_axis(w1_sq: f64, w2_sq: f64, g: f64) -> Result<AxisModes> {
    let diff = w1_sq - w2_sq;
    let root = (4.0 * g * g + diff * diff).sqrt();
    let lambda_plus = 0.25 * (w1_sq + w2_sq + root);
    // λ₊λ₋ = (ω₁²ω₂² − g²)/4
    let lambda_minus = 0.25 * (w1_sq * w2_sq - g * g) / lambda_plus;
    if !(lambda_minus > 0.0) {
        return Err(Error::InvalidRegime { two_gamma: 2.0 * g.abs() / (w1_sq * w2_sq).sqrt() });
    }

    let theta = 0.5 * g.atan2(0.5 * diff);
    let (s, c) = theta.sin_cos();
    let orient = |v: [f64; 2]| {
        let lead = if v[0] != 0.0 { v[0] } else { v[1] };
        if lead < 0.0 {
            [-v[0], -v[1]]
        } else {
            v
        }
    };
    let plus = orient([c, s]);
    let minus = orient([-s, c]);

    Ok(AxisModes {
        lambda: [lambda_plus, lambda_minus],
        freqs: [(2.0 * lambda_plus).sqrt(), (2.0 * lambda_minus).sqrt()],
        modes: [plus, minus],
    })
}

/// Everything the radiative calculation needs from the diagonalisation.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalModeData {
    pub atom_freqs: [f64; 2],
    /// Per-axis couplings γᵢ in frequency² units.
    pub couplings: [f64; 3],
    pub axes: [AxisModes; 3],
    /// ω̃ in mode order (x+, x−, y+, y−, z+, z−)
    pub freqs: [f64; 6],
    pub bogo_x: Matrix6,
    pub bogo_y: Matrix6,
}

impl NormalModeData {
    pub fn new(d: &DimerSystem) -> Result<Self> {
        d.check_regime()?;
        let g = d.coupling_frequency_sq();
        let couplings = [g, g, -2.0 * g];
        let (w1, w2) = (d.a.freq, d.b.freq);
        let mut axes = [solve_axis(w1 * w1, w2 * w2, 0.0)?; 3];
        for (axis, &gi) in axes.iter_mut().zip(&couplings) {
            *axis = solve_axis(w1 * w1, w2 * w2, gi)?;
        }
        let mut freqs = [0.0; 6];
        for i in 0..3 {
            freqs[2 * i] = axes[i].freqs[0];
            freqs[2 * i + 1] = axes[i].freqs[1];
        }

        // X = ½[Ω̃^{1/2} 𝒩 Ω^{-1/2} + Ω̃^{-1/2} 𝒩 Ω^{1/2}], Y with a minus sign.
        let atom_freqs = [w1, w2];
        let mut bogo_x = Matrix6::zeros();
        let mut bogo_y = Matrix6::zeros();
        for i in 0..3 {
            for alpha in 0..2 {
                let wt = freqs[2 * i + alpha];
                for a in 0..2 {
                    let n = axes[i].modes[alpha][a];
                    let up = (wt / atom_freqs[a]).sqrt() * n;
                    let down = (atom_freqs[a] / wt).sqrt() * n;
                    bogo_x[(2 * i + alpha, 2 * i + a)] = 0.5 * (up + down);
                    bogo_y[(2 * i + alpha, 2 * i + a)] = 0.5 * (up - down);
                }
            }
        }

        Ok(Self { atom_freqs, couplings, axes, freqs, bogo_x, bogo_y })
    }

    /// Full 6×6 orthonormal mode matrix 𝒩 (rows modes, columns atomic coordinates).
    pub fn mode_matrix(&self) -> Matrix6 {
        let mut n = Matrix6::zeros();
        for i in 0..3 {
            for alpha in 0..2 {
                for a in 0..2 {
                    n[(2 * i + alpha, 2 * i + a)] = self.axes[i].modes[alpha][a];
                }
            }
        }
        n
    }

    /// ℳ = Xᵀ − Yᵀ, rows atomic coordinates, columns modes.
    pub fn position_block(&self) -> Matrix6 {
        (self.bogo_x - self.bogo_y).transpose()
    }

    /// 𝒮 = Xᵀ + Yᵀ, rows atomic coordinates, columns modes.
    pub fn momentum_block(&self) -> Matrix6 {
        (self.bogo_x + self.bogo_y).transpose()
    }

    /// Correlation tensor entering the p·A coupling.
    pub fn correlation(&self) -> CorrelationTensor {
        let s = self.momentum_block();
        let mut c = [[[0.0; 6]; 2]; 2];
        for i in 0..3 {
            for mode in [2 * i, 2 * i + 1] {
                for a in 0..2 {
                    for b in 0..2 {
                        c[a][b][mode] = s[(2 * i + a, mode)] * s[(2 * i + b, mode)];
                    }
                }
            }
        }
        CorrelationTensor { values: c, atom_freqs: self.atom_freqs, mode_freqs: self.freqs }
    }
}

/// 𝒞^{(ab)}_{iα} = 𝒮^{(a)}_{iα} 𝒮^{(b)}_{iα}: how strongly mode (i, α) carries the
/// momenta of atoms a and b together.
///
/// The momentum block is the one that appears in the p·A matrix elements;
/// with it the homoatomic cross terms are ±½√(1±γ) (transverse) and
/// ∓½√(1±2γ) (longitudinal).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationTensor {
    values: [[[f64; 6]; 2]; 2],
    atom_freqs: [f64; 2],
    mode_freqs: [f64; 6],
}

impl CorrelationTensor {
    pub fn get(&self, a: Atom, b: Atom, mode: usize) -> f64 {
        self.values[a.index()][b.index()][mode]
    }

    /// Cross term 𝒞^{(12)} for every mode.
    pub fn cross(&self) -> [f64; 6] {
        self.values[0][1]
    }

    /// Orthonormal weight 𝒩²_{αa} of atom `a` in mode `mode`, i.e.
    /// 𝒞^{(aa)} ω_a/ω̃.
    pub fn mode_weight(&self, a: Atom, mode: usize) -> f64 {
        self.values[a.index()][a.index()][mode] * self.atom_freqs[a.index()] / self.mode_freqs[mode]
    }
}

/// The six normal-mode frequencies in mode order.
pub fn eigenfrequencies(d: &DimerSystem) -> Result<[f64; 6]> {
    Ok(NormalModeData::new(d)?.freqs)
}
