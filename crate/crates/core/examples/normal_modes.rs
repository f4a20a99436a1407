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

// Normal modes of a coupled pair: frequencies, mode matrix and the
// Bogoliubov blocks.

use mbqed::mbd::{NormalModeData, MODE_LABELS};
use mbqed::prelude::*;
use nalgebra::Matrix6;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = QdoParams::argon();
    let b = a.with_freq(0.1)?;
    let d = DimerSystem::new(a, b, angstrom_to_bohr(4.0), 1e-2)?;
    let modes = NormalModeData::new(&d)?;
    println!("γ = {:.4e}", d.gamma());
    for (label, w) in MODE_LABELS.iter().zip(modes.freqs) {
        println!("  ω̃({label}) = {w:.8} Ha");
    }
    let (x, y) = (&modes.bogo_x, &modes.bogo_y);
    let symplectic = (x * x.transpose() - y * y.transpose() - Matrix6::identity()).amax();
    let n = modes.mode_matrix();
    println!("max |XXᵀ − YYᵀ − I| = {symplectic:.1e}");
    println!("max |𝒩𝒩ᵀ − I|     = {:.1e}", (n * n.transpose() - Matrix6::identity()).amax());
    let c = modes.correlation();
    println!("cross correlations 𝒞⁽¹²⁾: {:?}", c.cross().map(|v| format!("{v:.3e}")));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
