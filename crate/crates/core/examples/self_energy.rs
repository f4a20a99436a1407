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

// Distance-independent self-energy next to the two-photon A² shift and the
// radiative interaction.

use mbqed::prelude::*;
use mbqed::qdo::Atom;
use mbqed::units::convert_energy;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = QuadratureSpec::default();
    for r_ang in [10.0, 100.0, 1000.0] {
        let d = DimerSystem::argon(angstrom_to_bohr(r_ang), 1e-2)?;
        let u = delta_u_self(&d, Atom::First)?.value;
        let a2 = delta_e_a2(&d).value;
        let v = delta_v_int(&d, &spec)?.value;
        println!(
            "R = {r_ang:>6} Å  ΔU = {u:.4e} Ha ({:.3e} eV)  ΔE(A²) = {a2:.3e} Ha  ΔV = {v:.3e} Ha",
            convert_energy(u, UnitSystem::Atomic, UnitSystem::Natural)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
