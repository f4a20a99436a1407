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

// Effective charge of an oscillator and order-of-magnitude forces.

use mbqed::analysis::dipole_from_polarizability;
use mbqed::prelude::*;
use mbqed::units::{ev_to_hartree, DEBYE_AU};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ar = QdoParams::argon();
    println!("q_eff(Ar) = {:.4e} e", effective_charge(&ar));
    let mu = dipole_from_polarizability(ar.polarizability(), ar.energy());
    for nm in [10.0, 100.0] {
        let r = angstrom_to_bohr(10.0 * nm);
        println!("Ar-Ar at {nm:>5} nm: F = {:.2e} N", force_estimate(mu, mu, ar.energy(), ar.energy(), r));
    }
    let (mu_big, e_big) = (75.0 * DEBYE_AU, ev_to_hartree(1.5));
    for nm in [50.0, 200.0] {
        let r = angstrom_to_bohr(10.0 * nm);
        println!("75 D, 1.5 eV at {nm:>5} nm: F = {:.2e} N", force_estimate(mu_big, mu_big, e_big, e_big, r));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
