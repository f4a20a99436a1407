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

// Ratio of the leading R⁻¹ term to the London energy over oscillator
// frequency and distance.

use mbqed::prelude::*;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let base = DimerSystem::argon(angstrom_to_bohr(10.0), 2e-2)?;
    let rs = [5.0, 20.0, 50.0, 200.0, 500.0];
    print!("{:>8}", "ω \\ R");
    for r in rs {
        print!("{r:>9.0}Å");
    }
    println!();
    for omega in [0.02, 0.05, 0.08, 0.12, 0.2] {
        print!("{omega:>8.2}");
        for r in rs {
            match crossover_ratio(&base, omega, angstrom_to_bohr(r)) {
                Ok(v) => print!("{v:>10.2}"),
                Err(_) => print!("{:>10}", "-"),
            }
        }
        println!();
    }
    println!("C6(Ar, Ar) = {:.2} Ha bohr⁶", london_c6(&base.a, &base.b));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
