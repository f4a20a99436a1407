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

// Closed-form R⁻¹/R⁻⁷/R⁻⁹ expansion against the full quadrature.

use mbqed::prelude::*;
use mbqed::series::truncation_error;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = QuadratureSpec::default();
    let d = DimerSystem::argon(angstrom_to_bohr(10.0), 2e-2)?;
    let c = coefficients(&d)?;
    println!("c1 = {:.6e}  c7 = {:.6e}  c9 = {:.6e}  (bohr powers)", c.c1, c.c7, c.c9);
    println!("{:>8} {:>14} {:>14} {:>10} {:>10}", "R [Å]", "quadrature", "series", "rel gap", "bound");
    for r_ang in [5.0, 10.0, 20.0, 50.0, 100.0] {
        let d = d.with_separation(angstrom_to_bohr(r_ang))?;
        let exact = delta_v_int(&d, &spec)?.value;
        let approx = delta_v_approx(&d)?;
        let bound = truncation_error(&d, 3, 3, 512)?;
        println!(
            "{r_ang:>8.1} {exact:>14.6e} {approx:>14.6e} {:>10.2e} {bound:>10.2e}",
            (approx - exact).abs() / exact
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
