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

// Distance sweep of the radiative interaction for an Argon pair, with a
// power-law fit per cutoff.
//
// ```bash
// cargo run --example argon_sweep
// ```

use mbqed::prelude::*;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = QuadratureSpec::default();
    for eta in [1e-3, 1e-2, 2e-2] {
        let mut points = Vec::new();
        for i in 0..30 {
            let r_ang = 5.0 * 20f64.powf(i as f64 / 29.0);
            let d = DimerSystem::argon(angstrom_to_bohr(r_ang), eta)?;
            let v = delta_v_int(&d, &spec)?;
            points.push(SweepPoint { r: d.separation, value: v.value, error: v.abs_error_estimate });
        }
        let fit = power_law_fit(&points)?;
        println!(
            "eta = {eta:<6e} ΔV(5 Å) = {:.3e} Ha  ΔV(100 Å) = {:.3e} Ha  exponent {:.3}",
            points[0].value, points[29].value, fit.exponent
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
