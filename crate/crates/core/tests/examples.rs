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

macro_rules! example {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $module() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(argon_sweep, "argon_sweep.rs");
example!(series_vs_quadrature, "series_vs_quadrature.rs");
example!(normal_modes, "normal_modes.rs");
example!(self_energy, "self_energy.rs");
example!(crossover_map, "crossover_map.rs");
example!(effective_charge_force, "effective_charge_force.rs");
example!(oracle_fixtures, "oracle_fixtures.rs");
