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

// Brute-force reference checks, and regeneration of the fixture file into a
// directory of your choice.
//
// ```bash
// cargo run --release --example oracle_fixtures -- /tmp/fixtures
// ```

use mbqed::oracle::{cross_checks, generate_fixtures, write_fixtures};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for report in cross_checks(100_000, 20)? {
        println!("{report}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()?;
    if let Some(dir) = std::env::args().nth(1) {
        let path = write_fixtures(std::path::Path::new(&dir), &generate_fixtures()?)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
