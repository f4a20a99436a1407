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

//! Angular kernels from averaging the transverse photon projector over
//! directions.
//!
//! ```text
//! f⊥(x) = (x cos x + (x² − 1) sin x)/x³
//! f∥(x) = 2(sin x − x cos x)/x³
//! ```
//!
//! Both tend to 2/3 at the origin. Below [`SERIES_SWITCH`] the x⁻³ forms lose
//! digits to cancellation, so a 12-term Maclaurin series is used instead.

/// Arguments below this value use the power series.
pub const SERIES_SWITCH: f64 = 1.0;

const SERIES_TERMS: usize = 12;

/// Σₘ (−1)ᵐ x²ᵐ · 4 w(m)/(2m+3)!
fn series(x: f64, weight: impl Fn(f64) -> f64) -> f64 {
    let x2 = x * x;
    // p = (−1)ᵐ x²ᵐ/(2m+3)!
    let mut p = 1.0 / 6.0;
    let mut sum = 0.0;
    for m in 0..SERIES_TERMS {
        let mf = m as f64;
        sum += 4.0 * weight(mf) * p;
        p *= -x2 / ((2.0 * mf + 4.0) * (2.0 * mf + 5.0));
    }
    sum
}

pub fn f_perp(x: f64) -> f64 {
    let x = x.abs();
    if x < SERIES_SWITCH {
        series(x, |m| (m + 1.0) * (m + 1.0))
    } else {
        let (s, c) = x.sin_cos();
        (x * c + (x * x - 1.0) * s) / (x * x * x)
    }
}

pub fn f_par(x: f64) -> f64 {
    let x = x.abs();
    if x < SERIES_SWITCH {
        series(x, |m| m + 1.0)
    } else {
        let (s, c) = x.sin_cos();
        2.0 * (s - x * c) / (x * x * x)
    }
}

/// f⊥ − f∥, which equals −j₂(x). Evaluated directly so that the small-x
/// difference keeps full relative precision.
pub fn f_diff(x: f64) -> f64 {
    let x = x.abs();
    if x < SERIES_SWITCH {
        series(x, |m| m * (m + 1.0))
    } else {
        let (s, c) = x.sin_cos();
        (3.0 * x * c + (x * x - 3.0) * s) / (x * x * x)
    }
}

/// Maclaurin coefficient of x²ᵐ in f⊥ and f∥, used by the truncated expansion.
pub fn series_coefficients(m: usize) -> (f64, f64) {
    let mut fact = 1.0;
    for j in 2..=(2 * m + 3) {
        fact *= j as f64;
    }
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mf = m as f64;
    (sign * 4.0 * (mf + 1.0) * (mf + 1.0) / fact, sign * 4.0 * (mf + 1.0) / fact)
}
