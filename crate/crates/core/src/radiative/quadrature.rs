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

//! Globally adaptive 7-point Gauss / 15-point Kronrod quadrature.
//!
//! Panels live in a max-heap keyed on their error estimate; the worst panel is
//! bisected until the summed estimate drops below the tolerance. A width cap
//! on the initial partition keeps oscillatory integrands resolved from the
//! first pass.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
/// Gauss weights for the odd Kronrod nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] =
    [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

/// Outcome of an integration. `converged` is false when the subdivision
/// budget ran out; the value is then the best estimate available.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub abs_error: f64,
    pub n_evals: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
    pub max_subdivisions: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error).then_with(|| other.a.total_cmp(&self.a))
    }
}

/// One G7K15 pair on [a, b]: (Kronrod value, |K − G|).
pub fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Integrate `f` over [a, b], with initial panels no wider than `max_width`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, max_width: f64, tol: Tolerance) -> Integral {
    let span = b - a;
    let n0 = if max_width.is_finite() && max_width > 0.0 { ((span / max_width).ceil() as usize).max(1) } else { 1 };
    let mut heap = BinaryHeap::with_capacity(n0 + tol.max_subdivisions);
    let (mut value, mut error) = (0.0, 0.0);
    for i in 0..n0 {
        let lo = a + span * i as f64 / n0 as f64;
        let hi = if i + 1 == n0 { b } else { a + span * (i + 1) as f64 / n0 as f64 };
        let (v, e) = gauss_kronrod(&f, lo, hi);
        value += v;
        error += e;
        heap.push(Panel { a: lo, b: hi, value: v, error: e });
    }
    let mut n_evals = 15 * n0;
    let mut splits = 0;
    let target = |v: f64| tol.abs.max(tol.rel * v.abs());

    while error > target(value) {
        if splits >= tol.max_subdivisions {
            return Integral { value, abs_error: error, n_evals, converged: false };
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // panel can no longer be split in floating point
            heap.push(worst);
            return Integral { value, abs_error: error, n_evals, converged: false };
        }
        let (v1, e1) = gauss_kronrod(&f, worst.a, mid);
        let (v2, e2) = gauss_kronrod(&f, mid, worst.b);
        n_evals += 30;
        splits += 1;
        heap.push(Panel { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Panel { a: mid, b: worst.b, value: v2, error: e2 });
        // re-sum to avoid drift from repeated add/subtract
        let mut panels: Vec<&Panel> = heap.iter().collect();
        panels.sort_by(|p, q| p.a.total_cmp(&q.a));
        value = panels.iter().map(|p| p.value).sum();
        error = panels.iter().map(|p| p.error).sum();
    }
    Integral { value, abs_error: error, n_evals, converged: true }
}
