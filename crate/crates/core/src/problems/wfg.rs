//! Transformation and shape functions of the WFG toolkit.
//!
//! Every function here works on the normalized `[0, 1]` domain. Results are
//! clamped back into `[0, 1]` because the closed forms drift a few ulps
//! outside it.

use std::f64::consts::{FRAC_PI_2, PI};

#[inline]
fn clamp01(v: f64) -> f64 {
    v.clamp(0.0, 1.0)
}

pub(crate) fn b_poly(y: f64, alpha: f64) -> f64 {
    clamp01(y.powf(alpha))
}

pub(crate) fn b_flat(y: f64, a: f64, b: f64, c: f64) -> f64 {
    let lower = (y - b).floor().min(0.0) * a * (b - y) / b;
    let upper = (c - y).floor().min(0.0) * (1.0 - a) * (y - c) / (1.0 - c);
    clamp01(a + lower - upper)
}

pub(crate) fn s_linear(y: f64, a: f64) -> f64 {
    clamp01((y - a).abs() / ((a - y).floor() + a).abs())
}

pub(crate) fn s_multi(y: f64, a: f64, b: f64, c: f64) -> f64 {
    let tmp1 = (y - c).abs() / (2.0 * ((c - y).floor() + c));
    let tmp2 = (4.0 * a + 2.0) * PI * (0.5 - tmp1);
    clamp01((1.0 + tmp2.cos() + 4.0 * b * tmp1 * tmp1) / (b + 2.0))
}

pub(crate) fn r_sum(y: &[f64], w: &[f64]) -> f64 {
    let num: f64 = y.iter().zip(w).map(|(y, w)| y * w).sum();
    let den: f64 = w.iter().sum();
    clamp01(num / den)
}

pub(crate) fn r_nonsep(y: &[f64], a: usize) -> f64 {
    let n = y.len();
    let mut num = 0.0;
    for j in 0..n {
        num += y[j];
        for k in 0..a.saturating_sub(1) {
            num += (y[j] - y[(j + k + 1) % n]).abs();
        }
    }
    let half = a.div_ceil(2) as f64;
    let af = a as f64;
    let den = (n as f64 / af) * half * (1.0 + 2.0 * af - 2.0 * half);
    clamp01(num / den)
}

/// `m` is 1-based; `x` holds the M-1 position values.
pub(crate) fn linear(x: &[f64], m: usize) -> f64 {
    let big_m = x.len() + 1;
    let mut r: f64 = x[..big_m - m].iter().product();
    if m > 1 {
        r *= 1.0 - x[big_m - m];
    }
    r
}

pub(crate) fn convex(x: &[f64], m: usize) -> f64 {
    let big_m = x.len() + 1;
    let mut r: f64 = x[..big_m - m]
        .iter()
        .map(|v| 1.0 - (v * FRAC_PI_2).cos())
        .product();
    if m > 1 {
        r *= 1.0 - (x[big_m - m] * FRAC_PI_2).sin();
    }
    r
}

pub(crate) fn concave(x: &[f64], m: usize) -> f64 {
    let big_m = x.len() + 1;
    let mut r: f64 = x[..big_m - m]
        .iter()
        .map(|v| (v * FRAC_PI_2).sin())
        .product();
    if m > 1 {
        r *= (x[big_m - m] * FRAC_PI_2).cos();
    }
    r
}

pub(crate) fn mixed(x: &[f64], a: f64, alpha: f64) -> f64 {
    let t = 2.0 * a * PI;
    (1.0 - x[0] - (t * x[0] + FRAC_PI_2).cos() / t).powf(alpha)
}

pub(crate) fn disc(x: &[f64], a: f64, alpha: f64, beta: f64) -> f64 {
    let c = (a * x[0].powf(beta) * PI).cos();
    1.0 - x[0].powf(alpha) * c * c
}
