//! Simulated binary crossover and polynomial mutation.
//!
//! Random draws, in order:
//! * SBX: one draw against the crossover probability, then three per
//!   variable (spread `u`, sign, per-variable 50% gate), then one draw
//!   choosing which child survives.
//! * Mutation: one draw per variable against the mutation rate, plus the
//!   perturbation draw when the variable mutates.

use rand::Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SbxParams {
    pub probability: f64,
    pub distribution_index: f64,
}

impl Default for SbxParams {
    fn default() -> Self {
        Self {
            probability: 1.0,
            distribution_index: 20.0,
        }
    }
}

/// `probability` is the per-variable rate; `None` means `1 / D`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MutationParams {
    #[serde(default)]
    pub probability: Option<f64>,
    pub distribution_index: f64,
}

impl Default for MutationParams {
    fn default() -> Self {
        Self {
            probability: None,
            distribution_index: 20.0,
        }
    }
}

impl MutationParams {
    pub fn rate(&self, dimension: usize) -> f64 {
        self.probability.unwrap_or(1.0 / dimension as f64)
    }
}

/// One SBX child of `a` and `b`, clamped into the bounds.
pub(crate) fn sbx_child<R: Rng + ?Sized>(
    rng: &mut R,
    params: &SbxParams,
    a: &[f64],
    b: &[f64],
    lower: &[f64],
    upper: &[f64],
) -> Vec<f64> {
    let cross = rng.random::<f64>() < params.probability;
    let eta = params.distribution_index;
    let mut c1 = a.to_vec();
    let mut c2 = b.to_vec();
    for i in 0..a.len() {
        let u: f64 = rng.random();
        let flip = rng.random::<bool>();
        let gate = rng.random::<f64>() < 0.5;
        if !cross || !gate {
            continue;
        }
        let mut beta = if u <= 0.5 {
            (2.0 * u).powf(1.0 / (eta + 1.0))
        } else {
            (2.0 - 2.0 * u).powf(-1.0 / (eta + 1.0))
        };
        if flip {
            beta = -beta;
        }
        let mid = 0.5 * (a[i] + b[i]);
        let half = 0.5 * (a[i] - b[i]);
        c1[i] = (mid + beta * half).clamp(lower[i], upper[i]);
        c2[i] = (mid - beta * half).clamp(lower[i], upper[i]);
    }
    if rng.random::<bool>() {
        c1
    } else {
        c2
    }
}

/// Bounded polynomial mutation in place.
pub(crate) fn polynomial_mutation<R: Rng + ?Sized>(
    rng: &mut R,
    rate: f64,
    eta: f64,
    x: &mut [f64],
    lower: &[f64],
    upper: &[f64],
) {
    let pow = 1.0 / (eta + 1.0);
    for i in 0..x.len() {
        if rng.random::<f64>() >= rate {
            continue;
        }
        let mu: f64 = rng.random();
        let span = upper[i] - lower[i];
        if span <= 0.0 {
            continue;
        }
        let v = x[i].clamp(lower[i], upper[i]);
        let delta = if mu <= 0.5 {
            let d1 = (v - lower[i]) / span;
            (2.0 * mu + (1.0 - 2.0 * mu) * (1.0 - d1).powf(eta + 1.0)).powf(pow) - 1.0
        } else {
            let d2 = (upper[i] - v) / span;
            1.0 - (2.0 * (1.0 - mu) + 2.0 * (mu - 0.5) * (1.0 - d2).powf(eta + 1.0)).powf(pow)
        };
        x[i] = (v + delta * span).clamp(lower[i], upper[i]);
    }
}
