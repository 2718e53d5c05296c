use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};

/// Denominator guard of the objective normalisation.
pub const NORMALIZATION_GUARD: f64 = 1e-6;

/// Linearly decreasing reference-point offset:
/// `eps(t) = (eps_ini - eps_end) (T - t) / (T - 1) + eps_end`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RefPointSchedule {
    pub eps_ini: f64,
    pub eps_end: f64,
    pub max_generation: usize,
}

impl RefPointSchedule {
    pub fn new(eps_ini: f64, eps_end: f64, max_generation: usize) -> Result<Self> {
        if max_generation < 2 {
            return Err(Error::InvalidConfig(format!(
                "schedule needs T >= 2, got {max_generation}"
            )));
        }
        if !eps_ini.is_finite() || !eps_end.is_finite() {
            return Err(Error::InvalidConfig("epsilon settings must be finite".into()));
        }
        Ok(Self {
            eps_ini,
            eps_end,
            max_generation,
        })
    }

    /// Offset at generation `t` (1-based).
    pub fn epsilon_at(&self, t: usize) -> Result<f64> {
        let big_t = self.max_generation;
        if t < 1 || t > big_t {
            return Err(Error::GenerationOutOfRange { t, max: big_t });
        }
        if t == 1 {
            return Ok(self.eps_ini);
        }
        if t == big_t {
            return Ok(self.eps_end);
        }
        let frac = (big_t - t) as f64 / (big_t - 1) as f64;
        Ok((self.eps_ini - self.eps_end) * frac + self.eps_end)
    }

    /// Reference point in normalised space, where the examined minimum sits
    /// at the origin: every coordinate is `-eps(t)`.
    pub fn reference_point(&self, t: usize, objectives: usize) -> Result<Vec<f64>> {
        let eps = self.epsilon_at(t)?;
        Ok(vec![0.0 - eps; objectives])
    }
}

/// Running ideal estimate plus the population nadir.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizationState {
    /// Minimum of each objective over every solution examined so far.
    pub z_min: Vec<f64>,
    /// Maximum of each objective over the current population.
    pub z_nad: Vec<f64>,
}

impl NormalizationState {
    pub fn new(objectives: usize) -> Self {
        Self {
            z_min: vec![f64::INFINITY; objectives],
            z_nad: vec![f64::NEG_INFINITY; objectives],
        }
    }

    pub fn observe(&mut self, f: &[f64]) {
        for (z, v) in self.z_min.iter_mut().zip(f) {
            if *v < *z {
                *z = *v;
            }
        }
    }

    pub fn refresh_nadir<'a>(&mut self, population: impl IntoIterator<Item = &'a [f64]>) {
        self.z_nad.iter_mut().for_each(|z| *z = f64::NEG_INFINITY);
        for f in population {
            for (z, v) in self.z_nad.iter_mut().zip(f) {
                if *v > *z {
                    *z = *v;
                }
            }
        }
    }

    /// `(f_i - z_min_i) / (z_nad_i - z_min_i + 1e-6)`.
    pub fn normalize(&self, f: &[f64]) -> Result<Vec<f64>> {
        check_len(self.z_min.len(), f.len())?;
        if self.z_min.iter().any(|v| !v.is_finite()) || self.z_nad.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("normalization state not yet populated".into()));
        }
        let mut out = Vec::with_capacity(f.len());
        self.normalize_into(f, &mut out);
        Ok(out)
    }

    pub(crate) fn normalize_into(&self, f: &[f64], out: &mut Vec<f64>) {
        out.clear();
        out.extend(
            f.iter()
                .zip(&self.z_min)
                .zip(&self.z_nad)
                .map(|((f, lo), hi)| (f - lo) / (hi - lo + NORMALIZATION_GUARD)),
        );
    }
}
