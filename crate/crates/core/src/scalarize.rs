//! Simplex weight vectors and scalarizing functions.
//!
//! All four scalarizers are minimised. `z` is the reference point; the
//! weighted sum ignores it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};

/// Replacement for a zero weight in the modified Tchebycheff denominator.
pub const MTCH_WEIGHT_FLOOR: f64 = 1e-6;

pub const DEFAULT_PBI_THETA: f64 = 5.0;

/// Every vector of non-negative multiples of `1/divisions` summing to one,
/// in lexicographic order. There are `C(divisions + M - 1, M - 1)` of them.
pub fn das_dennis_weights(objectives: usize, divisions: usize) -> Result<Vec<Vec<f64>>> {
    if objectives < 2 || divisions < 1 {
        return Err(Error::InvalidInput(format!(
            "need M >= 2 and H >= 1, got M = {objectives}, H = {divisions}"
        )));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(objectives);
    compositions(objectives, divisions, divisions, &mut current, &mut out);
    Ok(out)
}

fn compositions(m: usize, h: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<f64>>) {
    if cur.len() == m - 1 {
        cur.push(left);
        out.push(cur.iter().map(|&c| c as f64 / h as f64).collect());
        cur.pop();
        return;
    }
    for c in 0..=left {
        cur.push(c);
        compositions(m, h, left - c, cur, out);
        cur.pop();
    }
}

/// Number of Das-Dennis vectors for `(objectives, divisions)`.
pub fn das_dennis_count(objectives: usize, divisions: usize) -> usize {
    // C(h + m - 1, m - 1) computed incrementally; exact for the sizes used here.
    let (n, r) = (divisions + objectives - 1, objectives - 1);
    (0..r).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Smallest division count whose Das-Dennis set has exactly `size` vectors.
pub fn divisions_for_size(objectives: usize, size: usize) -> Option<usize> {
    (1..=size.max(1))
        .map(|h| (h, das_dennis_count(objectives, h)))
        .take_while(|&(_, c)| c <= size)
        .find(|&(_, c)| c == size)
        .map(|(h, _)| h)
}

/// Weight vectors plus, for each, the indices of its nearest neighbours.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSet {
    vectors: Vec<Vec<f64>>,
    neighborhoods: Vec<Vec<usize>>,
}

impl WeightSet {
    /// Neighbourhoods hold the `neighborhood_size` closest vectors by
    /// Euclidean distance, self included; equal distances go to the lower
    /// index.
    pub fn new(vectors: Vec<Vec<f64>>, neighborhood_size: usize) -> Result<Self> {
        let n = vectors.len();
        if neighborhood_size == 0 || neighborhood_size > n {
            return Err(Error::InvalidConfig(format!(
                "neighborhood size {neighborhood_size} must lie in 1..={n}"
            )));
        }
        let neighborhoods = (0..n)
            .map(|i| {
                let mut by_dist: Vec<(f64, usize)> = (0..n)
                    .map(|j| (euclidean(&vectors[i], &vectors[j]), j))
                    .collect();
                by_dist.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
                by_dist
                    .into_iter()
                    .take(neighborhood_size)
                    .map(|(_, j)| j)
                    .collect()
            })
            .collect();
        Ok(Self {
            vectors,
            neighborhoods,
        })
    }

    pub fn das_dennis(objectives: usize, divisions: usize, neighborhood_size: usize) -> Result<Self> {
        Self::new(das_dennis_weights(objectives, divisions)?, neighborhood_size)
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vector(&self, i: usize) -> &[f64] {
        &self.vectors[i]
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    pub fn neighborhood(&self, i: usize) -> &[usize] {
        &self.neighborhoods[i]
    }
}

pub(crate) fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScalarizerKind {
    #[serde(rename = "WS")]
    WeightedSum,
    #[serde(rename = "TCH")]
    Tchebycheff,
    #[serde(rename = "MTCH")]
    ModifiedTchebycheff,
    #[serde(rename = "PBI")]
    Pbi,
}

impl ScalarizerKind {
    pub const ALL: [ScalarizerKind; 4] = [
        ScalarizerKind::WeightedSum,
        ScalarizerKind::Tchebycheff,
        ScalarizerKind::ModifiedTchebycheff,
        ScalarizerKind::Pbi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScalarizerKind::WeightedSum => "WS",
            ScalarizerKind::Tchebycheff => "TCH",
            ScalarizerKind::ModifiedTchebycheff => "MTCH",
            ScalarizerKind::Pbi => "PBI",
        }
    }
}

impl fmt::Display for ScalarizerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScalarizerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ScalarizerKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInput(format!("unknown scalarizer '{s}'")))
    }
}

fn default_theta() -> f64 {
    DEFAULT_PBI_THETA
}

/// Scalarizer choice; `theta` only matters for PBI.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScalarizerSpec {
    pub kind: ScalarizerKind,
    #[serde(default = "default_theta")]
    pub theta: f64,
}

impl ScalarizerSpec {
    pub fn new(kind: ScalarizerKind) -> Self {
        Self {
            kind,
            theta: DEFAULT_PBI_THETA,
        }
    }

    pub fn pbi(theta: f64) -> Self {
        Self {
            kind: ScalarizerKind::Pbi,
            theta,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.theta.is_nan() || self.theta < 0.0 {
            return Err(Error::InvalidConfig(format!("theta must be >= 0, got {}", self.theta)));
        }
        Ok(())
    }
}

/// Value of the scalarizing function `spec` at objective vector `f` for
/// weight `w` and reference point `z`.
pub fn scalarize(spec: &ScalarizerSpec, f: &[f64], w: &[f64], z: &[f64]) -> Result<f64> {
    check_len(f.len(), w.len())?;
    check_len(f.len(), z.len())?;
    Ok(match spec.kind {
        ScalarizerKind::WeightedSum => f.iter().zip(w).map(|(f, w)| f * w).sum(),
        ScalarizerKind::Tchebycheff => f
            .iter()
            .zip(w)
            .zip(z)
            .map(|((f, w), z)| w * (z - f).abs())
            .fold(f64::NEG_INFINITY, f64::max),
        ScalarizerKind::ModifiedTchebycheff => f
            .iter()
            .zip(w)
            .zip(z)
            .map(|((f, w), z)| (z - f).abs() / w.max(MTCH_WEIGHT_FLOOR))
            .fold(f64::NEG_INFINITY, f64::max),
        ScalarizerKind::Pbi => {
            let (d1, d2) = pbi_distances(f, w, z)?;
            d1 + spec.theta * d2
        }
    })
}

/// `(d1, d2)`: distance along the weight ray (absolute value) and distance
/// from it.
pub fn pbi_distances(f: &[f64], w: &[f64], z: &[f64]) -> Result<(f64, f64)> {
    let norm_sq = w.iter().map(|v| v * v).sum::<f64>();
    let norm = norm_sq.sqrt();
    if norm == 0.0 || !norm.is_finite() {
        return Err(Error::InvalidInput("PBI needs a weight vector with non-zero norm".into()));
    }
    let dot = f.iter().zip(w).zip(z).map(|((f, w), z)| (f - z) * w).sum::<f64>().abs();
    let d1 = dot / norm;
    // d1 * w / |w| folded into one coefficient keeps on-ray points at exactly zero.
    let along = dot / norm_sq;
    let d2 = f
        .iter()
        .zip(w)
        .zip(z)
        .map(|((f, w), z)| {
            let r = f - z - along * w;
            r * r
        })
        .sum::<f64>()
        .sqrt();
    Ok((d1, d2))
}
