//! Inverted generational distance and reference-set construction.

use crate::archive::non_dominated_indices;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReferenceProvenance {
    /// Read from a sampled front file.
    FrontFile,
    /// Non-dominated union of obtained solution sets.
    DynamicUnion,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceSet {
    points: Vec<Vec<f64>>,
    provenance: ReferenceProvenance,
}

impl ReferenceSet {
    pub fn from_front(points: Vec<Vec<f64>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Empty("reference set"));
        }
        Ok(Self {
            points,
            provenance: ReferenceProvenance::FrontFile,
        })
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn provenance(&self) -> ReferenceProvenance {
        self.provenance
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Mean over reference points of the Euclidean distance to the nearest
/// member of `result_set`. Smaller is better.
pub fn igd<P: AsRef<[f64]>>(result_set: &[P], reference: &ReferenceSet) -> Result<f64> {
    igd_points(result_set, &reference.points)
}

pub fn igd_points<P: AsRef<[f64]>, Q: AsRef<[f64]>>(result_set: &[P], reference: &[Q]) -> Result<f64> {
    if result_set.is_empty() {
        return Err(Error::Empty("result set"));
    }
    if reference.is_empty() {
        return Err(Error::Empty("reference set"));
    }
    let m = reference[0].as_ref().len();
    if let Some(bad) = result_set.iter().map(|p| p.as_ref().len()).find(|&l| l != m) {
        return Err(Error::DimensionMismatch {
            expected: m,
            actual: bad,
        });
    }
    let total: f64 = reference
        .iter()
        .map(|r| {
            let r = r.as_ref();
            result_set
                .iter()
                .map(|a| {
                    a.as_ref()
                        .iter()
                        .zip(r)
                        .map(|(x, y)| (x - y) * (x - y))
                        .sum::<f64>()
                })
                .fold(f64::INFINITY, f64::min)
                .sqrt()
        })
        .sum();
    Ok(total / reference.len() as f64)
}

/// Union of every objective vector across `sets`, with dominated and
/// duplicate vectors removed.
pub fn build_dynamic_reference<S: AsRef<[Vec<f64>]>>(sets: &[S]) -> Result<ReferenceSet> {
    let all: Vec<Vec<f64>> = sets.iter().flat_map(|s| s.as_ref().iter().cloned()).collect();
    if all.is_empty() {
        return Err(Error::Empty("solution sets"));
    }
    let keep = non_dominated_indices(&all);
    Ok(ReferenceSet {
        points: keep.into_iter().map(|i| all[i].clone()).collect(),
        provenance: ReferenceProvenance::DynamicUnion,
    })
}
