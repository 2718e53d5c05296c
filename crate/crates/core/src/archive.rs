//! Pareto dominance and the unbounded external archive.

use std::cmp::Ordering;
use std::path::Path;

use crate::error::{check_len, Result};
use crate::formats::write_solution_file;
use crate::moead::Solution;

/// `a` Pareto-dominates `b` (minimisation).
///
/// Panics if the lengths differ; see [`checked_dominates`].
#[inline]
pub fn dominates(a: &[f64], b: &[f64]) -> bool {
    assert_eq!(a.len(), b.len(), "objective vectors differ in length");
    let mut strict = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        if x < y {
            strict = true;
        }
    }
    strict
}

pub fn checked_dominates(a: &[f64], b: &[f64]) -> Result<bool> {
    check_len(a.len(), b.len())?;
    Ok(dominates(a, b))
}

/// `a` is no worse than `b` in every objective (equality included).
#[inline]
pub(crate) fn weakly_dominates(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lexicographic(a: &[f64], b: &[f64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.total_cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Indices (ascending) of the non-dominated points; of several identical
/// vectors only the first is kept.
///
/// Sorting lexicographically first means a point can only be weakly
/// dominated by points sorted before it.
pub fn non_dominated_indices(points: &[Vec<f64>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| lexicographic(&points[i], &points[j]).then(i.cmp(&j)));
    let mut kept: Vec<usize> = Vec::new();
    for i in order {
        let p = &points[i];
        if !kept.iter().any(|&j| weakly_dominates(&points[j], p)) {
            kept.push(i);
        }
    }
    kept.sort_unstable();
    kept
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OfferOutcome {
    /// Stored; `evicted` members were dominated by the newcomer.
    Accepted { evicted: usize },
    Rejected,
}

/// All mutually non-dominated solutions seen so far, without a size limit.
#[derive(Debug, Clone, Default)]
pub struct Archive {
    members: Vec<Solution>,
    total_offered: usize,
}

impl Archive {
    pub fn new() -> Self {
        Self::default()
    }

    /// A member weakly dominating `s` (equal objectives included) rejects it;
    /// otherwise `s` is stored and every member it dominates is dropped.
    pub fn offer(&mut self, s: &Solution) -> OfferOutcome {
        self.total_offered += 1;
        if self.members.iter().any(|m| weakly_dominates(&m.f, &s.f)) {
            return OfferOutcome::Rejected;
        }
        let before = self.members.len();
        self.members.retain(|m| !dominates(&s.f, &m.f));
        let evicted = before - self.members.len();
        self.members.push(s.clone());
        OfferOutcome::Accepted { evicted }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn total_offered(&self) -> usize {
        self.total_offered
    }

    pub fn members(&self) -> &[Solution] {
        &self.members
    }

    pub fn snapshot(&self) -> ArchiveSnapshot {
        ArchiveSnapshot {
            members: self.members.clone(),
            total_offered: self.total_offered,
        }
    }
}

/// Immutable copy of an archive's contents.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ArchiveSnapshot {
    pub members: Vec<Solution>,
    pub total_offered: usize,
}

impl ArchiveSnapshot {
    pub fn objectives(&self) -> Vec<Vec<f64>> {
        self.members.iter().map(|s| s.f.clone()).collect()
    }

    /// Writes the `# problem=<id> M=<M> D=<D> seed=<seed>` archive file.
    pub fn write(&self, path: &Path, problem: &str, objectives: usize, dimension: usize, seed: u64) -> Result<()> {
        let header = format!("problem={problem} M={objectives} D={dimension} seed={seed}");
        write_solution_file(path, &header, &self.members)
    }
}
