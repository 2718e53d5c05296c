//! Distance-based subset selection (DSS).
//!
//! Greedy max-min selection in objective space, after min-max normalising
//! every objective over the source set. The first picks are the minimisers
//! of each objective in index order; afterwards the member farthest from
//! everything already picked joins. Ties go to the lower archive index.

use std::path::Path;

use crate::archive::ArchiveSnapshot;
use crate::error::{Error, Result};
use crate::formats::write_solution_file;
use crate::moead::Solution;

pub struct SelectionRequest<'a> {
    pub source: &'a [Solution],
    pub target_size: usize,
}

impl<'a> SelectionRequest<'a> {
    pub fn new(source: &'a ArchiveSnapshot, target_size: usize) -> Self {
        Self {
            source: &source.members,
            target_size,
        }
    }

    pub fn from_solutions(source: &'a [Solution], target_size: usize) -> Self {
        Self {
            source,
            target_size,
        }
    }
}

/// Per-objective `(min, max)` over `points`.
pub fn objective_ranges(points: &[&[f64]]) -> Vec<(f64, f64)> {
    let m = points.first().map_or(0, |p| p.len());
    (0..m)
        .map(|i| {
            points.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
                (lo.min(p[i]), hi.max(p[i]))
            })
        })
        .collect()
}

fn normalized(points: &[&[f64]]) -> Vec<Vec<f64>> {
    let ranges = objective_ranges(points);
    points
        .iter()
        .map(|p| {
            p.iter()
                .zip(&ranges)
                .map(|(v, (lo, hi))| {
                    let span = hi - lo;
                    if span > 0.0 {
                        (v - lo) / span
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect()
}

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Indices into `points`, in the order they were picked.
pub fn dss_order(points: &[&[f64]], target_size: usize) -> Result<Vec<usize>> {
    if points.is_empty() {
        return Err(Error::Empty("selection source"));
    }
    if target_size == 0 {
        return Err(Error::InvalidInput("target size must be >= 1".into()));
    }
    let n = points.len();
    let k = target_size.min(n);
    let norm = normalized(points);
    let m = norm[0].len();
    let mut chosen = vec![false; n];
    let mut order = Vec::with_capacity(k);
    let mut min_dist = vec![f64::INFINITY; n];

    let pick = |idx: usize, chosen: &mut Vec<bool>, order: &mut Vec<usize>, min_dist: &mut Vec<f64>| {
        chosen[idx] = true;
        order.push(idx);
        for j in 0..n {
            if !chosen[j] {
                let d = sq_dist(&norm[j], &norm[idx]);
                if d < min_dist[j] {
                    min_dist[j] = d;
                }
            }
        }
    };

    for obj in 0..m {
        if order.len() == k {
            break;
        }
        let best = (0..n)
            .filter(|&j| !chosen[j])
            .fold(None::<usize>, |acc, j| match acc {
                Some(b) if norm[b][obj] <= norm[j][obj] => Some(b),
                _ => Some(j),
            })
            .expect("unselected member exists while order.len() < n");
        pick(best, &mut chosen, &mut order, &mut min_dist);
    }
    while order.len() < k {
        let best = (0..n)
            .filter(|&j| !chosen[j])
            .fold(None::<usize>, |acc, j| match acc {
                Some(b) if min_dist[b] >= min_dist[j] => Some(b),
                _ => Some(j),
            })
            .expect("unselected member exists while order.len() < n");
        pick(best, &mut chosen, &mut order, &mut min_dist);
    }
    Ok(order)
}

/// Selects `min(target_size, |source|)` well-spread members.
pub fn dss_select(req: &SelectionRequest<'_>) -> Result<Vec<Solution>> {
    let points: Vec<&[f64]> = req.source.iter().map(|s| s.f.as_slice()).collect();
    let order = dss_order(&points, req.target_size)?;
    Ok(order.into_iter().map(|i| req.source[i].clone()).collect())
}

/// Writes a selected-set file with header `# selected_from=<file> k=<k>`.
pub fn write_selected_file(path: &Path, selected_from: &str, target_size: usize, selected: &[Solution]) -> Result<()> {
    let header = format!("selected_from={selected_from} k={target_size}");
    write_solution_file(path, &header, selected)
}
