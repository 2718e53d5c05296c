//! Sampled Pareto fronts used as IGD reference sets.
//!
//! The sampler sweeps the reduced position coordinates `t_1..t_{M-1}` on a
//! uniform grid, fixes the distance term `t_M`, applies the shape functions,
//! and keeps the non-dominated points.
//!
//! For WFG problems the front has `t_M = 0` (distance parameters at 0.35 of
//! their range). A Minus problem maximises the WFG objectives, so its front
//! lies where `t_M` reaches 1. [`ProblemInstance::position_grid`] builds
//! decision vectors for either setting.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use super::{ProblemId, ProblemInstance};
use crate::archive::non_dominated_indices;
use crate::error::{Error, Result};

pub const DEFAULT_FRONT_SIZE: usize = 10_000;

/// Where the distance parameters are pinned while sweeping positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceSetting {
    /// `t_M = 0`: the WFG Pareto-optimal distance values.
    Optimal,
    /// `t_M = 1`: the largest distance term the problem admits.
    Farthest,
}

impl ProblemInstance {
    /// Decision value a position parameter needs so that its group reduces
    /// to `u`.
    fn position_preimage(&self, u: f64, upper: f64) -> f64 {
        let y = match self.id.base() {
            // t = y^0.02 after the polynomial bias.
            ProblemId::Wfg1 => u.powf(50.0),
            ProblemId::Wfg2 | ProblemId::Wfg3 => u,
            // s_multi is continuous on [0.35, 1] with s(0.35) = 0, s(1) = 1;
            // bisection finds one preimage deterministically.
            _ => {
                let (mut lo, mut hi) = (0.35_f64, 1.0_f64);
                if u >= 1.0 {
                    lo = 1.0;
                } else if u > 0.0 {
                    for _ in 0..200 {
                        let mid = 0.5 * (lo + hi);
                        if super::wfg::s_multi(mid, 30.0, 10.0, 0.35) < u {
                            lo = mid;
                        } else {
                            hi = mid;
                        }
                        if hi - lo < 1e-15 {
                            break;
                        }
                    }
                }
                lo
            }
        };
        (y * upper).clamp(0.0, upper)
    }

    /// Distance-parameter values realising `setting`.
    ///
    /// Values meant to normalise to 0.35 are nudged until `z / upper` is
    /// exactly 0.35; otherwise WFG1's polynomial bias (exponent 0.02) turns a
    /// rounding residue of 1e-17 into a distance term near 0.07.
    pub fn distance_values(&self, setting: DistanceSetting) -> Vec<f64> {
        let k = self.position_params;
        let uppers = &self.upper_bounds[k..];
        match setting {
            DistanceSetting::Optimal => uppers.iter().map(|&u| scaled_exactly(0.35, u)).collect(),
            DistanceSetting::Farthest => match self.id.base() {
                // r_nonsep over pairs reaches 1 for shifted values (1, 0),
                // i.e. raw values (upper, 0.35 * upper).
                ProblemId::Wfg2 | ProblemId::Wfg3 => uppers
                    .iter()
                    .enumerate()
                    .map(|(i, &u)| if i % 2 == 0 { u } else { scaled_exactly(0.35, u) })
                    .collect(),
                _ => uppers.to_vec(),
            },
        }
    }

    /// Decision vectors covering a grid of `resolution` points per reduced
    /// position coordinate.
    pub fn position_grid(&self, resolution: usize, setting: DistanceSetting) -> Vec<Vec<f64>> {
        let m = self.objectives;
        let k = self.position_params;
        let group = k / (m - 1);
        let distance = self.distance_values(setting);
        let steps = resolution.max(2);
        let total = steps.pow((m - 1) as u32);
        let mut out = Vec::with_capacity(total);
        let mut counter = vec![0usize; m - 1];
        for _ in 0..total {
            let mut z = Vec::with_capacity(self.dimension());
            for (g, &c) in counter.iter().enumerate() {
                let u = c as f64 / (steps - 1) as f64;
                for i in g * group..(g + 1) * group {
                    z.push(self.position_preimage(u, self.upper_bounds[i]));
                }
            }
            z.extend_from_slice(&distance);
            out.push(z);
            // odometer, last coordinate fastest
            for c in counter.iter_mut().rev() {
                *c += 1;
                if *c < steps {
                    break;
                }
                *c = 0;
            }
        }
        out
    }
}

/// A value `z` near `frac * upper` with `z / upper == frac` where one exists
/// within a few ulps.
fn scaled_exactly(frac: f64, upper: f64) -> f64 {
    let base = frac * upper;
    let mut candidates = vec![base];
    let (mut up, mut down) = (base, base);
    for _ in 0..4 {
        up = up.next_up();
        down = down.next_down();
        candidates.push(up);
        candidates.push(down);
    }
    candidates.into_iter().find(|z| z / upper == frac).unwrap_or(base)
}

/// Samples a non-dominated approximation of the Pareto front of `problem`.
///
/// The grid has `ceil(target_size^(1/(M-1)))` points per reduced position
/// coordinate, so the raw grid holds at least `target_size` vectors before
/// duplicate and dominance filtering. Points come straight from the shape
/// functions at `t_M = 0` (WFG) or `t_M = 1` (Minus). Going through decision
/// vectors would not work for WFG1: some of its distance parameters cannot
/// represent the ratio 0.35 exactly, and the polynomial bias inflates the
/// residue to a visible offset.
pub fn sample_reference_front(problem: &ProblemInstance, target_size: usize) -> Result<Vec<Vec<f64>>> {
    let m = problem.objectives;
    if target_size < m {
        return Err(Error::InvalidInput(format!(
            "target_size {target_size} must be at least M = {m}"
        )));
    }
    let per_axis = (target_size as f64).powf(1.0 / (m - 1) as f64).ceil() as usize;
    let mut resolution = per_axis.max(2);
    while resolution.pow((m - 1) as u32) < target_size {
        resolution += 1;
    }
    let t_last = if problem.id.is_minus() { 1.0 } else { 0.0 };
    let total = resolution.pow((m - 1) as u32);
    let mut points = Vec::with_capacity(total);
    let mut counter = vec![0usize; m - 1];
    for _ in 0..total {
        let mut t: Vec<f64> = counter.iter().map(|&c| c as f64 / (resolution - 1) as f64).collect();
        t.push(t_last);
        let mut f = problem.shape_objectives(&t);
        if problem.id.is_minus() {
            f.iter_mut().for_each(|v| *v = -*v);
        }
        points.push(f);
        for c in counter.iter_mut().rev() {
            *c += 1;
            if *c < resolution {
                break;
            }
            *c = 0;
        }
    }
    let keep = non_dominated_indices(&points);
    Ok(keep.into_iter().map(|i| points[i].clone()).collect())
}

pub fn front_file_name(id: ProblemId) -> String {
    format!("{}.front", id.name())
}

pub fn write_front_file(path: &Path, id: ProblemId, points: &[Vec<f64>]) -> Result<()> {
    let m = points.first().map_or(0, Vec::len);
    let mut w = BufWriter::new(fs::File::create(path)?);
    writeln!(w, "# problem={} M={}", id.name(), m)?;
    for p in points {
        let line: Vec<String> = p.iter().map(|v| format!("{v:.10}")).collect();
        writeln!(w, "{}", line.join(" "))?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a front file, returning the declared problem and its points.
pub fn read_front_file(path: &Path) -> Result<(ProblemId, Vec<Vec<f64>>)> {
    let text = fs::read_to_string(path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            Error::MissingFront(path.to_path_buf())
        } else {
            Error::Io(e)
        }
    })?;
    let fmt_err = |reason: String| Error::Format {
        path: PathBuf::from(path),
        reason,
    };
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| fmt_err("empty file".into()))?;
    let fields = crate::formats::parse_header(header).map_err(fmt_err)?;
    let id: ProblemId = fields
        .get("problem")
        .ok_or_else(|| fmt_err("header lacks problem=".into()))?
        .parse()?;
    let m: usize = fields
        .get("M")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| fmt_err("header lacks M=".into()))?;
    let mut points = Vec::new();
    for (no, line) in lines.enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let p = crate::formats::parse_numbers(line).map_err(|e| fmt_err(format!("line {}: {e}", no + 2)))?;
        if p.len() != m {
            return Err(fmt_err(format!("line {}: expected {m} values, got {}", no + 2, p.len())));
        }
        points.push(p);
    }
    Ok((id, points))
}
