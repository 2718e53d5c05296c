//! Grid sweeps over scalarizer and reference-point offsets.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::stats::CellSummary;
use crate::error::{Error, Result};
use crate::formats::write_solution_file;
use crate::indicators::{igd, ReferenceSet};
use crate::moead::{self, Framework, RunConfig};
use crate::problems::{front_file_name, read_front_file, ProblemId};
use crate::scalarize::{ScalarizerKind, ScalarizerSpec};
use crate::tuner::MoeadBudget;

fn d_runs() -> usize {
    31
}
fn d_frameworks() -> Vec<Framework> {
    Framework::BOTH.to_vec()
}
fn d_true() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridStudySpec {
    pub problems: Vec<ProblemId>,
    pub scalarizers: Vec<ScalarizerKind>,
    /// Values used for both the initial and the final offset.
    pub eps_values: Vec<f64>,
    /// Explicit `(eps_ini, eps_end)` cells; replaces the full product of
    /// `eps_values` when present.
    #[serde(default)]
    pub eps_pairs: Option<Vec<(f64, f64)>>,
    #[serde(default = "d_runs")]
    pub runs: usize,
    #[serde(default = "d_frameworks")]
    pub frameworks: Vec<Framework>,
    #[serde(default)]
    pub base_seed: u64,
    /// Score every framework on the same run. When false each framework
    /// gets its own runs with seeds offset by `framework_index * runs`.
    #[serde(default = "d_true")]
    pub shared_runs: bool,
    #[serde(default)]
    pub moead: MoeadBudget,
    /// Directory holding `<PROBLEM>.front` files.
    #[serde(default)]
    pub fronts_dir: Option<PathBuf>,
}

impl GridStudySpec {
    /// Five offsets {-1, 0, 1, 3, 5}, 31 runs, both frameworks.
    pub fn standard_grid(problems: Vec<ProblemId>, scalarizers: Vec<ScalarizerKind>) -> Self {
        Self {
            problems,
            scalarizers,
            eps_values: vec![-1.0, 0.0, 1.0, 3.0, 5.0],
            eps_pairs: None,
            runs: d_runs(),
            frameworks: d_frameworks(),
            base_seed: 0,
            shared_runs: true,
            moead: MoeadBudget::default(),
            fronts_dir: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.problems.is_empty() || self.scalarizers.is_empty() || self.frameworks.is_empty() {
            return Err(Error::InvalidConfig("grid lists must be non-empty".into()));
        }
        if self.eps_pairs.as_ref().map_or(self.eps_values.is_empty(), |p| p.is_empty()) {
            return Err(Error::InvalidConfig("no offset cells".into()));
        }
        if self.runs == 0 {
            return Err(Error::InvalidConfig("runs must be >= 1".into()));
        }
        for &(a, b) in &self.pairs() {
            if !a.is_finite() || !b.is_finite() {
                return Err(Error::InvalidConfig("offsets must be finite".into()));
            }
        }
        self.run_config(self.problems[0], self.scalarizers[0], (0.0, 0.0), self.frameworks[0], 0)
            .validate()
    }

    pub fn pairs(&self) -> Vec<(f64, f64)> {
        match &self.eps_pairs {
            Some(p) => p.clone(),
            None => self
                .eps_values
                .iter()
                .flat_map(|&a| self.eps_values.iter().map(move |&b| (a, b)))
                .collect(),
        }
    }

    pub fn run_config(
        &self,
        problem: ProblemId,
        kind: ScalarizerKind,
        eps: (f64, f64),
        framework: Framework,
        seed: u64,
    ) -> RunConfig {
        let mut c = RunConfig::standard(
            problem,
            framework,
            ScalarizerSpec {
                kind,
                theta: self.moead.theta,
            },
            eps.0,
            eps.1,
            seed,
        );
        c.population_size = self.moead.population_size;
        c.neighborhood_size = self.moead.neighborhood_size;
        c.max_evaluations = self.moead.max_evaluations;
        c
    }

    /// Seed of run `run` for the framework at `framework_index`.
    pub fn seed(&self, run: usize, framework_index: usize) -> u64 {
        let offset = if self.shared_runs { 0 } else { framework_index * self.runs };
        self.base_seed + (offset + run) as u64
    }

    pub fn fronts_dir(&self) -> PathBuf {
        self.fronts_dir.clone().unwrap_or_else(default_fronts_dir)
    }
}

/// The front files shipped with the crate.
pub fn default_fronts_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fronts")
}

/// Loads `<PROBLEM>.front` from `dir`.
pub fn load_front(dir: &Path, problem: ProblemId) -> Result<ReferenceSet> {
    let path = dir.join(front_file_name(problem));
    let (id, points) = read_front_file(&path)?;
    if id != problem {
        return Err(Error::Format {
            path,
            reason: format!("front is for {id}, expected {problem}"),
        });
    }
    ReferenceSet::from_front(points)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRow {
    pub problem: ProblemId,
    pub scalarizer: ScalarizerKind,
    pub eps_ini: f64,
    pub eps_end: f64,
    pub framework: Framework,
    pub run: usize,
    pub seed: u64,
    pub igd: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub problem: ProblemId,
    pub scalarizer: ScalarizerKind,
    pub eps_ini: f64,
    pub eps_end: f64,
    pub framework: Framework,
    pub runs: usize,
    pub mean_igd: f64,
    pub std_igd: f64,
    pub median_run: usize,
    pub median_igd: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridTable {
    pub rows: Vec<RunRow>,
    pub summaries: Vec<SummaryRow>,
}

impl GridTable {
    /// Per-run IGDs of one cell, ordered by run index.
    pub fn cell_igds(&self, problem: ProblemId, kind: ScalarizerKind, eps: (f64, f64), framework: Framework) -> Vec<f64> {
        self.rows
            .iter()
            .filter(|r| {
                r.problem == problem
                    && r.scalarizer == kind
                    && r.eps_ini == eps.0
                    && r.eps_end == eps.1
                    && r.framework == framework
            })
            .map(|r| r.igd)
            .collect()
    }
}

fn artifact_name(row: &RunRow) -> String {
    format!(
        "{}_{}_{}_{}_{}_run{:02}.txt",
        row.problem, row.scalarizer, row.eps_ini, row.eps_end, row.framework, row.run
    )
}

#[derive(Clone, Copy)]
struct Job {
    problem: ProblemId,
    kind: ScalarizerKind,
    eps: (f64, f64),
    run: usize,
    /// `None` scores every framework on one run.
    framework: Option<usize>,
}

/// Executes every cell of `spec` and returns rows in spec order
/// (problem, scalarizer, offsets, framework, run). With `artifacts`, each
/// run's result set is also written there.
pub fn run_grid(spec: &GridStudySpec, artifacts: Option<&Path>) -> Result<GridTable> {
    spec.validate()?;
    let dir = spec.fronts_dir();
    let fronts: BTreeMap<ProblemId, ReferenceSet> = spec
        .problems
        .iter()
        .map(|&p| Ok((p, load_front(&dir, p)?)))
        .collect::<Result<_>>()?;
    let pairs = spec.pairs();

    let mut jobs = Vec::new();
    for &problem in &spec.problems {
        for &kind in &spec.scalarizers {
            for &eps in &pairs {
                for run in 0..spec.runs {
                    if spec.shared_runs {
                        jobs.push(Job { problem, kind, eps, run, framework: None });
                    } else {
                        for fi in 0..spec.frameworks.len() {
                            jobs.push(Job { problem, kind, eps, run, framework: Some(fi) });
                        }
                    }
                }
            }
        }
    }

    let results: Vec<Vec<(RunRow, Vec<moead::Solution>)>> = jobs
        .par_iter()
        .map(|job| {
            let fis: Vec<usize> = match job.framework {
                Some(fi) => vec![fi],
                None => (0..spec.frameworks.len()).collect(),
            };
            let seed = spec.seed(job.run, fis[0]);
            let cfg = spec.run_config(job.problem, job.kind, job.eps, spec.frameworks[fis[0]], seed);
            let result = moead::run(&cfg)?;
            fis.into_iter()
                .map(|fi| {
                    let framework = spec.frameworks[fi];
                    let set = result.result_set_for(framework)?;
                    let objs: Vec<&[f64]> = set.iter().map(|s| s.f.as_slice()).collect();
                    let row = RunRow {
                        problem: job.problem,
                        scalarizer: job.kind,
                        eps_ini: job.eps.0,
                        eps_end: job.eps.1,
                        framework,
                        run: job.run,
                        seed,
                        igd: igd(&objs, &fronts[&job.problem])?,
                    };
                    Ok((row, set))
                })
                .collect()
        })
        .collect::<Result<_>>()?;

    let mut flat: Vec<(RunRow, Vec<moead::Solution>)> = results.into_iter().flatten().collect();
    let framework_pos = |f: Framework| spec.frameworks.iter().position(|&g| g == f).unwrap_or(0);
    // Jobs are already in (problem, scalarizer, offsets, run) order; a stable
    // sort groups frameworks inside each cell.
    flat.sort_by_key(|(r, _)| {
        (
            spec.problems.iter().position(|&p| p == r.problem),
            spec.scalarizers.iter().position(|&k| k == r.scalarizer),
            pairs.iter().position(|&e| e == (r.eps_ini, r.eps_end)),
            framework_pos(r.framework),
            r.run,
        )
    });

    if let Some(dir) = artifacts {
        std::fs::create_dir_all(dir)?;
        for (row, set) in &flat {
            let header = format!(
                "problem={} scalarizer={} eps_ini={} eps_end={} framework={} run={} seed={}",
                row.problem, row.scalarizer, row.eps_ini, row.eps_end, row.framework, row.run, row.seed
            );
            write_solution_file(&dir.join(artifact_name(row)), &header, set)?;
        }
    }

    let rows: Vec<RunRow> = flat.into_iter().map(|(r, _)| r).collect();
    let mut summaries = Vec::new();
    for chunk in rows.chunk_by(|a, b| {
        (a.problem, a.scalarizer, a.framework) == (b.problem, b.scalarizer, b.framework)
            && (a.eps_ini, a.eps_end) == (b.eps_ini, b.eps_end)
    }) {
        let cell = CellSummary::from_igds(chunk.iter().map(|r| r.igd).collect())?;
        let first = &chunk[0];
        summaries.push(SummaryRow {
            problem: first.problem,
            scalarizer: first.scalarizer,
            eps_ini: first.eps_ini,
            eps_end: first.eps_end,
            framework: first.framework,
            runs: chunk.len(),
            mean_igd: cell.mean,
            std_igd: cell.std,
            median_run: chunk[cell.median_run].run,
            median_igd: chunk[cell.median_run].igd,
        });
    }
    Ok(GridTable { rows, summaries })
}

#[derive(Debug, Serialize)]
struct GridMetadata<'a> {
    spec: &'a GridStudySpec,
    shared_runs: bool,
    cells: usize,
    moead_runs: usize,
    fronts: Vec<String>,
    tool_version: &'static str,
}

/// Writes `runs.csv`, `summary.csv` and `metadata.json` into `out_dir`.
pub fn write_grid_outputs(out_dir: &Path, spec: &GridStudySpec, table: &GridTable) -> Result<()> {
    std::fs::create_dir_all(out_dir)?;
    let mut w = csv::Writer::from_path(out_dir.join("runs.csv"))?;
    for r in &table.rows {
        w.serialize(r)?;
    }
    w.flush()?;
    let mut w = csv::Writer::from_path(out_dir.join("summary.csv"))?;
    for r in &table.summaries {
        w.serialize(r)?;
    }
    w.flush()?;
    let cells_per_framework = spec.problems.len() * spec.scalarizers.len() * spec.pairs().len();
    let meta = GridMetadata {
        spec,
        shared_runs: spec.shared_runs,
        cells: table.summaries.len(),
        moead_runs: cells_per_framework
            * spec.runs
            * if spec.shared_runs { 1 } else { spec.frameworks.len() },
        fronts: spec.problems.iter().map(|&p| front_file_name(p)).collect(),
        tool_version: env!("CARGO_PKG_VERSION"),
    };
    std::fs::write(out_dir.join("metadata.json"), serde_json::to_string_pretty(&meta)? + "\n")?;
    Ok(())
}
