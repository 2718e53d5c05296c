//! Batch execution, persistence and statistics behind the CLI.

mod grid;
mod stats;

use std::path::Path;

use serde::Serialize;

pub use grid::{
    default_fronts_dir, load_front, run_grid, write_grid_outputs, GridStudySpec, GridTable, RunRow,
    SummaryRow,
};
pub use stats::{
    midranks, select_median_run, wilcoxon_rank_sum, CellSummary, RankSumOutcome, Verdict, EXACT_LIMIT,
};

use crate::error::Result;
use crate::moead::{RunConfig, RunResult, Solution};

#[derive(Serialize)]
struct RunResultRecord<'a> {
    config: &'a RunConfig,
    evaluations_used: usize,
    archive_size: usize,
    result_set: &'a [Solution],
    final_population: &'a [Solution],
}

/// Writes `result.json` (config, counters, result set, final population)
/// and `archive.txt` into `out_dir`.
pub fn write_run_outputs(out_dir: &Path, result: &RunResult) -> Result<()> {
    std::fs::create_dir_all(out_dir)?;
    let result_set = result.result_set()?;
    let record = RunResultRecord {
        config: &result.config,
        evaluations_used: result.evaluations_used,
        archive_size: result.archive.members.len(),
        result_set: &result_set,
        final_population: &result.final_population,
    };
    std::fs::write(out_dir.join("result.json"), serde_json::to_string_pretty(&record)? + "\n")?;
    let dimension = result.final_population.first().map_or(0, |s| s.x.len());
    result.archive.write(
        &out_dir.join("archive.txt"),
        result.config.problem.name(),
        result.config.objectives,
        dimension,
        result.config.seed,
    )
}
