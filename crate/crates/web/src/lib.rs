//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Three operations are exposed: a complete MOEA/D run (population, archive
//! and selected subset), the reference-point schedule, and a scalarizer
//! contour grid in two objectives. Point sets cross the boundary as flat
//! `Float64Array`s of `M`-tuples.

use wasm_bindgen::prelude::*;

use moead_workbench::indicators::igd_points;
use moead_workbench::moead::{self, Framework, RefPointSchedule, RunConfig};
use moead_workbench::problems::{sample_reference_front, ProblemId, ProblemInstance};
use moead_workbench::scalarize::{scalarize, ScalarizerKind, ScalarizerSpec};

fn js_err(e: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&e.to_string())
}

fn flatten(points: &[Vec<f64>]) -> Vec<f64> {
    points.iter().flatten().copied().collect()
}

#[wasm_bindgen]
pub struct RunView {
    population: Vec<Vec<f64>>,
    archive: Vec<Vec<f64>>,
    selected: Vec<Vec<f64>>,
    front: Vec<Vec<f64>>,
}

#[wasm_bindgen]
impl RunView {
    pub fn population(&self) -> Vec<f64> {
        flatten(&self.population)
    }

    pub fn archive(&self) -> Vec<f64> {
        flatten(&self.archive)
    }

    pub fn selected(&self) -> Vec<f64> {
        flatten(&self.selected)
    }

    pub fn front(&self) -> Vec<f64> {
        flatten(&self.front)
    }

    #[wasm_bindgen(js_name = igdPopulation)]
    pub fn igd_population(&self) -> f64 {
        igd_points(&self.population, &self.front).unwrap_or(f64::NAN)
    }

    #[wasm_bindgen(js_name = igdSelected)]
    pub fn igd_selected(&self) -> f64 {
        igd_points(&self.selected, &self.front).unwrap_or(f64::NAN)
    }
}

/// Runs MOEA/D with 91 subproblems for `generations` generations and keeps
/// both result frameworks side by side.
#[wasm_bindgen(js_name = runMoead)]
pub fn run_moead(
    problem: &str,
    scalarizer: &str,
    eps_ini: f64,
    eps_end: f64,
    generations: usize,
    seed: u32,
) -> Result<RunView, JsValue> {
    let id: ProblemId = problem.parse().map_err(js_err)?;
    let kind: ScalarizerKind = scalarizer.parse().map_err(js_err)?;
    let mut config = RunConfig::standard(
        id,
        Framework::SolutionSelection,
        ScalarizerSpec::new(kind),
        eps_ini,
        eps_end,
        u64::from(seed),
    );
    config.max_evaluations = config.population_size * generations.max(1);
    let result = moead::run(&config).map_err(js_err)?;
    let selected = result.result_set_for(Framework::SolutionSelection).map_err(js_err)?;
    let front = sample_reference_front(&ProblemInstance::standard(id), 2_000).map_err(js_err)?;
    Ok(RunView {
        population: result.final_population.into_iter().map(|s| s.f).collect(),
        archive: result.archive.objectives(),
        selected: selected.into_iter().map(|s| s.f).collect(),
        front,
    })
}

/// epsilon(t) for t = 1..=generations.
#[wasm_bindgen(js_name = epsilonSchedule)]
pub fn epsilon_schedule(eps_ini: f64, eps_end: f64, generations: usize) -> Result<Vec<f64>, JsValue> {
    let s = RefPointSchedule::new(eps_ini, eps_end, generations).map_err(js_err)?;
    (1..=generations).map(|t| s.epsilon_at(t).map_err(js_err)).collect()
}

/// Scalarizer values on a `resolution` x `resolution` grid over
/// `[lo, hi]^2`, row-major with f2 increasing down the rows. The weight is
/// `(w1, 1 - w1)` and the reference point `(-eps, -eps)`.
#[wasm_bindgen(js_name = contourGrid)]
pub fn contour_grid(
    scalarizer: &str,
    w1: f64,
    eps: f64,
    lo: f64,
    hi: f64,
    resolution: usize,
) -> Result<Vec<f64>, JsValue> {
    let kind: ScalarizerKind = scalarizer.parse().map_err(js_err)?;
    let spec = ScalarizerSpec::new(kind);
    let w = [w1, 1.0 - w1];
    let z = [-eps, -eps];
    let n = resolution.max(2);
    let step = (hi - lo) / (n - 1) as f64;
    let mut out = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let f = [lo + c as f64 * step, lo + r as f64 * step];
            out.push(scalarize(&spec, &f, &w, &z).map_err(js_err)?);
        }
    }
    Ok(out)
}
