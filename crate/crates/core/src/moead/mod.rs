//! The MOEA/D generational engine.
//!
//! Generation 1 is random initialisation; every later generation produces one
//! offspring per subproblem from two distinct members of its neighbourhood
//! and lets it replace every neighbour it beats. Comparisons use normalised
//! objectives: the running minimum over everything evaluated (updated as soon
//! as a solution is evaluated) and the population maximum taken at the start
//! of each generation. The reference point moves along
//! [`RefPointSchedule`] in that normalised space.
//!
//! A run draws from a single ChaCha8 stream seeded by `RunConfig::seed`:
//! first `N * D` uniforms for the initial population, then per subproblem
//! two parent-index draws followed by the SBX and mutation draws documented
//! in [`variation`].

mod schedule;
mod variation;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use schedule::{NormalizationState, RefPointSchedule, NORMALIZATION_GUARD};
pub use variation::{MutationParams, SbxParams};

use crate::archive::{Archive, ArchiveSnapshot};
use crate::error::{Error, Result};
use crate::problems::{ProblemId, ProblemInstance};
use crate::scalarize::{divisions_for_size, scalarize, ScalarizerSpec, WeightSet};
use crate::subset::{dss_select, SelectionRequest};

/// A decision vector with its raw objective vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Solution {
    pub x: Vec<f64>,
    pub f: Vec<f64>,
    /// Position of this evaluation within its run.
    pub eval_index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Framework {
    FinalPopulation,
    SolutionSelection,
}

impl Framework {
    pub const BOTH: [Framework; 2] = [Framework::FinalPopulation, Framework::SolutionSelection];

    pub fn name(self) -> &'static str {
        match self {
            Framework::FinalPopulation => "FinalPopulation",
            Framework::SolutionSelection => "SolutionSelection",
        }
    }
}

impl std::fmt::Display for Framework {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Framework {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "finalpopulation" | "final" | "fp" => Ok(Framework::FinalPopulation),
            "solutionselection" | "selection" | "ss" => Ok(Framework::SolutionSelection),
            _ => Err(Error::InvalidInput(format!("unknown framework '{s}'"))),
        }
    }
}

fn default_objectives() -> usize {
    3
}
fn default_population() -> usize {
    91
}
fn default_neighborhood() -> usize {
    20
}
fn default_evaluations() -> usize {
    36_400
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub problem: ProblemId,
    #[serde(default = "default_objectives")]
    pub objectives: usize,
    pub framework: Framework,
    pub scalarizer: ScalarizerSpec,
    pub eps_ini: f64,
    pub eps_end: f64,
    /// Must be a Das-Dennis count for `objectives` (91 for M = 3, H = 12).
    #[serde(default = "default_population")]
    pub population_size: usize,
    #[serde(default = "default_neighborhood")]
    pub neighborhood_size: usize,
    /// Includes the initial population; must be a multiple of the
    /// population size.
    #[serde(default = "default_evaluations")]
    pub max_evaluations: usize,
    #[serde(default)]
    pub sbx: SbxParams,
    #[serde(default)]
    pub mutation: MutationParams,
    /// Size of the subset selected from the archive; defaults to the
    /// population size.
    #[serde(default)]
    pub selection_size: Option<usize>,
    #[serde(default)]
    pub seed: u64,
}

impl RunConfig {
    /// The reference setting: M = 3, N = 91, T_nb = 20, 36,400 evaluations,
    /// SBX and polynomial mutation with index 20.
    pub fn standard(
        problem: ProblemId,
        framework: Framework,
        scalarizer: ScalarizerSpec,
        eps_ini: f64,
        eps_end: f64,
        seed: u64,
    ) -> Self {
        Self {
            problem,
            objectives: default_objectives(),
            framework,
            scalarizer,
            eps_ini,
            eps_end,
            population_size: default_population(),
            neighborhood_size: default_neighborhood(),
            max_evaluations: default_evaluations(),
            sbx: SbxParams::default(),
            mutation: MutationParams::default(),
            selection_size: None,
            seed,
        }
    }

    pub fn instance(&self) -> Result<ProblemInstance> {
        ProblemInstance::with_objectives(self.problem, self.objectives)
    }

    /// `T = max_evaluations / N`.
    pub fn generations(&self) -> usize {
        self.max_evaluations / self.population_size.max(1)
    }

    pub fn selection_target(&self) -> usize {
        self.selection_size.unwrap_or(self.population_size)
    }

    fn weight_divisions(&self) -> Result<usize> {
        divisions_for_size(self.objectives, self.population_size).ok_or_else(|| {
            Error::InvalidConfig(format!(
                "population size {} is not a Das-Dennis count for M = {}",
                self.population_size, self.objectives
            ))
        })
    }

    pub fn validate(&self) -> Result<()> {
        self.instance()?;
        self.weight_divisions()?;
        self.scalarizer.validate()?;
        if self.neighborhood_size < 2 || self.neighborhood_size > self.population_size {
            return Err(Error::InvalidConfig(format!(
                "neighborhood size {} must lie in 2..={}",
                self.neighborhood_size, self.population_size
            )));
        }
        if self.max_evaluations == 0 || !self.max_evaluations.is_multiple_of(self.population_size) {
            return Err(Error::InvalidConfig(format!(
                "max_evaluations {} is not a positive multiple of N = {}",
                self.max_evaluations, self.population_size
            )));
        }
        if !self.eps_ini.is_finite() || !self.eps_end.is_finite() {
            return Err(Error::InvalidConfig("epsilon settings must be finite".into()));
        }
        let p = self.sbx.probability;
        let pm = self.mutation.probability.unwrap_or(0.0);
        if !(0.0..=1.0).contains(&p) || !(0.0..=1.0).contains(&pm) {
            return Err(Error::InvalidConfig("probabilities must lie in [0, 1]".into()));
        }
        if self.sbx.distribution_index < 0.0 || self.mutation.distribution_index < 0.0 {
            return Err(Error::InvalidConfig("distribution indices must be >= 0".into()));
        }
        if self.selection_target() == 0 {
            return Err(Error::InvalidConfig("selection size must be >= 1".into()));
        }
        Ok(())
    }
}

/// A neighbour replaced by an offspring.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Replacement {
    pub generation: usize,
    /// Subproblem whose incumbent was replaced.
    pub subproblem: usize,
    pub offspring_eval: usize,
    pub old_value: f64,
    pub new_value: f64,
}

/// Hooks into a run. All methods default to no-ops.
pub trait RunObserver {
    /// Called once per evaluated solution, initial ones included.
    fn on_evaluation(&mut self, _solution: &Solution) {}
    fn on_generation_start(&mut self, _generation: usize, _norm: &NormalizationState, _z_star: &[f64]) {}
    fn on_replacement(&mut self, _event: &Replacement) {}
}

impl RunObserver for Archive {
    fn on_evaluation(&mut self, solution: &Solution) {
        self.offer(solution);
    }
}

impl RunObserver for () {}

/// Adapts a closure into an evaluation-only observer.
pub struct EvaluationSink<F>(pub F);

impl<F: FnMut(&Solution)> RunObserver for EvaluationSink<F> {
    fn on_evaluation(&mut self, solution: &Solution) {
        (self.0)(solution)
    }
}

/// Runs the engine and returns the final population.
pub fn run_with_observer(config: &RunConfig, observer: &mut dyn RunObserver) -> Result<Vec<Solution>> {
    config.validate()?;
    let problem = config.instance()?;
    let m = config.objectives;
    let n = config.population_size;
    let dim = problem.dimension();
    let weights = WeightSet::das_dennis(m, config.weight_divisions()?, config.neighborhood_size)?;
    debug_assert_eq!(weights.len(), n);
    let (lower, upper) = (&problem.lower_bounds, &problem.upper_bounds);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut norm = NormalizationState::new(m);
    let mut evaluations = 0usize;

    let mut population = Vec::with_capacity(n);
    for _ in 0..n {
        let x: Vec<f64> = (0..dim)
            .map(|j| lower[j] + rng.random::<f64>() * (upper[j] - lower[j]))
            .collect();
        let f = problem.evaluate(&x)?;
        let s = Solution {
            x,
            f,
            eval_index: evaluations,
        };
        evaluations += 1;
        observer.on_evaluation(&s);
        norm.observe(&s.f);
        population.push(s);
    }

    let big_t = config.generations();
    if big_t < 2 {
        return Ok(population);
    }
    let schedule = RefPointSchedule::new(config.eps_ini, config.eps_end, big_t)?;
    let rate = config.mutation.rate(dim);
    let spec = &config.scalarizer;
    let t_nb = config.neighborhood_size;
    let mut child_norm = Vec::with_capacity(m);
    let mut incumbent_norm = Vec::with_capacity(m);

    for t in 2..=big_t {
        norm.refresh_nadir(population.iter().map(|s| s.f.as_slice()));
        let z_star = schedule.reference_point(t, m)?;
        observer.on_generation_start(t, &norm, &z_star);
        for i in 0..n {
            let nb = weights.neighborhood(i);
            let p = rng.random_range(0..t_nb);
            let mut q = rng.random_range(0..t_nb - 1);
            if q >= p {
                q += 1;
            }
            let mut x = variation::sbx_child(
                &mut rng,
                &config.sbx,
                &population[nb[p]].x,
                &population[nb[q]].x,
                lower,
                upper,
            );
            variation::polynomial_mutation(
                &mut rng,
                rate,
                config.mutation.distribution_index,
                &mut x,
                lower,
                upper,
            );
            let f = problem.evaluate(&x)?;
            let child = Solution {
                x,
                f,
                eval_index: evaluations,
            };
            evaluations += 1;
            observer.on_evaluation(&child);
            norm.observe(&child.f);
            norm.normalize_into(&child.f, &mut child_norm);
            for &j in nb {
                norm.normalize_into(&population[j].f, &mut incumbent_norm);
                let w = weights.vector(j);
                let old_value = scalarize(spec, &incumbent_norm, w, &z_star)?;
                let new_value = scalarize(spec, &child_norm, w, &z_star)?;
                if new_value < old_value {
                    observer.on_replacement(&Replacement {
                        generation: t,
                        subproblem: j,
                        offspring_eval: child.eval_index,
                        old_value,
                        new_value,
                    });
                    population[j] = child.clone();
                }
            }
        }
    }
    debug_assert_eq!(evaluations, config.max_evaluations);
    Ok(population)
}

/// Outcome of one run: final population plus the unbounded archive.
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub config: RunConfig,
    pub final_population: Vec<Solution>,
    pub archive: ArchiveSnapshot,
    pub evaluations_used: usize,
}

impl RunResult {
    /// The reported solution set under `framework`: the final population, or
    /// the distance-based selection from the archive.
    pub fn result_set_for(&self, framework: Framework) -> Result<Vec<Solution>> {
        match framework {
            Framework::FinalPopulation => Ok(self.final_population.clone()),
            Framework::SolutionSelection => dss_select(&SelectionRequest::new(
                &self.archive,
                self.config.selection_target(),
            )),
        }
    }

    pub fn result_set(&self) -> Result<Vec<Solution>> {
        self.result_set_for(self.config.framework)
    }
}

/// Runs the engine with an archive attached.
pub fn run(config: &RunConfig) -> Result<RunResult> {
    let mut archive = Archive::new();
    let final_population = run_with_observer(config, &mut archive)?;
    Ok(RunResult {
        config: config.clone(),
        final_population,
        evaluations_used: archive.total_offered(),
        archive: archive.snapshot(),
    })
}
