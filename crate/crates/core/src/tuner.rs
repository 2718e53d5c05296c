//! Binary GA searching MOEA/D configurations.
//!
//! A genome is six bits: scalarizer (bits 0-1), initial offset (bits 2-3)
//! and final offset (bits 4-5), each field read most-significant bit first:
//!
//! | bits | scalarizer | offset |
//! |------|------------|--------|
//! | 00   | WS         | -1     |
//! | 01   | TCH        | 0      |
//! | 10   | MTCH       | 1      |
//! | 11   | PBI        | 3      |
//!
//! Fitness is the mean IGD of a genome's cached result sets against a
//! reference set rebuilt every generation from the non-dominated union of all
//! result sets of parents and offspring. Parents are re-scored against the
//! new reference from their cached evidence; MOEA/D is only run for new
//! offspring. Fitness values from different generations are never compared.
//!
//! Run seeds are derived from the master seed, the genome's creation index
//! and the run index by [`derive_seed`], so evidence does not depend on
//! evaluation order or thread count.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::indicators::{build_dynamic_reference, igd, ReferenceSet};
use crate::moead::{self, Framework, RunConfig};
use crate::problems::ProblemId;
use crate::scalarize::{ScalarizerKind, ScalarizerSpec, DEFAULT_PBI_THETA};

pub const GENOME_BITS: usize = 6;
pub const EPSILON_TABLE: [f64; 4] = [-1.0, 0.0, 1.0, 3.0];
pub const SCALARIZER_TABLE: [ScalarizerKind; 4] = [
    ScalarizerKind::WeightedSum,
    ScalarizerKind::Tchebycheff,
    ScalarizerKind::ModifiedTchebycheff,
    ScalarizerKind::Pbi,
];

pub type Bits = [bool; GENOME_BITS];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Decoded {
    pub scalarizer: ScalarizerKind,
    pub eps_ini: f64,
    pub eps_end: f64,
}

impl std::fmt::Display for Decoded {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}({},{})", self.scalarizer, self.eps_ini, self.eps_end)
    }
}

fn field(hi: bool, lo: bool) -> usize {
    (hi as usize) << 1 | lo as usize
}

pub fn decode(bits: &[bool]) -> Result<Decoded> {
    if bits.len() != GENOME_BITS {
        return Err(Error::DimensionMismatch {
            expected: GENOME_BITS,
            actual: bits.len(),
        });
    }
    Ok(Decoded {
        scalarizer: SCALARIZER_TABLE[field(bits[0], bits[1])],
        eps_ini: EPSILON_TABLE[field(bits[2], bits[3])],
        eps_end: EPSILON_TABLE[field(bits[4], bits[5])],
    })
}

/// Parses a string such as `"110100"`.
pub fn parse_bits(s: &str) -> Result<Bits> {
    let v: Vec<bool> = s
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::InvalidInput(format!("'{s}' is not a bit string"))),
        })
        .collect::<Result<_>>()?;
    v.try_into().map_err(|v: Vec<bool>| Error::DimensionMismatch {
        expected: GENOME_BITS,
        actual: v.len(),
    })
}

pub fn bits_to_string(bits: &Bits) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Every one of the 64 bit strings, in counting order.
pub fn all_bit_strings() -> Vec<Bits> {
    (0..64u32)
        .map(|v| std::array::from_fn(|i| v >> (GENOME_BITS - 1 - i) & 1 == 1))
        .collect()
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// `splitmix64(splitmix64(master ^ splitmix64(genome)) ^ run)`.
pub fn derive_seed(master: u64, genome: u64, run: u64) -> u64 {
    splitmix64(splitmix64(master ^ splitmix64(genome)) ^ run)
}

/// MOEA/D settings shared by every evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MoeadBudget {
    pub population_size: usize,
    pub neighborhood_size: usize,
    pub max_evaluations: usize,
    pub theta: f64,
}

impl Default for MoeadBudget {
    fn default() -> Self {
        Self {
            population_size: 91,
            neighborhood_size: 20,
            max_evaluations: 36_400,
            theta: DEFAULT_PBI_THETA,
        }
    }
}

fn d_mu() -> usize {
    30
}
fn d_gens() -> usize {
    50
}
fn d_one() -> f64 {
    1.0
}
fn d_mut() -> f64 {
    0.1
}
fn d_tour() -> usize {
    3
}
fn d_runs() -> usize {
    5
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TunerConfig {
    pub problem: ProblemId,
    pub framework: Framework,
    #[serde(default = "d_mu")]
    pub mu: usize,
    #[serde(default = "d_mu")]
    pub lambda: usize,
    #[serde(default = "d_gens")]
    pub generations: usize,
    #[serde(default = "d_one")]
    pub crossover_probability: f64,
    #[serde(default = "d_mut")]
    pub mutation_probability: f64,
    #[serde(default = "d_tour")]
    pub tournament_size: usize,
    #[serde(default = "d_runs")]
    pub runs_per_eval: usize,
    #[serde(default)]
    pub moead: MoeadBudget,
    #[serde(default)]
    pub master_seed: u64,
}

impl TunerConfig {
    pub fn standard(problem: ProblemId, framework: Framework, master_seed: u64) -> Self {
        Self {
            problem,
            framework,
            mu: d_mu(),
            lambda: d_mu(),
            generations: d_gens(),
            crossover_probability: 1.0,
            mutation_probability: 0.1,
            tournament_size: 3,
            runs_per_eval: 5,
            moead: MoeadBudget::default(),
            master_seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.mu == 0 || self.lambda == 0 || self.tournament_size == 0 || self.runs_per_eval == 0 {
            return Err(Error::InvalidConfig("tuner counts must be positive".into()));
        }
        for p in [self.crossover_probability, self.mutation_probability] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidConfig(format!("probability {p} outside [0, 1]")));
            }
        }
        self.run_config(&decode(&[false; GENOME_BITS])?, 0).validate()
    }

    /// MOEA/D configuration for one evaluation run of `decoded`.
    pub fn run_config(&self, decoded: &Decoded, seed: u64) -> RunConfig {
        let mut c = RunConfig::standard(
            self.problem,
            self.framework,
            ScalarizerSpec {
                kind: decoded.scalarizer,
                theta: self.moead.theta,
            },
            decoded.eps_ini,
            decoded.eps_end,
            seed,
        );
        c.population_size = self.moead.population_size;
        c.neighborhood_size = self.moead.neighborhood_size;
        c.max_evaluations = self.moead.max_evaluations;
        c
    }
}

/// A candidate configuration with its cached evaluation evidence.
#[derive(Debug, Clone, PartialEq)]
pub struct Genome {
    /// Creation index; seeds its runs and breaks fitness ties.
    pub id: u64,
    pub bits: Bits,
    pub decoded: Decoded,
    /// One objective-vector set per evaluation run.
    pub evidence: Vec<Vec<Vec<f64>>>,
    /// Mean IGD under the current generation's reference set.
    pub fitness: f64,
}

impl Genome {
    pub fn label(&self) -> String {
        bits_to_string(&self.bits)
    }
}

/// Runs MOEA/D `runs_per_eval` times for the configuration encoded by
/// `bits` and returns each run's result set.
pub fn evaluate_genome(bits: &Bits, genome_id: u64, config: &TunerConfig) -> Result<Vec<Vec<Vec<f64>>>> {
    let decoded = decode(bits)?;
    (0..config.runs_per_eval as u64)
        .map(|run| {
            let rc = config.run_config(&decoded, derive_seed(config.master_seed, genome_id, run));
            let result = moead::run(&rc)?;
            Ok(result.result_set()?.into_iter().map(|s| s.f).collect())
        })
        .collect()
}

fn score(genome: &Genome, reference: &ReferenceSet) -> Result<f64> {
    let total = genome
        .evidence
        .iter()
        .map(|set| igd(set, reference))
        .sum::<Result<f64>>()?;
    Ok(total / genome.evidence.len() as f64)
}

fn by_fitness(a: &Genome, b: &Genome) -> std::cmp::Ordering {
    a.fitness.total_cmp(&b.fitness).then(a.id.cmp(&b.id))
}

/// Per-generation summary, one CSV row each.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GenerationLog {
    pub generation: usize,
    pub best_bits: String,
    pub best_decoded: String,
    pub best_fitness: f64,
    pub mean_fitness: f64,
    pub reference_set_size: usize,
}

#[derive(Debug, Clone)]
pub struct TuneOutcome {
    pub best: Genome,
    pub final_population: Vec<Genome>,
    pub log: Vec<GenerationLog>,
    /// Fresh evidence computations (genome evaluations).
    pub genome_evaluations: usize,
    pub moead_runs: usize,
}

/// GA state: the breeding RNG and the creation counter.
pub struct Tuner {
    config: TunerConfig,
    rng: ChaCha8Rng,
    next_id: u64,
    genome_evaluations: usize,
    moead_runs: usize,
}

impl Tuner {
    pub fn new(config: TunerConfig) -> Result<Self> {
        config.validate()?;
        let rng = ChaCha8Rng::seed_from_u64(splitmix64(config.master_seed));
        Ok(Self {
            config,
            rng,
            next_id: 0,
            genome_evaluations: 0,
            moead_runs: 0,
        })
    }

    pub fn config(&self) -> &TunerConfig {
        &self.config
    }

    pub fn moead_runs(&self) -> usize {
        self.moead_runs
    }

    fn evaluate_new(&mut self, bits: Vec<Bits>) -> Result<Vec<Genome>> {
        let first = self.next_id;
        self.next_id += bits.len() as u64;
        self.genome_evaluations += bits.len();
        self.moead_runs += bits.len() * self.config.runs_per_eval;
        let cfg = &self.config;
        bits.into_par_iter()
            .enumerate()
            .map(|(i, b)| {
                let id = first + i as u64;
                Ok(Genome {
                    id,
                    bits: b,
                    decoded: decode(&b)?,
                    evidence: evaluate_genome(&b, id, cfg)?,
                    fitness: f64::NAN,
                })
            })
            .collect()
    }

    /// Scores every genome against the union of all their result sets and
    /// returns the reference size.
    fn rescore(genomes: &mut [Genome]) -> Result<usize> {
        let sets: Vec<&[Vec<f64>]> = genomes
            .iter()
            .flat_map(|g| g.evidence.iter().map(|s| s.as_slice()))
            .collect();
        let reference = build_dynamic_reference(&sets)?;
        for g in genomes.iter_mut() {
            g.fitness = score(g, &reference)?;
        }
        Ok(reference.len())
    }

    fn summarize(generation: usize, genomes: &[Genome], reference_set_size: usize) -> GenerationLog {
        let best = genomes.iter().min_by(|a, b| by_fitness(a, b)).expect("non-empty");
        GenerationLog {
            generation,
            best_bits: best.label(),
            best_decoded: best.decoded.to_string(),
            best_fitness: best.fitness,
            mean_fitness: genomes.iter().map(|g| g.fitness).sum::<f64>() / genomes.len() as f64,
            reference_set_size,
        }
    }

    /// Random initial parents, scored against their own union.
    pub fn initial_population(&mut self) -> Result<(Vec<Genome>, GenerationLog)> {
        let bits: Vec<Bits> = (0..self.config.mu)
            .map(|_| std::array::from_fn(|_| self.rng.random::<bool>()))
            .collect();
        let mut pop = self.evaluate_new(bits)?;
        let size = Self::rescore(&mut pop)?;
        let log = Self::summarize(0, &pop, size);
        Ok((pop, log))
    }

    fn tournament<'a>(&mut self, parents: &'a [Genome]) -> &'a Genome {
        (0..self.config.tournament_size)
            .map(|_| &parents[self.rng.random_range(0..parents.len())])
            .min_by(|a, b| by_fitness(a, b))
            .expect("tournament size >= 1")
    }

    /// Bits for `lambda` offspring: tournament, uniform crossover, bit flips.
    pub fn breed(&mut self, parents: &[Genome]) -> Vec<Bits> {
        (0..self.config.lambda)
            .map(|_| {
                let a = self.tournament(parents).bits;
                let b = self.tournament(parents).bits;
                let cross = self.rng.random::<f64>() < self.config.crossover_probability;
                let mut child: Bits = std::array::from_fn(|i| {
                    let take_b = self.rng.random::<bool>();
                    if cross && take_b {
                        b[i]
                    } else {
                        a[i]
                    }
                });
                for bit in child.iter_mut() {
                    if self.rng.random::<f64>() < self.config.mutation_probability {
                        *bit = !*bit;
                    }
                }
                child
            })
            .collect()
    }

    /// One (mu + lambda) step.
    pub fn generation(&mut self, generation: usize, parents: Vec<Genome>) -> Result<(Vec<Genome>, GenerationLog)> {
        let bits = self.breed(&parents);
        self.advance(generation, parents, bits)
    }

    /// Evaluates the given offspring bits, rescores parents and offspring
    /// together and keeps the best `mu`.
    pub fn advance(&mut self, generation: usize, parents: Vec<Genome>, offspring: Vec<Bits>) -> Result<(Vec<Genome>, GenerationLog)> {
        let mut pool = parents;
        pool.extend(self.evaluate_new(offspring)?);
        let size = Self::rescore(&mut pool)?;
        pool.sort_by(by_fitness);
        pool.truncate(self.config.mu);
        let log = Self::summarize(generation, &pool, size);
        Ok((pool, log))
    }

    pub fn run(mut self) -> Result<TuneOutcome> {
        let (mut pop, first) = self.initial_population()?;
        let mut log = vec![first];
        for g in 1..=self.config.generations {
            let (next, entry) = self.generation(g, pop)?;
            pop = next;
            log.push(entry);
        }
        pop.sort_by(by_fitness);
        Ok(TuneOutcome {
            best: pop[0].clone(),
            final_population: pop,
            log,
            genome_evaluations: self.genome_evaluations,
            moead_runs: self.moead_runs,
        })
    }
}

pub fn tune(config: &TunerConfig) -> Result<TuneOutcome> {
    Tuner::new(config.clone())?.run()
}

pub fn write_log_csv<W: Write>(out: W, log: &[GenerationLog]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in log {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}
