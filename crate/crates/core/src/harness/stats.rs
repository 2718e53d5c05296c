//! Cell summaries, median-run selection and the two-sided rank-sum test.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Summary of one grid cell's per-run IGD values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellSummary {
    pub mean: f64,
    /// Sample standard deviation (n - 1 denominator); 0 for one run.
    pub std: f64,
    pub igds: Vec<f64>,
    pub median_run: usize,
}

impl CellSummary {
    pub fn from_igds(igds: Vec<f64>) -> Result<Self> {
        let median_run = select_median_run(&igds)?;
        let n = igds.len() as f64;
        let mean = igds.iter().sum::<f64>() / n;
        let std = if igds.len() > 1 {
            (igds.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0)).sqrt()
        } else {
            0.0
        };
        Ok(Self {
            mean,
            std,
            igds,
            median_run,
        })
    }
}

/// Index of the median run by IGD. Even counts take the lower of the two
/// middle runs; equal IGDs are ordered by run index.
pub fn select_median_run(igds: &[f64]) -> Result<usize> {
    if igds.is_empty() {
        return Err(Error::Empty("cell"));
    }
    let mut order: Vec<usize> = (0..igds.len()).collect();
    order.sort_by(|&a, &b| igds[a].total_cmp(&igds[b]).then(a.cmp(&b)));
    Ok(order[(igds.len() - 1) / 2])
}

/// Outcome for sample A relative to sample B, where smaller is better.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "+")]
    Better,
    #[serde(rename = "-")]
    Worse,
    #[serde(rename = "=")]
    Similar,
}

impl Verdict {
    pub fn symbol(self) -> &'static str {
        match self {
            Verdict::Better => "+",
            Verdict::Worse => "-",
            Verdict::Similar => "=",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RankSumOutcome {
    /// Mann-Whitney U of sample A: pairs with a > b plus half the ties.
    pub statistic: f64,
    pub p_value: f64,
    pub verdict: Verdict,
    /// Whether the p-value came from full enumeration.
    pub exact: bool,
}

/// Largest per-sample size for which the null distribution is enumerated.
pub const EXACT_LIMIT: usize = 10;

/// Midranks (1-based) of `values`.
pub fn midranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let r = (i + j) as f64 / 2.0 + 1.0;
        for &k in &order[i..=j] {
            ranks[k] = r;
        }
        i = j + 1;
    }
    ranks
}

/// Two-sided rank-sum test. The p-value is exact when both samples have at
/// most [`EXACT_LIMIT`] values, otherwise it uses the tie-corrected normal
/// approximation with continuity correction.
pub fn wilcoxon_rank_sum(a: &[f64], b: &[f64], alpha: f64) -> Result<RankSumOutcome> {
    if a.len() < 2 || b.len() < 2 {
        return Err(Error::InvalidInput("rank-sum samples need at least 2 values each".into()));
    }
    if a.iter().chain(b).any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput("rank-sum samples must be finite".into()));
    }
    let (na, nb) = (a.len(), b.len());
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let ranks = midranks(&pooled);
    let rank_sum_a: f64 = ranks[..na].iter().sum();
    let u = rank_sum_a - (na * (na + 1)) as f64 / 2.0;
    let mean_u = (na * nb) as f64 / 2.0;

    if pooled.iter().all(|&v| v == pooled[0]) {
        return Ok(RankSumOutcome {
            statistic: u,
            p_value: 1.0,
            verdict: Verdict::Similar,
            exact: na <= EXACT_LIMIT && nb <= EXACT_LIMIT,
        });
    }

    let (p_value, exact) = if na <= EXACT_LIMIT && nb <= EXACT_LIMIT {
        (exact_p_value(&ranks, na, rank_sum_a), true)
    } else {
        (normal_p_value(&pooled, na, nb, u), false)
    };
    let verdict = if p_value < alpha {
        if u < mean_u {
            Verdict::Better
        } else {
            Verdict::Worse
        }
    } else {
        Verdict::Similar
    };
    Ok(RankSumOutcome {
        statistic: u,
        p_value,
        verdict,
        exact,
    })
}

fn normal_p_value(pooled: &[f64], na: usize, nb: usize, u: f64) -> f64 {
    let n = (na + nb) as f64;
    let mut sorted = pooled.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let j = sorted[i..].iter().take_while(|&&v| v == sorted[i]).count();
        let t = j as f64;
        tie_term += t * t * t - t;
        i += j;
    }
    let var = (na * nb) as f64 / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if var <= 0.0 {
        return 1.0;
    }
    let z = ((u - (na * nb) as f64 / 2.0).abs() - 0.5).max(0.0) / var.sqrt();
    libm::erfc(z / std::f64::consts::SQRT_2).min(1.0)
}

/// P(|R - E[R]| >= |observed - E[R]|) over all equally likely assignments of
/// the pooled midranks to sample A. Midranks are doubled so that every sum is
/// an integer and comparisons are exact.
fn exact_p_value(ranks: &[f64], na: usize, rank_sum_a: f64) -> f64 {
    let doubled: Vec<usize> = ranks.iter().map(|r| (2.0 * r).round() as usize).collect();
    let max_sum: usize = doubled.iter().sum();
    // ways[j][s]: subsets of size j with doubled rank sum s.
    let mut ways = vec![vec![0u64; max_sum + 1]; na + 1];
    ways[0][0] = 1;
    for &r in &doubled {
        for j in (1..=na).rev() {
            for s in (r..=max_sum).rev() {
                ways[j][s] += ways[j - 1][s - r];
            }
        }
    }
    let total: u64 = ways[na].iter().sum();
    // 2 * E[2R] = 2 * na * max_sum / n, kept integral by scaling.
    let n = ranks.len() as i64;
    let centre_x_n = na as i64 * max_sum as i64;
    let obs = (2.0 * rank_sum_a).round() as i64;
    let obs_dev = (obs * n - centre_x_n).abs();
    let hits: u64 = ways[na]
        .iter()
        .enumerate()
        .filter(|&(s, _)| (s as i64 * n - centre_x_n).abs() >= obs_dev)
        .map(|(_, &c)| c)
        .sum();
    hits as f64 / total as f64
}
