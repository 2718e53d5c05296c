//! WFG1-4 and their objective-negated Minus variants.
//!
//! Decision variable `i` (0-based) ranges over `[0, 2(i+1)]`. The first `k`
//! variables are position parameters, the remaining `l` are distance
//! parameters. Objectives are built as `f_m = x_M + 2m * h_m(x_1..x_{M-1})`.

mod front;
mod wfg;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};

pub use front::{
    front_file_name, read_front_file, sample_reference_front, write_front_file, DistanceSetting,
    DEFAULT_FRONT_SIZE,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ProblemId {
    #[serde(rename = "WFG1")]
    Wfg1,
    #[serde(rename = "WFG2")]
    Wfg2,
    #[serde(rename = "WFG3")]
    Wfg3,
    #[serde(rename = "WFG4")]
    Wfg4,
    #[serde(rename = "MinusWFG1", alias = "Minus-WFG1")]
    MinusWfg1,
    #[serde(rename = "MinusWFG2", alias = "Minus-WFG2")]
    MinusWfg2,
    #[serde(rename = "MinusWFG3", alias = "Minus-WFG3")]
    MinusWfg3,
    #[serde(rename = "MinusWFG4", alias = "Minus-WFG4")]
    MinusWfg4,
}

impl ProblemId {
    pub const ALL: [ProblemId; 8] = [
        ProblemId::Wfg1,
        ProblemId::Wfg2,
        ProblemId::Wfg3,
        ProblemId::Wfg4,
        ProblemId::MinusWfg1,
        ProblemId::MinusWfg2,
        ProblemId::MinusWfg3,
        ProblemId::MinusWfg4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProblemId::Wfg1 => "WFG1",
            ProblemId::Wfg2 => "WFG2",
            ProblemId::Wfg3 => "WFG3",
            ProblemId::Wfg4 => "WFG4",
            ProblemId::MinusWfg1 => "MinusWFG1",
            ProblemId::MinusWfg2 => "MinusWFG2",
            ProblemId::MinusWfg3 => "MinusWFG3",
            ProblemId::MinusWfg4 => "MinusWFG4",
        }
    }

    pub fn is_minus(self) -> bool {
        matches!(
            self,
            ProblemId::MinusWfg1 | ProblemId::MinusWfg2 | ProblemId::MinusWfg3 | ProblemId::MinusWfg4
        )
    }

    /// The un-negated problem a Minus variant is built from.
    pub fn base(self) -> ProblemId {
        match self {
            ProblemId::MinusWfg1 => ProblemId::Wfg1,
            ProblemId::MinusWfg2 => ProblemId::Wfg2,
            ProblemId::MinusWfg3 => ProblemId::Wfg3,
            ProblemId::MinusWfg4 => ProblemId::Wfg4,
            other => other,
        }
    }

    pub fn minus(self) -> ProblemId {
        match self.base() {
            ProblemId::Wfg1 => ProblemId::MinusWfg1,
            ProblemId::Wfg2 => ProblemId::MinusWfg2,
            ProblemId::Wfg3 => ProblemId::MinusWfg3,
            _ => ProblemId::MinusWfg4,
        }
    }
}

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .chars()
            .filter(|c| *c != '-' && *c != '_')
            .collect::<String>()
            .to_ascii_uppercase();
        ProblemId::ALL
            .into_iter()
            .find(|p| p.name().to_ascii_uppercase() == norm)
            .ok_or_else(|| Error::InvalidInput(format!("unknown problem '{s}'")))
    }
}

/// A concrete WFG instance: objective count plus the position/distance split.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemInstance {
    pub id: ProblemId,
    pub objectives: usize,
    pub position_params: usize,
    pub distance_params: usize,
    pub lower_bounds: Vec<f64>,
    pub upper_bounds: Vec<f64>,
}

impl ProblemInstance {
    pub fn new(
        id: ProblemId,
        objectives: usize,
        position_params: usize,
        distance_params: usize,
    ) -> Result<Self> {
        if objectives < 2 {
            return Err(Error::InvalidConfig("WFG needs at least 2 objectives".into()));
        }
        if position_params == 0 || !position_params.is_multiple_of(objectives - 1) {
            return Err(Error::InvalidConfig(format!(
                "k = {position_params} must be a positive multiple of M - 1 = {}",
                objectives - 1
            )));
        }
        if distance_params == 0 {
            return Err(Error::InvalidConfig("l must be at least 1".into()));
        }
        if matches!(id.base(), ProblemId::Wfg2 | ProblemId::Wfg3) && !distance_params.is_multiple_of(2) {
            return Err(Error::InvalidConfig(format!(
                "{id} needs an even number of distance parameters, got {distance_params}"
            )));
        }
        let n = position_params + distance_params;
        Ok(Self {
            id,
            objectives,
            position_params,
            distance_params,
            lower_bounds: vec![0.0; n],
            upper_bounds: (1..=n).map(|i| 2.0 * i as f64).collect(),
        })
    }

    /// M = 3, k = 4, l = 20 (D = 24).
    pub fn standard(id: ProblemId) -> Self {
        Self::with_objectives(id, 3).expect("standard WFG parameters are valid")
    }

    /// k = 2(M - 1), l = 20.
    pub fn with_objectives(id: ProblemId, objectives: usize) -> Result<Self> {
        Self::new(id, objectives, 2 * objectives.saturating_sub(1).max(1), 20)
    }

    pub fn dimension(&self) -> usize {
        self.position_params + self.distance_params
    }

    pub fn evaluate(&self, x: &[f64]) -> Result<Vec<f64>> {
        check_len(self.dimension(), x.len())?;
        for (i, &v) in x.iter().enumerate() {
            let (lo, hi) = (self.lower_bounds[i], self.upper_bounds[i]);
            if !(lo..=hi).contains(&v) {
                return Err(Error::OutOfBounds {
                    index: i,
                    value: v,
                    lower: lo,
                    upper: hi,
                });
            }
        }
        let mut f = self.wfg_objectives(x);
        if self.id.is_minus() {
            f.iter_mut().for_each(|v| *v = -*v);
        }
        Ok(f)
    }

    /// Reduced values `t_1..t_M` after the last transformation.
    pub(crate) fn transformed(&self, z: &[f64]) -> Vec<f64> {
        let k = self.position_params;
        let m = self.objectives;
        let n = z.len();
        let mut y: Vec<f64> = z
            .iter()
            .zip(&self.upper_bounds)
            .map(|(v, u)| (v / u).clamp(0.0, 1.0))
            .collect();
        let group = k / (m - 1);
        match self.id.base() {
            ProblemId::Wfg1 => {
                for v in &mut y[k..] {
                    *v = wfg::s_linear(*v, 0.35);
                }
                for v in &mut y[k..] {
                    *v = wfg::b_flat(*v, 0.8, 0.75, 0.85);
                }
                for v in &mut y {
                    *v = wfg::b_poly(*v, 0.02);
                }
                let w: Vec<f64> = (1..=n).map(|i| 2.0 * i as f64).collect();
                let mut t: Vec<f64> = (0..m - 1)
                    .map(|i| {
                        let r = i * group..(i + 1) * group;
                        wfg::r_sum(&y[r.clone()], &w[r])
                    })
                    .collect();
                t.push(wfg::r_sum(&y[k..], &w[k..]));
                t
            }
            ProblemId::Wfg2 | ProblemId::Wfg3 => {
                for v in &mut y[k..] {
                    *v = wfg::s_linear(*v, 0.35);
                }
                let mut reduced: Vec<f64> = y[..k].to_vec();
                reduced.extend(y[k..].chunks(2).map(|pair| wfg::r_nonsep(pair, 2)));
                let ones = vec![1.0; reduced.len()];
                let mut t: Vec<f64> = (0..m - 1)
                    .map(|i| {
                        let r = i * group..(i + 1) * group;
                        wfg::r_sum(&reduced[r.clone()], &ones[r])
                    })
                    .collect();
                t.push(wfg::r_sum(&reduced[k..], &ones[k..]));
                t
            }
            _ => {
                for v in &mut y {
                    *v = wfg::s_multi(*v, 30.0, 10.0, 0.35);
                }
                let ones = vec![1.0; n];
                let mut t: Vec<f64> = (0..m - 1)
                    .map(|i| {
                        let r = i * group..(i + 1) * group;
                        wfg::r_sum(&y[r.clone()], &ones[r])
                    })
                    .collect();
                t.push(wfg::r_sum(&y[k..], &ones[k..]));
                t
            }
        }
    }

    /// Objectives of the base WFG problem from reduced values `t`.
    pub(crate) fn shape_objectives(&self, t: &[f64]) -> Vec<f64> {
        let m = self.objectives;
        let t_last = t[m - 1];
        let degenerate = self.id.base() == ProblemId::Wfg3;
        let x: Vec<f64> = (0..m - 1)
            .map(|i| {
                let a = if degenerate && i > 0 { 0.0 } else { 1.0 };
                t_last.max(a) * (t[i] - 0.5) + 0.5
            })
            .collect();
        (1..=m)
            .map(|obj| {
                let h = match self.id.base() {
                    ProblemId::Wfg1 if obj == m => wfg::mixed(&x, 5.0, 1.0),
                    ProblemId::Wfg1 => wfg::convex(&x, obj),
                    ProblemId::Wfg2 if obj == m => wfg::disc(&x, 5.0, 1.0, 1.0),
                    ProblemId::Wfg2 => wfg::convex(&x, obj),
                    ProblemId::Wfg3 => wfg::linear(&x, obj),
                    _ => wfg::concave(&x, obj),
                };
                t_last + 2.0 * obj as f64 * h
            })
            .collect()
    }

    fn wfg_objectives(&self, z: &[f64]) -> Vec<f64> {
        let t = self.transformed(z);
        self.shape_objectives(&t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_layout() {
        let p = ProblemInstance::standard(ProblemId::Wfg2);
        assert_eq!(p.dimension(), 24);
        assert_eq!(p.position_params, 4);
        assert_eq!(p.upper_bounds[0], 2.0);
        assert_eq!(p.upper_bounds[23], 48.0);
        assert!(p.lower_bounds.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn rejects_bad_inputs() {
        let p = ProblemInstance::standard(ProblemId::Wfg1);
        assert!(matches!(
            p.evaluate(&[0.0; 3]),
            Err(Error::DimensionMismatch { .. })
        ));
        let mut x = vec![0.0; 24];
        x[1] = 4.5;
        assert!(matches!(p.evaluate(&x), Err(Error::OutOfBounds { index: 1, .. })));
        x[1] = -0.1;
        assert!(p.evaluate(&x).is_err());
    }

    #[test]
    fn rejects_bad_parameterisation() {
        assert!(ProblemInstance::new(ProblemId::Wfg1, 3, 3, 20).is_err());
        assert!(ProblemInstance::new(ProblemId::Wfg2, 3, 4, 21).is_err());
        assert!(ProblemInstance::new(ProblemId::Wfg4, 3, 4, 21).is_ok());
        assert!(ProblemInstance::new(ProblemId::Wfg4, 3, 4, 0).is_err());
    }

    #[test]
    fn ids_parse_both_spellings() {
        assert_eq!("Minus-WFG2".parse::<ProblemId>().unwrap(), ProblemId::MinusWfg2);
        assert_eq!("minuswfg3".parse::<ProblemId>().unwrap(), ProblemId::MinusWfg3);
        assert_eq!("WFG4".parse::<ProblemId>().unwrap(), ProblemId::Wfg4);
        assert!("DTLZ1".parse::<ProblemId>().is_err());
        let json = serde_json::to_string(&ProblemId::MinusWfg1).unwrap();
        assert_eq!(json, "\"MinusWFG1\"");
        let back: ProblemId = serde_json::from_str("\"Minus-WFG1\"").unwrap();
        assert_eq!(back, ProblemId::MinusWfg1);
    }

    #[test]
    fn optimal_distance_reaches_the_front() {
        // Distance parameters at 0.35 of their range put t_M at 0. WFG1 is
        // excluded: 0.35 * 12 / 12 != 0.35 in floating point, and the
        // polynomial bias turns that residue into t_M near 0.07.
        for id in [ProblemId::Wfg2, ProblemId::Wfg3, ProblemId::Wfg4] {
            let p = ProblemInstance::standard(id);
            let mut z = vec![1.0, 2.0, 0.5, 4.0];
            z.extend(p.distance_values(DistanceSetting::Optimal));
            let t = p.transformed(&z);
            assert!(t[2].abs() < 1e-12, "{id}: t_M = {}", t[2]);
        }
    }
}
