use std::fmt;
use std::str::FromStr;

use serde::Serialize;

/// How a priority vector is scaled. Weights are only defined up to a positive
/// factor, so this just picks a representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    /// `Σ w_i = 1`.
    #[default]
    #[serde(rename = "sum")]
    SumToOne,
    /// `max w_i = 1`.
    #[serde(rename = "max")]
    MaxToOne,
    /// Raw solver output (for the log-linear methods, `w_i = exp(ŵ_i)`).
    #[serde(rename = "none")]
    Unscaled,
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Normalization::SumToOne => "sum",
            Normalization::MaxToOne => "max",
            Normalization::Unscaled => "none",
        })
    }
}

impl FromStr for Normalization {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sum" => Ok(Normalization::SumToOne),
            "max" => Ok(Normalization::MaxToOne),
            "none" => Ok(Normalization::Unscaled),
            other => Err(format!("unknown normalization `{other}`")),
        }
    }
}

/// Positive weights, one per alternative, in input order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PriorityVector {
    weights: Vec<f64>,
    normalization: Normalization,
}

impl PriorityVector {
    /// Scales `raw` according to `normalization`. `raw` must be positive.
    pub fn new(raw: Vec<f64>, normalization: Normalization) -> Self {
        debug_assert!(raw.iter().all(|w| *w > 0.0 && w.is_finite()), "{raw:?}");
        let scale = match normalization {
            Normalization::SumToOne => raw.iter().sum::<f64>(),
            Normalization::MaxToOne => raw.iter().fold(0.0_f64, |m, w| m.max(*w)),
            Normalization::Unscaled => 1.0,
        };
        let weights = if scale == 1.0 {
            raw
        } else {
            raw.into_iter().map(|w| w / scale).collect()
        };
        Self {
            weights,
            normalization,
        }
    }

    /// `exp(ŵ_i)` for log-weights `ŵ`, then normalized.
    pub fn from_log_weights(log_weights: &[f64], normalization: Normalization) -> Self {
        Self::new(log_weights.iter().map(|x| x.exp()).collect(), normalization)
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn renormalized(&self, normalization: Normalization) -> Self {
        Self::new(self.weights.clone(), normalization)
    }

    pub fn into_weights(self) -> Vec<f64> {
        self.weights
    }
}

impl AsRef<[f64]> for PriorityVector {
    fn as_ref(&self) -> &[f64] {
        &self.weights
    }
}
