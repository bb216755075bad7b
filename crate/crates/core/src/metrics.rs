//! Logarithmic least squares error functionals and utilities for putting the
//! ranking methods side by side.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gm::solve_gm;
use crate::harker::solve_harker;
use crate::lls::solve_lls;
use crate::linalg::PowerOptions;
use crate::pcmatrix::IncompletePcMatrix;
use crate::priority::{Normalization, PriorityVector};

/// Weights closer than this (relative) share a rank.
pub const TIE_TOL: f64 = 1e-9;

fn check_len(m: &IncompletePcMatrix, w: &[f64]) -> Result<()> {
    if w.len() != m.n() {
        return Err(Error::DimensionMismatch {
            expected: m.n(),
            found: w.len(),
        });
    }
    Ok(())
}

/// `S(C) = Σ_{i,j} (ln c_ij − ln(w_i / w_j))²` over a complete matrix. The
/// diagonal is included and contributes zero.
pub fn s_complete(c: &IncompletePcMatrix, w: &[f64]) -> Result<f64> {
    if !c.is_complete() {
        return Err(Error::IncompleteInput);
    }
    s_star(c, w)
}

/// `S*(C)`: the same sum restricted to present entries.
pub fn s_star(c: &IncompletePcMatrix, w: &[f64]) -> Result<f64> {
    check_len(c, w)?;
    let logw: Vec<f64> = w.iter().map(|x| x.ln()).collect();
    let n = c.n();
    let mut total = 0.0;
    for i in 0..n {
        for j in 0..n {
            if let Some(v) = c.get(i, j).value() {
                let d = v.ln() - (logw[i] - logw[j]);
                total += d * d;
            }
        }
    }
    Ok(total)
}

/// Alternatives ordered from most to least preferred, with ties grouped.
/// Within a group, input order is kept.
pub fn ordinal_ranking(w: &[f64]) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by(|&a, &b| w[b].total_cmp(&w[a]).then(a.cmp(&b)));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for idx in order {
        match groups.last_mut() {
            Some(g) if tied(w[g[0]], w[idx]) => g.push(idx),
            _ => groups.push(vec![idx]),
        }
    }
    for g in &mut groups {
        g.sort_unstable();
    }
    groups
}

fn tied(a: f64, b: f64) -> bool {
    (a - b).abs() <= TIE_TOL * a.abs().max(b.abs())
}

/// `a2 > a1 = a3 > a4`.
pub fn format_ordinal(groups: &[Vec<usize>], labels: &[String]) -> String {
    groups
        .iter()
        .map(|g| {
            g.iter()
                .map(|&i| labels[i].as_str())
                .collect::<Vec<_>>()
                .join(" = ")
        })
        .collect::<Vec<_>>()
        .join(" > ")
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RankingComparison {
    pub max_abs_diff: f64,
    pub ordinal_equal: bool,
}

pub fn compare_rankings(a: &PriorityVector, b: &PriorityVector) -> Result<RankingComparison> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    let max_abs_diff = a
        .weights()
        .iter()
        .zip(b.weights())
        .fold(0.0_f64, |acc, (x, y)| acc.max((x - y).abs()));
    Ok(RankingComparison {
        max_abs_diff,
        ordinal_equal: ordinal_ranking(a.weights()) == ordinal_ranking(b.weights()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Gm,
    Lls,
    Harker,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Gm, Method::Lls, Method::Harker];

    pub fn rank(self, m: &IncompletePcMatrix, normalization: Normalization) -> Result<PriorityVector> {
        Ok(method_report(m, self, normalization)?.priorities)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Gm => "gm",
            Method::Lls => "lls",
            Method::Harker => "harker",
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gm" => Ok(Method::Gm),
            "lls" => Ok(Method::Lls),
            "harker" => Ok(Method::Harker),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Diagnostics {
    /// Linear-system residual (gm, lls) or eigen-residual (harker).
    pub residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iterations: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_max: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MethodReport {
    pub method: Method,
    pub priorities: PriorityVector,
    pub s_star: f64,
    pub ordinal_ranking: Vec<Vec<usize>>,
    pub diagnostics: Diagnostics,
}

/// Runs one method and collects weights, `S*(C)`, order and diagnostics.
pub fn method_report(
    m: &IncompletePcMatrix,
    method: Method,
    normalization: Normalization,
) -> Result<MethodReport> {
    let (priorities, diagnostics) = match method {
        Method::Gm => {
            let sol = solve_gm(m)?;
            (
                PriorityVector::from_log_weights(&sol.log_weights, normalization),
                Diagnostics {
                    residual: sol.residual,
                    iterations: None,
                    lambda_max: None,
                },
            )
        }
        Method::Lls => {
            let sol = solve_lls(m, 0)?;
            (
                PriorityVector::from_log_weights(&sol.log_weights, normalization),
                Diagnostics {
                    residual: sol.residual,
                    iterations: None,
                    lambda_max: None,
                },
            )
        }
        Method::Harker => {
            let pair = solve_harker(m, PowerOptions::default())?;
            (
                PriorityVector::new(pair.vector, normalization),
                Diagnostics {
                    residual: pair.residual,
                    iterations: Some(pair.iterations),
                    lambda_max: Some(pair.value),
                },
            )
        }
    };
    let s_star = s_star(m, priorities.weights())?;
    let ordinal_ranking = ordinal_ranking(priorities.weights());
    Ok(MethodReport {
        method,
        priorities,
        s_star,
        ordinal_ranking,
        diagnostics,
    })
}
