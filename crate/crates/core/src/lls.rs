//! Logarithmic least squares for incomplete matrices.
//!
//! Minimizing `Σ_{c_ij present} (ln c_ij − ŵ_i + ŵ_j)²` leads to the
//! Laplacian system `L ŵ = b`, `b_i = Σ_{c_ij present} ln c_ij`. `L` is
//! singular (its kernel is spanned by the all-ones vector on a connected
//! graph), so one alternative is pinned at `ŵ_k = 0` by deleting its row and
//! column; the remaining principal block is positive definite.

use crate::error::{Error, Result};
use crate::gm::log_row_sums;
use crate::graph::{graph_of, laplacian};
use crate::linalg::{residual_inf, solve, DenseMatrix};
use crate::pcmatrix::{ensure_rankable, IncompletePcMatrix};
use crate::priority::{Normalization, PriorityVector};

#[derive(Debug, Clone, PartialEq)]
pub struct LlsSystem {
    pub laplacian: DenseMatrix,
    pub rhs: Vec<f64>,
    /// Alternative whose log-weight is fixed at zero.
    pub anchor: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LlsSolution {
    pub log_weights: Vec<f64>,
    /// `‖L ŵ − b‖∞` on the full system.
    pub residual: f64,
}

pub fn build_lls(m: &IncompletePcMatrix, anchor: usize) -> Result<LlsSystem> {
    if anchor >= m.n() {
        return Err(Error::Index {
            index: anchor,
            len: m.n(),
        });
    }
    ensure_rankable(m)?;
    Ok(LlsSystem {
        laplacian: laplacian(&graph_of(m)),
        rhs: log_row_sums(m),
        anchor,
    })
}

pub fn solve_lls_system(system: &LlsSystem) -> Result<LlsSolution> {
    let k = system.anchor;
    let reduced = system.laplacian.without_row_col(k);
    let reduced_rhs: Vec<f64> = system
        .rhs
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != k)
        .map(|(_, v)| *v)
        .collect();
    let mut log_weights = solve(&reduced, &reduced_rhs, true)?;
    log_weights.insert(k, 0.0);
    let residual = residual_inf(&system.laplacian, &log_weights, &system.rhs)?;
    Ok(LlsSolution {
        log_weights,
        residual,
    })
}

pub fn solve_lls(m: &IncompletePcMatrix, anchor: usize) -> Result<LlsSolution> {
    solve_lls_system(&build_lls(m, anchor)?)
}

/// LLS priority vector anchored at the first alternative.
pub fn rank_lls(m: &IncompletePcMatrix, normalization: Normalization) -> Result<PriorityVector> {
    rank_lls_anchored(m, normalization, 0)
}

pub fn rank_lls_anchored(
    m: &IncompletePcMatrix,
    normalization: Normalization,
    anchor: usize,
) -> Result<PriorityVector> {
    let sol = solve_lls(m, anchor)?;
    Ok(PriorityVector::from_log_weights(&sol.log_weights, normalization))
}
