//! Geometric mean ranking for incomplete matrices.
//!
//! Every missing `c_ij` is replaced by the unknown ratio `w_i / w_j` and the
//! row geometric means of the completed matrix are required to reproduce
//! `w`. Taking logarithms turns this fixed point into the linear system
//! `M ŵ = r` with `ŵ_i = ln w_i`, where
//!
//! ```text
//! m_ii = n − S_i              (S_i = missing entries in row i)
//! m_ij = 0   if c_ij present
//! m_ij = 1   if c_ij missing
//! r_i  = Σ_{c_ij present} ln c_ij
//! ```
//!
//! Equivalently `M = L + J` with `L` the Laplacian of the comparison graph
//! and `J` the all-ones matrix, which is symmetric positive definite whenever
//! the graph is connected.

use crate::error::{Error, Result};
use crate::graph::{graph_of, laplacian};
use crate::linalg::{residual_inf, solve, DenseMatrix};
use crate::pcmatrix::{ensure_rankable, Entry, IncompletePcMatrix};
use crate::priority::{Normalization, PriorityVector};

/// The linear system `M ŵ = r`.
#[derive(Debug, Clone, PartialEq)]
pub struct GmSystem {
    pub matrix: DenseMatrix,
    pub rhs: Vec<f64>,
    /// `S_i` per row.
    pub missing_counts: Vec<usize>,
}

/// Log-weights solving the system, and how well they solve it.
#[derive(Debug, Clone, PartialEq)]
pub struct GmSolution {
    pub log_weights: Vec<f64>,
    /// `‖M ŵ − r‖∞`.
    pub residual: f64,
}

/// Sum of `ln c_ij` over present off-diagonal entries of row `i`.
pub(crate) fn log_row_sums(m: &IncompletePcMatrix) -> Vec<f64> {
    (0..m.n())
        .map(|i| {
            m.row(i)
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .filter_map(|(_, e)| e.value())
                .map(f64::ln)
                .sum()
        })
        .collect()
}

pub fn build_system(m: &IncompletePcMatrix) -> Result<GmSystem> {
    ensure_rankable(m)?;
    let n = m.n();
    let missing_counts: Vec<usize> = (0..n).map(|i| m.missing_in_row(i)).collect();
    let mut matrix = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            matrix[(i, j)] = if i == j {
                (n - missing_counts[i]) as f64
            } else if m.get(i, j).is_missing() {
                1.0
            } else {
                0.0
            };
        }
    }
    debug_assert_eq!(
        matrix,
        laplacian(&graph_of(m)).add(&DenseMatrix::ones(n)).unwrap()
    );
    Ok(GmSystem {
        matrix,
        rhs: log_row_sums(m),
        missing_counts,
    })
}

/// Solves `M ŵ = r` by Cholesky.
pub fn solve_system(system: &GmSystem) -> Result<GmSolution> {
    let log_weights = solve(&system.matrix, &system.rhs, true)?;
    let residual = residual_inf(&system.matrix, &log_weights, &system.rhs)?;
    Ok(GmSolution {
        log_weights,
        residual,
    })
}

pub fn solve_gm(m: &IncompletePcMatrix) -> Result<GmSolution> {
    solve_system(&build_system(m)?)
}

/// Geometric mean priority vector of an incomplete matrix.
pub fn rank_gm(m: &IncompletePcMatrix, normalization: Normalization) -> Result<PriorityVector> {
    let sol = solve_gm(m)?;
    Ok(PriorityVector::from_log_weights(&sol.log_weights, normalization))
}

/// The completed matrix `C*`: each missing `c_ij` becomes `w_i / w_j` for the
/// geometric mean weights, computed as `exp(ŵ_i − ŵ_j)` so that reciprocity
/// holds to machine precision. Present entries are kept.
pub fn complete_matrix(m: &IncompletePcMatrix) -> Result<IncompletePcMatrix> {
    if m.is_complete() {
        ensure_rankable(m)?;
        return Ok(m.clone());
    }
    let lw = solve_gm(m)?.log_weights;
    Ok(m.map_entries(|i, j, e| match e {
        Entry::Missing => Entry::Ratio((lw[i] - lw[j]).exp()),
        present => present,
    }))
}

/// Classical geometric mean of each row of a complete matrix.
pub fn row_geometric_means(m: &IncompletePcMatrix) -> Result<Vec<f64>> {
    if !m.is_complete() {
        return Err(Error::IncompleteInput);
    }
    let n = m.n() as f64;
    Ok((0..m.n())
        .map(|i| {
            let log_sum: f64 = m.row(i).iter().filter_map(|e| e.value()).map(f64::ln).sum();
            (log_sum / n).exp()
        })
        .collect())
}
