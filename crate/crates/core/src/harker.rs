//! Harker's eigenvector method for incomplete matrices.
//!
//! Filling each missing `c_ij` with `w_i / w_j` and asking for the principal
//! eigenvector of the completed matrix is the same as the eigenproblem
//! `B w = λ w` with
//!
//! ```text
//! b_ij = 0          c_ij missing, i ≠ j
//! b_ij = c_ij       c_ij present, i ≠ j
//! b_ii = s_i + 1    s_i = missing entries in row i
//! ```
//!
//! `B` is nonnegative with a positive diagonal and irreducible for connected
//! graphs, hence primitive; plain power iteration converges.

use crate::error::Result;
use crate::linalg::{power_iteration, DenseMatrix, EigenPair, PowerOptions};
use crate::pcmatrix::{ensure_rankable, IncompletePcMatrix};
use crate::priority::{Normalization, PriorityVector};

#[derive(Debug, Clone, PartialEq)]
pub struct HarkerSystem {
    pub matrix: DenseMatrix,
    pub missing_counts: Vec<usize>,
}

pub fn build_harker(m: &IncompletePcMatrix) -> Result<HarkerSystem> {
    ensure_rankable(m)?;
    let n = m.n();
    let missing_counts: Vec<usize> = (0..n).map(|i| m.missing_in_row(i)).collect();
    let mut matrix = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            matrix[(i, j)] = if i == j {
                (missing_counts[i] + 1) as f64
            } else {
                m.get(i, j).value().unwrap_or(0.0)
            };
        }
    }
    Ok(HarkerSystem {
        matrix,
        missing_counts,
    })
}

/// Principal eigenpair of `B`. The eigenvector has unit ℓ¹ norm.
pub fn solve_harker(m: &IncompletePcMatrix, opts: PowerOptions) -> Result<EigenPair> {
    power_iteration(&build_harker(m)?.matrix, opts)
}

pub fn rank_harker(m: &IncompletePcMatrix, normalization: Normalization) -> Result<PriorityVector> {
    let pair = solve_harker(m, PowerOptions::default())?;
    Ok(PriorityVector::new(pair.vector, normalization))
}
