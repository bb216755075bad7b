//! Priority vectors from incomplete pairwise comparison matrices.
//!
//! An `n x n` comparison matrix holds ratios `c_ij ≈ w_i / w_j` between
//! alternatives, some of which may be missing (`?`). This crate derives the
//! weights `w` with three methods:
//!
//! - [`gm`]: the geometric mean method extended to incomplete matrices,
//!   solving `(L + J) ŵ = r` for log-weights (the default),
//! - [`lls`]: logarithmic least squares through the graph Laplacian,
//! - [`harker`]: Harker's eigenvector method on the auxiliary matrix `B`.
//!
//! The first two coincide on every connected input; both minimize the
//! log-squared error `S*(C)` over the present comparisons ([`metrics`]).
//!
//! ```
//! use pcrank::{parse_matrix, rank_gm, Normalization};
//!
//! let m = parse_matrix("1,?,?,2\n?,1,3,?\n?,1/3,1,2\n1/2,?,1/2,1").unwrap();
//! let w = rank_gm(&m, Normalization::SumToOne).unwrap();
//! assert!((w.weights()[1] - 6.0 / 11.0).abs() < 1e-12);
//! ```

// `!(x > t)` is used on purpose so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod gm;
pub mod graph;
pub mod harker;
pub mod linalg;
pub mod lls;
pub mod metrics;
pub mod pcmatrix;
pub mod priority;

pub use error::{Error, Result};
pub use gm::{build_system, complete_matrix, rank_gm, GmSystem};
pub use graph::{graph_of, is_connected, laplacian, ComparisonGraph};
pub use harker::{build_harker, rank_harker, HarkerSystem};
pub use linalg::DenseMatrix;
pub use lls::{rank_lls, rank_lls_anchored, LlsSystem};
pub use metrics::{compare_rankings, method_report, ordinal_ranking, s_complete, s_star, Method, MethodReport};
pub use pcmatrix::{
    parse_matrix, serialize_matrix, validate, Entry, IncompletePcMatrix, ValidationReport, Violation,
    ViolationKind, DEFAULT_RECIPROCITY_TOL,
};
pub use priority::{Normalization, PriorityVector};
