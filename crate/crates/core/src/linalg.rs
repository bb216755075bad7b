//! Minimal dense linear algebra: row-major matrices, direct solves through
//! Cholesky or partially pivoted LU, and power iteration for the dominant
//! eigenpair of a nonnegative matrix.
//!
//! Problem sizes here are tiny (a handful to a few dozen alternatives), so
//! everything is dense and allocation-light rather than clever.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};

/// Pivots at or below this fraction of the matrix max-norm are treated as zero.
pub const PIVOT_TOL: f64 = 1e-12;

/// Dense row-major matrix of `f64`.
#[derive(Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// `n x n` matrix of ones.
    pub fn ones(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            data: vec![1.0; n * n],
        }
    }

    /// Builds a matrix from nested rows. All rows must have the same length.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            let row = row.as_ref();
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(Self {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Largest absolute entry.
    pub fn max_norm(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Entrywise `self + other`.
    pub fn add(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    /// Entrywise `self - other`.
    pub fn sub(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &DenseMatrix, f: impl Fn(f64, f64) -> f64) -> Result<DenseMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    /// Principal submatrix with row and column `k` removed.
    pub fn without_row_col(&self, k: usize) -> DenseMatrix {
        let keep: Vec<usize> = (0..self.rows).filter(|&i| i != k).collect();
        let mut out = DenseMatrix::zeros(keep.len(), keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                out[(a, b)] = self[(i, j)];
            }
        }
        out
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i)))
            .finish()
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| format!("{v:>9.4}")).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

fn check_system(a: &DenseMatrix, rhs: &[f64]) -> Result<()> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: a.cols(),
        });
    }
    if rhs.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: rhs.len(),
        });
    }
    Ok(())
}

/// Lower-triangular Cholesky factor `L` with `A = L Lᵀ`.
#[derive(Debug, Clone)]
pub struct Cholesky {
    lower: DenseMatrix,
}

impl Cholesky {
    /// Factorizes a symmetric matrix. Only the lower triangle of `a` is read.
    pub fn factor(a: &DenseMatrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::DimensionMismatch {
                expected: a.rows(),
                found: a.cols(),
            });
        }
        let n = a.rows();
        let threshold = PIVOT_TOL * a.max_norm();
        let mut l = DenseMatrix::zeros(n, n);
        for j in 0..n {
            let mut d = a[(j, j)];
            for k in 0..j {
                d -= l[(j, k)] * l[(j, k)];
            }
            if !(d > threshold) {
                return Err(Error::NotPositiveDefinite { pivot_col: j });
            }
            let d = d.sqrt();
            l[(j, j)] = d;
            for i in j + 1..n {
                let mut s = a[(i, j)];
                for k in 0..j {
                    s -= l[(i, k)] * l[(j, k)];
                }
                l[(i, j)] = s / d;
            }
        }
        Ok(Self { lower: l })
    }

    pub fn lower(&self) -> &DenseMatrix {
        &self.lower
    }

    pub fn solve(&self, rhs: &[f64]) -> Result<Vec<f64>> {
        check_system(&self.lower, rhs)?;
        let l = &self.lower;
        let n = l.rows();
        let mut y = rhs.to_vec();
        for i in 0..n {
            for k in 0..i {
                y[i] -= l[(i, k)] * y[k];
            }
            y[i] /= l[(i, i)];
        }
        for i in (0..n).rev() {
            for k in i + 1..n {
                y[i] -= l[(k, i)] * y[k];
            }
            y[i] /= l[(i, i)];
        }
        Ok(y)
    }
}

/// LU factorization with partial (row) pivoting, `P A = L U`.
#[derive(Debug, Clone)]
pub struct Lu {
    // Unit-lower L below the diagonal, U on and above it.
    packed: DenseMatrix,
    perm: Vec<usize>,
}

impl Lu {
    pub fn factor(a: &DenseMatrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::DimensionMismatch {
                expected: a.rows(),
                found: a.cols(),
            });
        }
        let n = a.rows();
        let threshold = PIVOT_TOL * a.max_norm();
        let mut m = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let (p, pivot) = (k..n)
                .map(|i| (i, m[(i, k)].abs()))
                .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if !(pivot > threshold) {
                return Err(Error::SingularMatrix { pivot_col: k });
            }
            if p != k {
                for j in 0..n {
                    let tmp = m[(k, j)];
                    m[(k, j)] = m[(p, j)];
                    m[(p, j)] = tmp;
                }
                perm.swap(k, p);
            }
            for i in k + 1..n {
                let factor = m[(i, k)] / m[(k, k)];
                m[(i, k)] = factor;
                for j in k + 1..n {
                    m[(i, j)] -= factor * m[(k, j)];
                }
            }
        }
        Ok(Self { packed: m, perm })
    }

    pub fn solve(&self, rhs: &[f64]) -> Result<Vec<f64>> {
        check_system(&self.packed, rhs)?;
        let m = &self.packed;
        let n = m.rows();
        let mut y: Vec<f64> = self.perm.iter().map(|&p| rhs[p]).collect();
        for i in 0..n {
            for k in 0..i {
                y[i] -= m[(i, k)] * y[k];
            }
        }
        for i in (0..n).rev() {
            for k in i + 1..n {
                y[i] -= m[(i, k)] * y[k];
            }
            y[i] /= m[(i, i)];
        }
        Ok(y)
    }
}

/// Solves `a x = rhs`. With `spd_hint` the system is factored by Cholesky,
/// otherwise by LU with partial pivoting.
pub fn solve(a: &DenseMatrix, rhs: &[f64], spd_hint: bool) -> Result<Vec<f64>> {
    check_system(a, rhs)?;
    if spd_hint {
        Cholesky::factor(a)?.solve(rhs)
    } else {
        Lu::factor(a)?.solve(rhs)
    }
}

/// `‖a x − rhs‖∞`.
pub fn residual_inf(a: &DenseMatrix, x: &[f64], rhs: &[f64]) -> Result<f64> {
    let ax = a.mul_vec(x)?;
    Ok(ax
        .iter()
        .zip(rhs)
        .fold(0.0_f64, |acc, (p, q)| acc.max((p - q).abs())))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerOptions {
    /// Relative residual target: `‖A v − λ v‖∞ ≤ tol · λ · ‖v‖∞`.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for PowerOptions {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_iter: 100_000,
        }
    }
}

/// Dominant eigenpair with `‖vector‖₁ = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
    pub iterations: usize,
    pub residual: f64,
}

/// Plain power iteration with ℓ¹ renormalization, started from the uniform
/// vector. `a` must be square and nonnegative; irreducibility is the
/// caller's responsibility.
pub fn power_iteration(a: &DenseMatrix, opts: PowerOptions) -> Result<EigenPair> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: a.cols(),
        });
    }
    let n = a.rows();
    for i in 0..n {
        for j in 0..n {
            if !(a[(i, j)] >= 0.0) {
                return Err(Error::NegativeEntry { row: i, col: j });
            }
        }
    }
    let mut v = vec![1.0 / n as f64; n];
    let mut residual = f64::INFINITY;
    for iter in 1..=opts.max_iter {
        let y = a.mul_vec(&v)?;
        // v is nonnegative with unit ℓ¹ norm, so Σy is the Collatz–Wielandt
        // style estimate of λ.
        let lambda: f64 = y.iter().sum();
        let vmax = v.iter().fold(0.0_f64, |m, x| m.max(*x));
        residual = y
            .iter()
            .zip(&v)
            .fold(0.0_f64, |acc, (yi, vi)| acc.max((yi - lambda * vi).abs()));
        if residual <= opts.tol * lambda * vmax {
            return Ok(EigenPair {
                value: lambda,
                vector: v,
                iterations: iter,
                residual,
            });
        }
        if !(lambda > 0.0) || !lambda.is_finite() {
            break;
        }
        v = y.into_iter().map(|x| x / lambda).collect();
    }
    Err(Error::NoConvergence {
        iterations: opts.max_iter,
        residual,
    })
}
