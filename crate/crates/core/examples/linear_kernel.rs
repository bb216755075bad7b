//! The dense solvers underneath the ranking methods, used directly.

use pcrank::linalg::{power_iteration, residual_inf, solve, Cholesky, PowerOptions};
use pcrank::DenseMatrix;

fn main() -> pcrank::Result<()> {
    let a = DenseMatrix::from_rows(&[[4.0, 1.0, 0.0], [1.0, 3.0, 1.0], [0.0, 1.0, 2.0]])?;
    let b = [1.0, 2.0, 3.0];

    let chol = Cholesky::factor(&a)?;
    let x = chol.solve(&b)?;
    println!("Cholesky: x = {x:?}, residual {:.1e}", residual_inf(&a, &x, &b)?);

    let y = solve(&a, &b, false)?;
    println!("LU:       x = {y:?}");

    let indefinite = DenseMatrix::from_rows(&[[1.0, 2.0], [2.0, 1.0]])?;
    println!("Cholesky on an indefinite matrix: {}", Cholesky::factor(&indefinite).unwrap_err());

    let pair = power_iteration(&a, PowerOptions::default())?;
    println!(
        "dominant eigenpair: {:.6} {:?} after {} iterations",
        pair.value, pair.vector, pair.iterations
    );
    Ok(())
}
