//! Filling the gaps with the ratios implied by the optimal weights.
//!
//! The filled matrix ranks to the same weights, and its full error equals
//! the error over the originally known entries.

use pcrank::{complete_matrix, parse_matrix, rank_gm, s_complete, s_star, serialize_matrix, Normalization};

fn main() -> pcrank::Result<()> {
    let m = parse_matrix("# labels: x,y,z,u\n1,?,?,2\n?,1,3,?\n?,1/3,1,2\n1/2,?,1/2,1\n")?;
    let filled = complete_matrix(&m)?;
    print!("{}", serialize_matrix(&filled));

    let w = rank_gm(&m, Normalization::SumToOne)?;
    let again = rank_gm(&filled, Normalization::SumToOne)?;
    println!("weights before: {:?}", w.weights());
    println!("weights after:  {:?}", again.weights());
    println!("S* on known entries: {:.3e}", s_star(&m, w.weights())?);
    println!("S on the filled matrix: {:.3e}", s_complete(&filled, w.weights())?);
    Ok(())
}
