//! Ranks the four-alternative example with the geometric-mean method.
//!
//! Three of six comparisons are known: a1 is twice a4, a3 is twice a4 and
//! a2 is three times a3. The result is exactly 2/11, 6/11, 2/11, 1/11.

use pcrank::metrics::format_ordinal;
use pcrank::{ordinal_ranking, parse_matrix, rank_gm, s_star, Normalization};

const MATRIX: &str = "\
# labels: a1,a2,a3,a4
1,   ?,   ?, 2
?,   1,   3, ?
?, 1/3,   1, 2
1/2, ?, 1/2, 1
";

fn main() -> pcrank::Result<()> {
    let m = parse_matrix(MATRIX)?;
    let w = rank_gm(&m, Normalization::SumToOne)?;
    for (label, x) in m.labels().iter().zip(w.weights()) {
        println!("{label}: {x:.4}");
    }
    println!("ranking: {}", format_ordinal(&ordinal_ranking(w.weights()), m.labels()));
    println!("S*(C) = {:.3e}", s_star(&m, w.weights())?);

    let max = w.renormalized(Normalization::MaxToOne);
    println!("relative to the best: {:?}", max.weights());
    Ok(())
}
