//! Geometric mean, LLS and Harker on the same inconsistent input.

use pcrank::metrics::format_ordinal;
use pcrank::{compare_rankings, method_report, parse_matrix, Method, Normalization};

const MATRIX: &str = "\
# labels: north,south,east,west,centre
1,   3,   ?, 1/2, 5
1/3, 1,   2,   ?, ?
?,   1/2, 1,   4, 2
2,   ?,   1/4, 1, ?
1/5, ?,   1/2, ?, 1
";

fn main() -> pcrank::Result<()> {
    let m = parse_matrix(MATRIX)?;
    let mut reports = Vec::new();
    for method in Method::ALL {
        let r = method_report(&m, method, Normalization::SumToOne)?;
        println!(
            "{:>6}: {:?}  S* = {:.4}  {}",
            method.to_string(),
            r.priorities.weights().iter().map(|x| (x * 1e4).round() / 1e4).collect::<Vec<_>>(),
            r.s_star,
            format_ordinal(&r.ordinal_ranking, m.labels()),
        );
        if let Some(lambda) = r.diagnostics.lambda_max {
            println!("        lambda_max = {lambda:.6}");
        }
        reports.push(r);
    }
    let gm_vs_harker = compare_rankings(&reports[0].priorities, &reports[2].priorities)?;
    println!(
        "gm vs harker: max |diff| = {:.3e}, same order: {}",
        gm_vs_harker.max_abs_diff, gm_vs_harker.ordinal_equal
    );
    Ok(())
}
