//! Frozen values for the four-alternative example (c14 = c34 = 2, c23 = 3).

mod common;

use common::*;
use pcrank::graph::{adjacency_matrix, degree, degree_matrix};
use pcrank::linalg::{power_iteration, solve, PowerOptions};
use pcrank::metrics::format_ordinal;
use pcrank::*;

fn four() -> IncompletePcMatrix {
    parse_matrix(FOUR_ALTERNATIVES).unwrap()
}

fn logs() -> [f64; 6] {
    let (l2, l3) = (2f64.ln(), 3f64.ln());
    // c14, c23, c32, c34, c41, c43
    [l2, l3, -l3, l2, -l2, -l2]
}

#[test]
fn closed_form_reduces_to_simple_logs() {
    // Hand simplification of the /16 formulas for these inputs.
    let (l2, l3) = (2f64.ln(), 3f64.ln());
    let expected = [(l2 - l3) / 4.0, (l2 + 3.0 * l3) / 4.0, (l2 - l3) / 4.0, (-3.0 * l2 - l3) / 4.0];
    let got = four_alternative_closed_form(logs());
    assert!(max_abs_diff(&got, &expected) <= 1e-15);
    // exp of those is (2/3)^¼, 54^¼, (2/3)^¼, (1/24)^¼ ∝ 2 : 6 : 2 : 1.
    let w = normalize_sum(&got.map(f64::exp));
    assert!(max_abs_diff(&w, &[2.0 / 11.0, 6.0 / 11.0, 2.0 / 11.0, 1.0 / 11.0]) <= 1e-15);
}

#[test]
fn gm_matches_closed_form_and_rounded_values() {
    let m = four();
    let sol = pcrank::gm::solve_gm(&m).unwrap();
    let oracle = four_alternative_closed_form(logs());
    assert!(max_abs_diff(&sol.log_weights, &oracle) <= 1e-14);

    let w = rank_gm(&m, Normalization::SumToOne).unwrap();
    assert!(max_abs_diff(w.weights(), &[0.1818, 0.5455, 0.1818, 0.0909]) <= 5e-3);
    // The commonly quoted two-decimal figures truncate 2/11, 6/11, 2/11, 1/11.
    let truncated: Vec<f64> = w.weights().iter().map(|x| (x * 100.0).floor() / 100.0).collect();
    assert_eq!(truncated, vec![0.18, 0.54, 0.18, 0.09]);
    assert!(max_abs_diff(w.weights(), &[2.0 / 11.0, 6.0 / 11.0, 2.0 / 11.0, 1.0 / 11.0]) <= 1e-12);
    let order = ordinal_ranking(w.weights());
    assert_eq!(format_ordinal(&order, m.labels()), "a2 > a1 = a3 > a4");
}

#[test]
fn auxiliary_matrix_and_rhs() {
    let sys = build_system(&four()).unwrap();
    let expected = DenseMatrix::from_rows(&[
        [2.0, 1.0, 1.0, 0.0],
        [1.0, 2.0, 0.0, 1.0],
        [1.0, 0.0, 3.0, 0.0],
        [0.0, 1.0, 0.0, 3.0],
    ])
    .unwrap();
    assert_eq!(sys.matrix, expected);
    let [c14, c23, c32, c34, c41, c43] = logs();
    let rhs = [c14, c23, c32 + c34, c41 + c43];
    assert!(max_abs_diff(&sys.rhs, &rhs) <= 1e-15);
}

#[test]
fn kernel_solves_the_example_system() {
    let sys = build_system(&four()).unwrap();
    let (l2, l3) = (2f64.ln(), 3f64.ln());
    let rhs = [l2, l3, -l3 + l2, -l2 - l2];
    let expected = [(l2 - l3) / 4.0, (l2 + 3.0 * l3) / 4.0, (l2 - l3) / 4.0, (-3.0 * l2 - l3) / 4.0];
    for spd in [true, false] {
        let x = solve(&sys.matrix, &rhs, spd).unwrap();
        assert!(max_abs_diff(&x, &expected) <= 1e-14);
    }
}

#[test]
fn graph_quantities() {
    let g = graph_of(&four());
    assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2), (2, 3)]);
    assert_eq!(degree(&g, 3).unwrap(), 2);
    assert!(is_connected(&g));
    let d = degree_matrix(&g);
    let p = adjacency_matrix(&g);
    let l = laplacian(&g);
    assert_eq!(l, d.sub(&p).unwrap());
    assert_eq!((0..4).map(|i| l[(i, i)]).collect::<Vec<_>>(), vec![1.0, 1.0, 2.0, 2.0]);
    assert_eq!(l[(0, 3)], -1.0);
}

#[test]
fn lls_and_harker_agree_on_the_example() {
    let m = four();
    let gm = rank_gm(&m, Normalization::SumToOne).unwrap();
    let lls = rank_lls(&m, Normalization::SumToOne).unwrap();
    assert!(max_abs_diff(gm.weights(), lls.weights()) <= 1e-9);

    let h = build_harker(&m).unwrap();
    assert_eq!((0..4).map(|i| h.matrix[(i, i)]).collect::<Vec<_>>(), vec![3.0, 3.0, 2.0, 2.0]);
    assert_eq!(h.matrix[(0, 3)], 2.0);
    assert_eq!(h.matrix[(0, 1)], 0.0);
    let pair = power_iteration(&h.matrix, PowerOptions::default()).unwrap();
    assert!((pair.value - 4.0).abs() <= 1e-10);
    let harker = rank_harker(&m, Normalization::SumToOne).unwrap();
    let cmp = compare_rankings(&gm, &harker).unwrap();
    assert!(cmp.ordinal_equal);
    assert_eq!(ordinal_ranking(harker.weights()), vec![vec![1], vec![0, 2], vec![3]]);
}

#[test]
fn completion_and_error_functionals() {
    let m = four();
    let c = complete_matrix(&m).unwrap();
    let c12 = c.get(0, 1).value().unwrap();
    assert!((c12 - 1.0 / 3.0).abs() <= 1e-9);
    assert!((c.get(1, 0).value().unwrap() - 3.0).abs() <= 1e-9);
    let w = rank_gm(&m, Normalization::SumToOne).unwrap();
    let s_inc = s_star(&m, w.weights()).unwrap();
    let s_full = s_complete(&c, w.weights()).unwrap();
    assert!((s_inc - s_full).abs() <= 1e-12);
}

#[test]
fn serialization_round_trip() {
    let m = four();
    let text = serialize_matrix(&m);
    assert_eq!(parse_matrix(&text).unwrap(), m);
    assert!(text.contains("?"));
}
