//! Instance generators and independent oracles shared by the integration
//! tests. Nothing here calls into the solvers.
#![allow(dead_code)]

use pcrank::{Entry, IncompletePcMatrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Union-find connectivity over unordered pairs.
pub fn union_find_connected(n: usize, pairs: &[(usize, usize)]) -> bool {
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut parent: Vec<usize> = (0..n).collect();
    let mut sets = n;
    for &(a, b) in pairs {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            sets -= 1;
        }
    }
    sets <= 1
}

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Ratio log-uniform in `[1/9, 9]`.
pub fn random_ratio(rng: &mut impl Rng) -> f64 {
    rng.gen_range(-(9f64.ln())..=9f64.ln()).exp()
}

/// Reciprocal matrix with the given upper-triangle values; `None` = missing.
pub fn from_upper(n: usize, upper: &[((usize, usize), Option<f64>)]) -> IncompletePcMatrix {
    let mut rows = vec![vec![Entry::Missing; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = Entry::Ratio(1.0);
    }
    for &((i, j), v) in upper {
        if let Some(v) = v {
            rows[i][j] = Entry::Ratio(v);
            rows[j][i] = Entry::Ratio(1.0 / v);
        }
    }
    IncompletePcMatrix::from_entries(rows).unwrap()
}

/// Random reciprocal matrix, each pair deleted with probability `p_delete`,
/// resampled until the comparison graph is connected.
pub fn random_connected(rng: &mut impl Rng, n: usize, p_delete: f64) -> IncompletePcMatrix {
    loop {
        let mut kept = Vec::new();
        let upper: Vec<_> = all_pairs(n)
            .into_iter()
            .map(|p| {
                let v = random_ratio(rng);
                if rng.gen_bool(p_delete) {
                    (p, None)
                } else {
                    kept.push(p);
                    (p, Some(v))
                }
            })
            .collect();
        if union_find_connected(n, &kept) {
            return from_upper(n, &upper);
        }
    }
}

/// The instance family used throughout: `n ∈ [3, 10]`, 40% deletion.
pub fn random_instance(rng: &mut impl Rng) -> IncompletePcMatrix {
    let n = rng.gen_range(3..=10);
    random_connected(rng, n, 0.4)
}

pub fn random_complete(rng: &mut impl Rng, n: usize) -> IncompletePcMatrix {
    random_connected(rng, n, 0.0)
}

pub fn random_positive(rng: &mut impl Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-3.0f64..3.0).exp()).collect()
}

/// `c_ij = v_i / v_j`, with each pair deleted with probability `p_delete`
/// (resampled until connected).
pub fn consistent(rng: &mut impl Rng, v: &[f64], p_delete: f64) -> IncompletePcMatrix {
    let n = v.len();
    loop {
        let kept: Vec<_> = all_pairs(n)
            .into_iter()
            .filter(|_| !rng.gen_bool(p_delete))
            .collect();
        if union_find_connected(n, &kept) {
            let upper: Vec<_> = kept.iter().map(|&(i, j)| ((i, j), Some(v[i] / v[j]))).collect();
            return from_upper(n, &upper);
        }
    }
}

/// Relabels alternatives: new index `k` is old index `perm[k]`.
pub fn permute(m: &IncompletePcMatrix, perm: &[usize]) -> IncompletePcMatrix {
    let rows = perm
        .iter()
        .map(|&i| perm.iter().map(|&j| m.get(i, j)).collect())
        .collect();
    IncompletePcMatrix::from_entries(rows).unwrap()
}

/// Determinant by the Leibniz permutation expansion. Only for tiny `n`.
pub fn leibniz_det(a: &[Vec<f64>]) -> f64 {
    fn rec(a: &[Vec<f64>], row: usize, used: &mut Vec<bool>, sign: f64, prod: f64, acc: &mut f64) {
        let n = a.len();
        if row == n {
            *acc += sign * prod;
            return;
        }
        // Sign flips once per already-used column to the right of `col`.
        for col in 0..n {
            if used[col] {
                continue;
            }
            let inversions = used[col + 1..].iter().filter(|&&u| u).count();
            let s = if inversions % 2 == 0 { sign } else { -sign };
            used[col] = true;
            rec(a, row + 1, used, s, prod * a[row][col], acc);
            used[col] = false;
        }
    }
    let mut acc = 0.0;
    rec(a, 0, &mut vec![false; a.len()], 1.0, 1.0, &mut acc);
    acc
}

pub fn normalize_sum(v: &[f64]) -> Vec<f64> {
    let s: f64 = v.iter().sum();
    v.iter().map(|x| x / s).collect()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(0.0, |m, (x, y)| f64::max(m, (x - y).abs()))
}

/// Closed-form log-weights for the four-alternative example, written out
/// from the explicit inverse with denominator 16. Arguments are the
/// natural logs of c14, c23, c32, c34, c41, c43.
pub fn four_alternative_closed_form(c: [f64; 6]) -> [f64; 4] {
    let [c14, c23, c32, c34, c41, c43] = c;
    [
        (15.0 * c14 - 9.0 * c23 - 5.0 * c32 - 5.0 * c34 + 3.0 * c41 + 3.0 * c43) / 16.0,
        (-9.0 * c14 + 15.0 * c23 + 3.0 * c32 + 3.0 * c34 - 5.0 * c41 - 5.0 * c43) / 16.0,
        (-5.0 * c14 + 3.0 * c23 + 7.0 * c32 + 7.0 * c34 - c41 - c43) / 16.0,
        (3.0 * c14 - 5.0 * c23 - c32 - c34 + 7.0 * c41 + 7.0 * c43) / 16.0,
    ]
}

pub const FOUR_ALTERNATIVES: &str = include_str!("../../data/four_alternatives.pcm");
pub const DISCONNECTED: &str = include_str!("../../data/disconnected.pcm");
