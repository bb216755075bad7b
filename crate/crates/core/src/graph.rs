//! The undirected comparison graph of a matrix and the matrices derived from
//! it (degree, adjacency, Laplacian).

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::pcmatrix::IncompletePcMatrix;

/// Vertices are alternatives `0..n`; an edge `{i, j}` means the pair was
/// compared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonGraph {
    n: usize,
    // Stored as (min, max).
    edges: BTreeSet<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl ComparisonGraph {
    /// Builds a graph from unordered pairs. Self-loops are dropped.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::Index { index: v, len: n });
                }
            }
            if a != b {
                set.insert((a.min(b), a.max(b)));
            }
        }
        let mut neighbors = vec![Vec::new(); n];
        for &(a, b) in &set {
            neighbors[a].push(b);
            neighbors[b].push(a);
        }
        for adj in &mut neighbors {
            adj.sort_unstable();
        }
        Ok(Self {
            n,
            edges: set,
            neighbors,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }
}

/// `{i, j}` is an edge iff `i ≠ j` and `c_ij` (or `c_ji`) is present.
pub fn graph_of(m: &IncompletePcMatrix) -> ComparisonGraph {
    let n = m.n();
    let edges = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && !m.get(i, j).is_missing());
    ComparisonGraph::from_edges(n, edges).expect("indices are in range")
}

pub fn degree(g: &ComparisonGraph, i: usize) -> Result<usize> {
    if i >= g.n {
        return Err(Error::Index { index: i, len: g.n });
    }
    Ok(g.neighbors[i].len())
}

pub fn degree_matrix(g: &ComparisonGraph) -> DenseMatrix {
    let mut d = DenseMatrix::zeros(g.n, g.n);
    for i in 0..g.n {
        d[(i, i)] = g.neighbors[i].len() as f64;
    }
    d
}

pub fn adjacency_matrix(g: &ComparisonGraph) -> DenseMatrix {
    let mut p = DenseMatrix::zeros(g.n, g.n);
    for (i, j) in g.edges() {
        p[(i, j)] = 1.0;
        p[(j, i)] = 1.0;
    }
    p
}

/// `L = D − P`.
pub fn laplacian(g: &ComparisonGraph) -> DenseMatrix {
    degree_matrix(g)
        .sub(&adjacency_matrix(g))
        .expect("same dimensions")
}

/// Connected components in breadth-first discovery order, each starting
/// from its smallest vertex. Components are ordered by that vertex.
pub fn components(g: &ComparisonGraph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n];
    let mut out = Vec::new();
    for start in 0..g.n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &g.neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// True when a breadth-first traversal from vertex 0 reaches every vertex.
/// The empty graph and the single vertex are connected.
pub fn is_connected(g: &ComparisonGraph) -> bool {
    g.n <= 1 || components(g).len() == 1
}
