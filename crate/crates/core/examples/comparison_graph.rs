//! The undirected graph of known comparisons and its Laplacian.

use pcrank::graph::{components, degree_matrix};
use pcrank::{graph_of, is_connected, laplacian, parse_matrix};

fn main() -> pcrank::Result<()> {
    let m = parse_matrix("1,?,?,2\n?,1,3,?\n?,1/3,1,2\n1/2,?,1/2,1\n")?;
    let g = graph_of(&m);
    println!("edges: {:?}", g.edges().map(|(i, j)| (i + 1, j + 1)).collect::<Vec<_>>());
    println!("connected: {}", is_connected(&g));
    println!("degrees:\n{}", degree_matrix(&g));
    println!("Laplacian:\n{}", laplacian(&g));

    let split = parse_matrix("1,2,?,?\n1/2,1,?,?\n?,?,1,3\n?,?,1/3,1\n")?;
    let parts = components(&graph_of(&split));
    println!("components of a split matrix: {parts:?}");
    Ok(())
}
