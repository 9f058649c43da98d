//! Small named graphs used throughout the tests and the CLI.

use super::Graph;

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// Path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

/// Cycle `0 - 1 - ... - (n-1) - 0`; needs `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
}

/// Star with centre 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - (i+5)`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_edges(10, outer.chain(inner).chain(spokes)).unwrap()
}

/// Heawood graph, LCF notation `[5, -5]^7`: Hamiltonian cycle `0..14` plus
/// chords `i - (i + 5)` for even `i`.
pub fn heawood() -> Graph {
    let ham = (0..14).map(|i| (i, (i + 1) % 14));
    let chords = (0..14).step_by(2).map(|i| (i, (i + 5) % 14));
    Graph::from_edges(14, ham.chain(chords)).unwrap()
}

/// `rows x cols` grid, vertex `(x, y)` has id `y * cols + x`.
pub fn grid(cols: usize, rows: usize) -> Graph {
    let id = |x: usize, y: usize| y * cols + x;
    let mut edges = Vec::new();
    for y in 0..rows {
        for x in 0..cols {
            if x + 1 < cols {
                edges.push((id(x, y), id(x + 1, y)));
            }
            if y + 1 < rows {
                edges.push((id(x, y), id(x, y + 1)));
            }
        }
    }
    Graph::from_edges(rows * cols, edges).unwrap()
}
