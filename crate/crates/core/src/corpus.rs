//! Seeded random graph families for the acceptance battery.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` with `n` uniform in `1..=max_n` and `p` uniform in
/// `[0.15, 0.85]`.
pub fn random_graphs(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(1..=max_n);
            let p = r.gen_range(0.15..=0.85);
            gnp(&mut r, n, p)
        })
        .collect()
}

pub fn gnp(r: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| r.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).expect("distinct pairs")
}

/// Uniform simple cubic graph on `n` vertices (`n` even, at least 4) by
/// the pairing model with rejection.
pub fn random_cubic(r: &mut impl Rng, n: usize) -> Graph {
    assert!(n >= 4 && n % 2 == 0, "cubic graphs need an even order >= 4");
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|i| i / 3).collect();
        points.shuffle(r);
        let edges: Vec<(usize, usize)> = points.chunks(2).map(|p| (p[0], p[1])).collect();
        if let Ok(g) = Graph::from_edges(n, edges) {
            return g;
        }
    }
}

/// Graphs of girth at least 5 on at most `max_n` vertices: a random cubic
/// graph subdivided once, then a random subgraph (each edge dropped with a
/// random probability up to 0.3, then up to a fifth of the vertices
/// deleted).
pub fn girth5_graphs(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut r = rng(seed);
    let cubic_max = (2 * max_n / 5) & !1;
    assert!(
        cubic_max >= 4,
        "max_n too small for a subdivided cubic graph"
    );
    (0..count)
        .map(|_| {
            let n = 2 * r.gen_range(2..=cubic_max / 2);
            let g = random_cubic(&mut r, n).subdivided();
            let drop = r.gen_range(0.0..0.3);
            let kept: Vec<(usize, usize)> = g.edges().filter(|_| !r.gen_bool(drop)).collect();
            let g = Graph::from_edges(g.vertex_count(), kept).expect("subgraph of a simple graph");
            let mut removed: Vec<usize> = g.vertices().collect();
            removed.shuffle(&mut r);
            removed.truncate(r.gen_range(0..=g.vertex_count() / 5));
            g.without(&removed).0
        })
        .collect()
}

/// Uniform labelled tree on `n` vertices from a random Prüfer sequence.
pub fn random_tree(r: &mut impl Rng, n: usize) -> Graph {
    if n <= 2 {
        return Graph::from_edges(n, (1..n).map(|v| (0, v))).unwrap();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| r.gen_range(0..n)).collect();
    prufer_tree(&code)
}

/// The tree on `code.len() + 2` vertices with the given Prüfer code.
pub fn prufer_tree(code: &[usize]) -> Graph {
    let n = code.len() + 2;
    let mut degree = vec![1; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a tree has a leaf");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((last[0], last[1]));
    Graph::from_edges(n, edges).expect("Prüfer decoding yields a tree")
}

/// Every labelled tree on `n >= 2` vertices, one per Prüfer code.
pub fn all_labelled_trees(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n >= 2);
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total).map(move |mut i| {
        let code: Vec<usize> = (0..len)
            .map(|_| {
                let c = i % n;
                i /= n;
                c
            })
            .collect();
        prufer_tree(&code)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{girth, Girth};

    #[test]
    fn families_are_reproducible_and_well_formed() {
        assert_eq!(random_graphs(7, 20, 10), random_graphs(7, 20, 10));
        assert!(random_graphs(7, 50, 10)
            .iter()
            .all(|g| (1..=10).contains(&g.vertex_count())));
        let g5 = girth5_graphs(3, 50, 30);
        assert_eq!(g5, girth5_graphs(3, 50, 30));
        for g in &g5 {
            assert!(g.vertex_count() <= 30);
            assert!(girth(g).at_least(5));
        }
        let mut r = rng(1);
        let c = random_cubic(&mut r, 10);
        assert!(c.vertices().all(|v| c.degree(v) == 3));
    }

    #[test]
    fn trees() {
        assert_eq!(all_labelled_trees(4).count(), 16);
        assert!(
            all_labelled_trees(5).all(|t| t.is_forest() && t.is_connected() && t.edge_count() == 4)
        );
        let mut r = rng(2);
        let t = random_tree(&mut r, 60);
        assert!(t.is_connected() && t.is_forest());
        assert_eq!(girth(&t), Girth::Infinite);
    }
}
