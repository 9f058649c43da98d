//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! [`Graph`] is immutable once built. Every algorithm in the crate takes a
//! `&Graph` and keeps whatever mutable bookkeeping it needs on the side.

mod blocks;
mod io;
pub mod named;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use blocks::{block_decomposition, BlockDecomposition};
pub use io::{read_graph, write_graph, ParseError};

/// Errors raised while assembling a graph from an explicit edge list.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
}

/// Undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph, rejecting loops, repeated edges and out-of-range ids.
    /// Edge orientation is irrelevant: `(3, 1)` and `(1, 3)` are the same edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { adj, m: seen.len() })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Subgraph induced by `keep`, relabelled `0..keep.len()` in the given
    /// order. Returns the graph together with the map new id -> old id.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let mut adj = vec![Vec::new(); keep.len()];
        let mut m = 0;
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = new_id[w];
                if j != usize::MAX {
                    adj[i].push(j);
                    if i < j {
                        m += 1;
                    }
                }
            }
            adj[i].sort_unstable();
        }
        (Graph { adj, m }, keep.to_vec())
    }

    /// Graph with the vertices of `removed` deleted, relabelled in increasing
    /// order of the surviving ids.
    pub fn without(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut gone = vec![false; self.vertex_count()];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<usize> = self.vertices().filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components().len() == 1
    }

    /// A graph is a forest iff every component with `c` vertices has `c - 1`
    /// edges.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.vertex_count()
    }

    /// Proper 2-colouring if one exists (BFS layering per component).
    pub fn bipartition(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        let mut side = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if side[s] != usize::MAX {
                continue;
            }
            side[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == usize::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Some triangle `(a, b, c)` if the graph has one.
    ///
    /// Uses degree ordering so that hub vertices (the root of an
    /// independent-set tree has tens of thousands of neighbours) are cheap.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        let n = self.vertex_count();
        let rank_key = |v: usize| (self.degree(v), v);
        let mut forward: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (u, v) in self.edges() {
            if rank_key(u) < rank_key(v) {
                forward[u].push(v);
            } else {
                forward[v].push(u);
            }
        }
        let mut mark = vec![usize::MAX; n];
        for u in 0..n {
            for &v in &forward[u] {
                mark[v] = u;
            }
            for &v in &forward[u] {
                for &w in &forward[v] {
                    if mark[w] == u {
                        return Some((u, v, w));
                    }
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    /// Some copy of `K_p` as a vertex list, by clique extension over
    /// higher-indexed common neighbours.
    pub fn find_clique(&self, p: usize) -> Option<Vec<usize>> {
        fn extend(g: &Graph, clique: &mut Vec<usize>, cand: &[usize], p: usize) -> bool {
            if clique.len() == p {
                return true;
            }
            for (i, &v) in cand.iter().enumerate() {
                if clique.len() + cand.len() - i < p {
                    return false;
                }
                let next: Vec<usize> = cand[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&w| g.has_edge(v, w))
                    .collect();
                clique.push(v);
                if extend(g, clique, &next, p) {
                    return true;
                }
                clique.pop();
            }
            false
        }
        if p == 0 {
            return Some(Vec::new());
        }
        let mut clique = Vec::with_capacity(p);
        for v in self.vertices() {
            let cand: Vec<usize> = self.adj[v].iter().copied().filter(|&w| w > v).collect();
            clique.push(v);
            if extend(self, &mut clique, &cand, p) {
                return Some(clique);
            }
            clique.pop();
        }
        None
    }

    /// Graph obtained by subdividing every edge once. Original vertices keep
    /// their ids; the division vertex of the `i`-th edge (in [`Graph::edges`]
    /// order) is `n + i`.
    pub fn subdivided(&self) -> Graph {
        let n = self.vertex_count();
        let mut edges = Vec::with_capacity(2 * self.m);
        for (i, (u, v)) in self.edges().enumerate() {
            edges.push((u, n + i));
            edges.push((n + i, v));
        }
        Graph::from_edges(n + self.m, edges).expect("subdivision of a simple graph is simple")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.vertex_count();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + off, v + off)));
        Graph::from_edges(off + other.vertex_count(), edges).expect("union of simple graphs")
    }
}

/// Girth: the length of a shortest cycle, or `Infinite` for forests.
///
/// `Infinite` compares greater than every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn is_finite(self) -> bool {
        matches!(self, Girth::Finite(_))
    }

    /// True iff every cycle has length at least `g`.
    pub fn at_least(self, g: usize) -> bool {
        match self {
            Girth::Finite(len) => len >= g,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(len) => write!(f, "{len}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// Shortest cycle length by BFS from every vertex.
///
/// A non-tree edge `xy` met during the BFS from `s` closes a closed walk of
/// length `d(x) + d(y) + 1` that contains a cycle no longer than it, and the
/// BFS rooted on a shortest cycle realises it exactly.
pub fn girth(g: &Graph) -> Girth {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if g.degree(s) < 2 {
            continue;
        }
        dist[s] = 0;
        touched.push(s);
        queue.push_back(s);
        'bfs: while let Some(u) = queue.pop_front() {
            // Anything found past this depth cannot beat `best`.
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
        for v in touched.drain(..) {
            dist[v] = usize::MAX;
            parent[v] = usize::MAX;
        }
        queue.clear();
        if best == 3 {
            break;
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Unweighted distances from `source`; `None` marks unreachable vertices.
pub fn distances_from(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices have a distance");
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Multi-source distances: `dist(v, sources)`.
pub fn distances_from_set(g: &Graph, sources: &[usize]) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s].is_none() {
            dist[s] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices have a distance");
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Vertices within distance `radius` of `source`, in BFS order.
pub fn ball(g: &Graph, source: usize, radius: usize) -> Vec<usize> {
    let mut dist = std::collections::HashMap::from([(source, 0usize)]);
    let mut order = vec![source];
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        let du = dist[&u];
        if du == radius {
            continue;
        }
        for &w in g.neighbors(u) {
            if !dist.contains_key(&w) {
                dist.insert(w, du + 1);
                order.push(w);
            }
        }
    }
    order
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(i) => {
                self.0.insert(i, v);
                true
            }
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Whether every member is a vertex of `g`.
    pub fn within(&self, g: &Graph) -> bool {
        self.0.last().map_or(true, |&v| v < g.vertex_count())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn has_cycle_dfs(g: &Graph) -> bool {
        // independent cycle detector: DFS looking for a back edge
        let n = g.vertex_count();
        let mut state = vec![0u8; n];
        fn visit(g: &Graph, u: usize, parent: usize, state: &mut [u8]) -> bool {
            state[u] = 1;
            for &w in g.neighbors(u) {
                if w == parent {
                    continue;
                }
                if state[w] == 1 || (state[w] == 0 && visit(g, w, u, state)) {
                    return true;
                }
            }
            state[u] = 2;
            false
        }
        (0..n).any(|s| state[s] == 0 && visit(g, s, usize::MAX, &mut state))
    }

    #[test]
    fn girth_of_small_graphs() {
        assert_eq!(girth(&complete(3)), Girth::Finite(3));
        assert_eq!(girth(&path(7)), Girth::Infinite);
        assert_eq!(girth(&star(5)), Girth::Infinite);
        assert_eq!(girth(&cycle(9)), Girth::Finite(9));
        assert_eq!(girth(&petersen()), Girth::Finite(5));
        assert_eq!(girth(&heawood()), Girth::Finite(6));
        assert_eq!(girth(&heawood().subdivided()), Girth::Finite(12));
        assert_eq!(girth(&Graph::empty(0)), Girth::Infinite);
    }

    #[test]
    fn girth_with_pendant_structure() {
        // C5 with a pendant path and a disjoint C7
        let g = cycle(5).disjoint_union(&cycle(7));
        assert_eq!(girth(&g), Girth::Finite(5));
    }

    #[test]
    fn infinite_girth_is_largest() {
        assert!(Girth::Infinite > Girth::Finite(1_000_000));
        assert!(Girth::Infinite.at_least(100));
        assert!(!Girth::Finite(4).at_least(5));
    }

    #[test]
    fn distances_examples() {
        let p = path(3);
        assert_eq!(distances_from(&p, 0), vec![Some(0), Some(1), Some(2)]);
        assert_eq!(distances_from(&Graph::empty(1), 0), vec![Some(0)]);
        for s in 0..4 {
            let mut d: Vec<usize> = distances_from(&cycle(4), s).into_iter().flatten().collect();
            d.sort_unstable();
            assert_eq!(d, vec![0, 1, 1, 2]);
        }
        let two = Graph::empty(2);
        assert_eq!(distances_from(&two, 0), vec![Some(0), None]);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(2, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn triangle_and_clique_scans() {
        assert!(complete(3).find_triangle().is_some());
        assert!(cycle(4).is_triangle_free());
        assert!(petersen().is_triangle_free());
        assert_eq!(complete(5).find_clique(5), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(complete(5).find_clique(6), None);
        assert!(petersen().find_clique(3).is_none());
    }

    #[test]
    fn induced_and_without() {
        let g = cycle(5);
        let (h, map) = g.without(&[0]);
        assert_eq!(map, vec![1, 2, 3, 4]);
        assert!(h.is_forest());
        assert_eq!(h.edge_count(), 3);
    }

    #[test]
    fn bipartite_checks() {
        assert!(cycle(6).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert!(heawood().is_bipartite());
    }

    use proptest::prelude::*;

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let len = pairs.len();
            proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
                let edges = pairs
                    .iter()
                    .zip(mask)
                    .filter(|(_, keep)| *keep)
                    .map(|(e, _)| *e);
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn infinite_girth_iff_acyclic(g in arb_graph(12)) {
            prop_assert_eq!(girth(&g) == Girth::Infinite, !has_cycle_dfs(&g));
            prop_assert_eq!(g.is_forest(), !has_cycle_dfs(&g));
        }

        #[test]
        fn adjacency_is_symmetric(g in arb_graph(12)) {
            for (u, v) in g.edges() {
                prop_assert!(g.has_edge(v, u));
            }
            let total: usize = g.vertices().map(|v| g.degree(v)).sum();
            prop_assert_eq!(total, 2 * g.edge_count());
        }
    }
}
