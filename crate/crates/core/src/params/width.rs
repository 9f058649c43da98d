//! Exact treewidth and pathwidth by dynamic programming over vertex subsets.

use serde::{Deserialize, Serialize};

use super::{adjacency_masks, bits, guard, ParamError};
use crate::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    /// Edges between bag indices; they form a tree.
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(|b| b.len())
            .max()
            .unwrap_or(1)
            .saturating_sub(1)
    }

    /// Checks vertex and edge coverage, that the bag graph is a tree, and
    /// that the bags holding each vertex induce a connected subtree.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let k = self.bags.len();
        if k == 0 {
            return g.vertex_count() == 0;
        }
        if self.bags.iter().any(|b| !b.within(g)) {
            return false;
        }
        let tree = match Graph::from_edges(k, self.edges.iter().copied()) {
            Ok(t) => t,
            Err(_) => return false,
        };
        if !(tree.is_forest() && tree.is_connected()) {
            return false;
        }
        let covers_edges = g
            .edges()
            .all(|(u, v)| self.bags.iter().any(|b| b.contains(u) && b.contains(v)));
        covers_edges
            && g.vertices().all(|v| {
                let holding: Vec<usize> = (0..k).filter(|&i| self.bags[i].contains(v)).collect();
                !holding.is_empty() && tree.induced_subgraph(&holding).0.is_connected()
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathDecomposition {
    pub bags: Vec<VertexSet>,
}

impl PathDecomposition {
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(|b| b.len())
            .max()
            .unwrap_or(1)
            .saturating_sub(1)
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let k = self.bags.len();
        let tree = TreeDecomposition {
            bags: self.bags.clone(),
            edges: (1..k).map(|i| (i - 1, i)).collect(),
        };
        tree.is_valid_for(g)
    }
}

/// Vertices outside `inside | {v}` reachable from `v` through `inside`.
fn q_set(adj: &[u32], inside: u32, v: usize) -> u32 {
    let mut seen = 1u32 << v;
    let mut frontier = 1u32 << v;
    let mut out = 0;
    while frontier != 0 {
        let mut next = 0;
        for u in bits(frontier) {
            next |= adj[u];
        }
        next &= !seen;
        seen |= next;
        out |= next & !inside;
        frontier = next & inside;
    }
    out
}

/// Treewidth with a tree decomposition built from an optimal elimination
/// ordering.
pub fn treewidth_exact(g: &Graph, limit: usize) -> Result<(usize, TreeDecomposition), ParamError> {
    let n = g.vertex_count();
    guard("treewidth", n, limit)?;
    if n == 0 {
        return Ok((
            0,
            TreeDecomposition {
                bags: vec![],
                edges: vec![],
            },
        ));
    }
    let adj = adjacency_masks(g);
    let size = 1usize << n;
    // tw[S]: best width when the vertices of S are eliminated first
    let mut tw = vec![u8::MAX; size];
    tw[0] = 0;
    let cost = |s: u32, v: usize| {
        let rest = s & !(1 << v);
        (q_set(&adj, rest, v).count_ones() as u8, rest)
    };
    for s in 1..size as u32 {
        let mut best = u8::MAX;
        for v in bits(s) {
            let (q, rest) = cost(s, v);
            best = best.min(q.max(tw[rest as usize]));
        }
        tw[s as usize] = best;
    }
    let full = (size - 1) as u32;
    let width = tw[full as usize] as usize;

    let mut elimination = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let target = tw[s as usize];
        let v = bits(s)
            .find(|&v| {
                let (q, rest) = cost(s, v);
                q.max(tw[rest as usize]) == target
            })
            .expect("dp value is attained");
        elimination.push(v);
        s &= !(1 << v);
    }
    elimination.reverse();

    let mut pos = vec![0; n];
    for (i, &v) in elimination.iter().enumerate() {
        pos[v] = i;
    }
    let mut before = 0u32;
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, &v) in elimination.iter().enumerate() {
        let q = q_set(&adj, before, v);
        match bits(q).min_by_key(|&w| pos[w]) {
            Some(w) => edges.push((i, pos[w])),
            None => roots.push(i),
        }
        bags.push(bits(q | (1 << v)).collect::<VertexSet>());
        before |= 1 << v;
    }
    for pair in roots.windows(2) {
        edges.push((pair[0], pair[1]));
    }
    let td = TreeDecomposition { bags, edges };
    debug_assert_eq!(td.width(), width);
    Ok((width, td))
}

/// Pathwidth via vertex separation number.
pub fn pathwidth_exact(g: &Graph, limit: usize) -> Result<(usize, PathDecomposition), ParamError> {
    let n = g.vertex_count();
    guard("pathwidth", n, limit)?;
    if n == 0 {
        return Ok((0, PathDecomposition { bags: vec![] }));
    }
    let adj = adjacency_masks(g);
    let size = 1usize << n;
    let full = (size - 1) as u32;
    let boundary = |s: u32| bits(s).filter(|&u| adj[u] & !s != 0).count() as u8;
    let mut vs = vec![u8::MAX; size];
    vs[0] = 0;
    for s in 1..size as u32 {
        let best = bits(s).map(|v| vs[(s & !(1 << v)) as usize]).min().unwrap();
        vs[s as usize] = best.max(boundary(s));
    }
    let width = vs[full as usize] as usize;

    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let target = vs[s as usize];
        let v = bits(s)
            .find(|&v| vs[(s & !(1 << v)) as usize] <= target)
            .expect("dp value is attained");
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();

    let mut left = 0u32;
    let mut bags = Vec::with_capacity(n);
    for &v in &order {
        let bd = bits(left).filter(|&u| adj[u] & !left != 0);
        bags.push(bd.chain(std::iter::once(v)).collect::<VertexSet>());
        left |= 1 << v;
    }
    let pd = PathDecomposition { bags };
    debug_assert!(pd.width() <= width);
    Ok((width, pd))
}
