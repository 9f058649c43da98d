//! Vertex orderings: degeneracy and r-strong colouring numbers.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{adjacency_masks, bits, guard, ParamError};
use crate::{Graph, VertexSet};

/// A total order together with the number of vertices it lets any single
/// vertex r-reach. `bound` is always recomputed from `order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingWitness {
    pub order: Vec<usize>,
    pub radius: usize,
    pub bound: usize,
}

impl OrderingWitness {
    /// Wraps `order` and computes its bound honestly.
    pub fn from_order(g: &Graph, order: Vec<usize>, radius: usize) -> Result<Self, ParamError> {
        if radius == 0 {
            return Err(ParamError::ZeroRadius);
        }
        let pos = positions(g.vertex_count(), &order)?;
        let bound = g
            .vertices()
            .map(|v| reach_count(g, &pos, radius, v))
            .max()
            .unwrap_or(0);
        Ok(Self {
            order,
            radius,
            bound,
        })
    }

    /// Recomputes the bound from the order and compares.
    pub fn verify(&self, g: &Graph) -> bool {
        Self::from_order(g, self.order.clone(), self.radius)
            .map(|w| w.bound == self.bound)
            .unwrap_or(false)
    }

    /// Position of each vertex in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

fn positions(n: usize, order: &[usize]) -> Result<Vec<usize>, ParamError> {
    let mut pos = vec![usize::MAX; n];
    if order.len() != n {
        return Err(ParamError::NotAPermutation { n });
    }
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(ParamError::NotAPermutation { n });
        }
        pos[v] = i;
    }
    Ok(pos)
}

/// BFS from `v` through vertices strictly right of `v`, collecting the
/// vertices at or left of `v` that are hit within `radius` steps.
fn reach_walk(g: &Graph, pos: &[usize], radius: usize, v: usize, mut hit: impl FnMut(usize)) {
    let pv = pos[v];
    let mut dist = std::collections::HashMap::from([(v, 0usize)]);
    let mut queue = VecDeque::from([v]);
    hit(v);
    while let Some(u) = queue.pop_front() {
        let du = dist[&u];
        if du == radius {
            continue;
        }
        for &w in g.neighbors(u) {
            if dist.contains_key(&w) {
                continue;
            }
            dist.insert(w, du + 1);
            if pos[w] < pv {
                hit(w);
            } else if pos[w] > pv {
                queue.push_back(w);
            }
        }
    }
}

fn reach_count(g: &Graph, pos: &[usize], radius: usize, v: usize) -> usize {
    let mut count = 0;
    reach_walk(g, pos, radius, v, |_| count += 1);
    count
}

/// Vertices `w` with `w <= v` in `order` joined to `v` by a path of length
/// at most `r` whose internal vertices all lie strictly right of `v`.
/// Includes `v` itself.
pub fn r_reachable_set(
    g: &Graph,
    order: &[usize],
    r: usize,
    v: usize,
) -> Result<VertexSet, ParamError> {
    if r == 0 {
        return Err(ParamError::ZeroRadius);
    }
    let pos = positions(g.vertex_count(), order)?;
    let mut out = Vec::new();
    reach_walk(g, &pos, r, v, |w| out.push(w));
    Ok(out.into())
}

/// Exact `col_r` by dynamic programming over the set of vertices placed so
/// far: the reach of `v` only depends on `v` and the set left of it.
pub fn strong_colouring_number_exact(
    g: &Graph,
    r: usize,
    limit: usize,
) -> Result<OrderingWitness, ParamError> {
    if r == 0 {
        return Err(ParamError::ZeroRadius);
    }
    let n = g.vertex_count();
    guard("strong colouring number", n, limit)?;
    if n == 0 {
        return OrderingWitness::from_order(g, Vec::new(), r);
    }
    let adj = adjacency_masks(g);
    let full: u32 = ((1u64 << n) - 1) as u32;

    // reach of v given the left set `left` (v not in left)
    let reach = |v: usize, left: u32| -> u32 {
        let right = full & !left & !(1 << v);
        let mut found = 1u32 << v;
        let mut frontier = 1u32 << v;
        let mut visited = frontier;
        for _ in 0..r {
            let mut next = 0;
            for u in bits(frontier) {
                next |= adj[u];
            }
            next &= !visited;
            visited |= next;
            found |= next & left;
            frontier = next & right;
            if frontier == 0 {
                break;
            }
        }
        found
    };

    let size = 1usize << n;
    let mut best = vec![u8::MAX; size];
    best[0] = 0;
    for s in 1..size {
        let s = s as u32;
        let mut value = u8::MAX;
        for v in bits(s) {
            let rest = s & !(1 << v);
            let cost = (reach(v, rest).count_ones() as u8).max(best[rest as usize]);
            value = value.min(cost);
        }
        best[s as usize] = value;
    }

    // Peel the last vertex repeatedly; smallest index wins ties.
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let target = best[s as usize];
        let v = bits(s)
            .find(|&v| {
                let rest = s & !(1 << v);
                (reach(v, rest).count_ones() as u8).max(best[rest as usize]) == target
            })
            .expect("dp value is attained");
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    let witness = OrderingWitness::from_order(g, order, r)?;
    debug_assert_eq!(witness.bound, best[full as usize] as usize);
    Ok(witness)
}

/// Honest witness from the reverse degeneracy order.
pub fn strong_colouring_number_greedy(g: &Graph, r: usize) -> Result<OrderingWitness, ParamError> {
    let mut order = degeneracy(g).elimination_order;
    order.reverse();
    OrderingWitness::from_order(g, order, r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degeneracy {
    pub degeneracy: usize,
    /// Vertices in removal order; each has at most `degeneracy` neighbours
    /// later in the list.
    pub elimination_order: Vec<usize>,
}

/// Repeatedly deletes a minimum-degree vertex (smallest id on ties).
pub fn degeneracy(g: &Graph) -> Degeneracy {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = g.vertices().map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    while let Some((dv, v)) = queue.pop_first() {
        d = d.max(dv);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    Degeneracy {
        degeneracy: d,
        elimination_order: order,
    }
}
