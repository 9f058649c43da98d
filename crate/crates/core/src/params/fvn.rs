use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FeedbackVertexSet {
    pub set: VertexSet,
}

impl FeedbackVertexSet {
    pub fn size(&self) -> usize {
        self.set.len()
    }
}

pub fn is_feedback_vertex_set(g: &Graph, set: &[usize]) -> bool {
    set.iter().all(|&v| v < g.vertex_count()) && g.without(set).0.is_forest()
}

/// Minimum feedback vertex set by iterative deepening branch and bound.
///
/// Vertices of degree at most one are pruned, then the search branches on
/// the vertices of degree at least three on a shortest cycle: a degree-two
/// vertex can always be traded for the nearest branching vertex on its
/// cycle.
pub fn feedback_vertex_number(g: &Graph) -> FeedbackVertexSet {
    let mut search = Search {
        g,
        alive: vec![true; g.vertex_count()],
        chosen: Vec::new(),
    };
    for k in 0.. {
        if search.run(k) {
            let set: VertexSet = search.chosen.iter().copied().collect();
            debug_assert!(is_feedback_vertex_set(g, set.as_slice()));
            return FeedbackVertexSet { set };
        }
    }
    unreachable!()
}

struct Search<'a> {
    g: &'a Graph,
    alive: Vec<bool>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn degree(&self, v: usize) -> usize {
        self.g
            .neighbors(v)
            .iter()
            .filter(|&&w| self.alive[w])
            .count()
    }

    fn prune(&mut self) -> Vec<usize> {
        let mut removed = Vec::new();
        let mut queue: Vec<usize> = self
            .g
            .vertices()
            .filter(|&v| self.alive[v] && self.degree(v) <= 1)
            .collect();
        while let Some(v) = queue.pop() {
            if !self.alive[v] {
                continue;
            }
            self.alive[v] = false;
            removed.push(v);
            for &w in self.g.neighbors(v) {
                if self.alive[w] && self.degree(w) <= 1 {
                    queue.push(w);
                }
            }
        }
        removed
    }

    fn run(&mut self, budget: usize) -> bool {
        let pruned = self.prune();
        let found = match shortest_cycle(self.g, &self.alive) {
            None => true,
            Some(_) if budget == 0 => false,
            Some(cycle) => {
                let mut candidates: Vec<usize> = cycle
                    .iter()
                    .copied()
                    .filter(|&v| self.degree(v) >= 3)
                    .collect();
                if candidates.is_empty() {
                    candidates.push(*cycle.iter().min().unwrap());
                }
                candidates.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
                let mut ok = false;
                for c in candidates {
                    self.alive[c] = false;
                    self.chosen.push(c);
                    if self.run(budget - 1) {
                        ok = true;
                        break;
                    }
                    self.chosen.pop();
                    self.alive[c] = true;
                }
                ok
            }
        };
        if !found {
            for v in pruned {
                self.alive[v] = true;
            }
        }
        found
    }
}

/// Vertices of a shortest cycle among the alive vertices.
fn shortest_cycle(g: &Graph, alive: &[bool]) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in (0..n).filter(|&v| alive[v]) {
        let mut touched = vec![s];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        let mut hit: Option<(usize, usize)> = None;
        while let Some(u) = queue.pop_front() {
            if let Some((len, _)) = &best {
                if 2 * dist[u] + 1 >= *len {
                    break;
                }
            }
            for &w in g.neighbors(u) {
                if !alive[w] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if best.as_ref().map_or(true, |b| len < b.0) {
                        hit = Some((u, w));
                        best = Some((len, Vec::new()));
                    }
                }
            }
        }
        if let Some((u, w)) = hit {
            let mut cycle = Vec::new();
            for mut x in [u, w] {
                while x != s {
                    cycle.push(x);
                    x = parent[x];
                }
            }
            cycle.push(s);
            cycle.sort_unstable();
            cycle.dedup();
            best.as_mut().unwrap().1 = cycle;
        }
        for v in touched {
            dist[v] = usize::MAX;
            parent[v] = usize::MAX;
        }
    }
    best.map(|b| b.1)
}
