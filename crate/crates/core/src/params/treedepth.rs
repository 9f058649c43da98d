use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{adjacency_masks, bits, guard, ParamError};
use crate::Graph;

/// Rooted forest given as a parent array (`None` marks a root).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootedForestWitness {
    pub parent: Vec<Option<usize>>,
}

impl RootedForestWitness {
    /// Depth of every vertex, roots at depth 1. `None` if the parent
    /// relation has a cycle or points outside the vertex range.
    pub fn depths(&self) -> Option<Vec<usize>> {
        let n = self.parent.len();
        let mut depth = vec![0usize; n];
        for start in 0..n {
            let mut chain = Vec::new();
            let mut v = start;
            let base = loop {
                if depth[v] != 0 {
                    break depth[v];
                }
                if chain.len() == n {
                    return None;
                }
                chain.push(v);
                match self.parent[v] {
                    None => break 0,
                    Some(p) if p >= n => return None,
                    Some(p) => v = p,
                }
            };
            let mut d = base;
            for &u in chain.iter().rev() {
                d += 1;
                depth[u] = d;
            }
        }
        Some(depth)
    }

    /// Maximum depth, 0 for the empty forest.
    pub fn depth(&self) -> usize {
        self.depths()
            .map(|d| d.into_iter().max().unwrap_or(0))
            .unwrap_or(usize::MAX)
    }

    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut ch = vec![Vec::new(); self.parent.len()];
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = *p {
                ch[p].push(v);
            }
        }
        ch
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.parent.len())
            .filter(|&v| self.parent[v].is_none())
            .collect()
    }

    pub fn is_ancestor(&self, a: usize, mut v: usize) -> bool {
        loop {
            if v == a {
                return true;
            }
            match self.parent[v] {
                Some(p) => v = p,
                None => return false,
            }
        }
    }

    /// Acyclic, spans the graph, and every edge joins an ancestor to a
    /// descendant.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.parent.len() == g.vertex_count()
            && self.depths().is_some()
            && g.edges()
                .all(|(u, v)| self.is_ancestor(u, v) || self.is_ancestor(v, u))
    }
}

struct Solver {
    adj: Vec<u32>,
    memo: HashMap<u32, u8>,
}

impl Solver {
    fn components(&self, s: u32) -> Vec<u32> {
        let mut rest = s;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                for u in bits(frontier) {
                    next |= self.adj[u];
                }
                next &= s & !comp;
                comp |= next;
                frontier = next;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    fn td(&mut self, s: u32) -> u8 {
        if s == 0 {
            return 0;
        }
        if let Some(&v) = self.memo.get(&s) {
            return v;
        }
        let comps = self.components(s);
        let value = if comps.len() > 1 {
            comps.into_iter().map(|c| self.td(c)).max().unwrap()
        } else {
            let mut best = u8::MAX;
            for v in bits(s) {
                best = best.min(1 + self.td(s & !(1 << v)));
                if best as u32 == 1 {
                    break;
                }
            }
            best
        };
        self.memo.insert(s, value);
        value
    }

    fn build(&mut self, s: u32, parent: Option<usize>, out: &mut [Option<usize>]) {
        for comp in self.components(s) {
            let target = self.td(comp);
            let root = bits(comp)
                .find(|&v| 1 + self.td(comp & !(1 << v)) == target)
                .expect("memoised value is attained");
            out[root] = parent;
            self.build(comp & !(1 << root), Some(root), out);
        }
    }
}

/// Exact treedepth by recursion over connected components, memoised on
/// vertex subsets.
pub fn treedepth_exact(
    g: &Graph,
    limit: usize,
) -> Result<(usize, RootedForestWitness), ParamError> {
    let n = g.vertex_count();
    guard("treedepth", n, limit)?;
    let mut solver = Solver {
        adj: adjacency_masks(g),
        memo: HashMap::new(),
    };
    let full = if n == 0 { 0 } else { ((1u64 << n) - 1) as u32 };
    let value = solver.td(full) as usize;
    let mut parent = vec![None; n];
    solver.build(full, None, &mut parent);
    let witness = RootedForestWitness { parent };
    debug_assert_eq!(witness.depth(), value);
    Ok((value, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    /// Treedepth from the definition: try every rooted forest given as a
    /// parent array.
    fn brute_td(g: &Graph) -> usize {
        let n = g.vertex_count();
        let mut best = usize::MAX;
        let mut choice = vec![0usize; n];
        loop {
            let parent = choice
                .iter()
                .enumerate()
                .map(|(v, &c)| if c == v { None } else { Some(c) })
                .collect();
            let w = RootedForestWitness { parent };
            if w.is_valid_for(g) {
                best = best.min(w.depth());
            }
            let mut i = 0;
            while i < n {
                choice[i] += 1;
                if choice[i] < n {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        if n == 0 {
            0
        } else {
            best
        }
    }

    #[test]
    fn examples() {
        assert_eq!(treedepth_exact(&complete(4), 15).unwrap().0, 4);
        assert_eq!(treedepth_exact(&path(7), 15).unwrap().0, 3);
        assert_eq!(treedepth_exact(&path(8), 15).unwrap().0, 4);
        assert_eq!(treedepth_exact(&Graph::empty(4), 15).unwrap().0, 1);
        assert_eq!(treedepth_exact(&Graph::empty(0), 15).unwrap().0, 0);
        assert_eq!(treedepth_exact(&cycle(5), 15).unwrap().0, 4);
        assert_eq!(treedepth_exact(&star(6), 15).unwrap().0, 2);
    }

    #[test]
    fn depths_reject_cycles() {
        let w = RootedForestWitness {
            parent: vec![Some(1), Some(0)],
        };
        assert!(w.depths().is_none());
        assert!(!w.is_valid_for(&path(2)));
        let chain = RootedForestWitness {
            parent: vec![None, Some(0), Some(1)],
        };
        assert_eq!(chain.depths(), Some(vec![1, 2, 3]));
        assert!(chain.is_valid_for(&complete(3)));
    }

    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn matches_definition(n in 1usize..6, mask in proptest::collection::vec(any::<bool>(), 10)) {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let g = Graph::from_edges(n, pairs.iter().zip(&mask).filter(|(_, k)| **k).map(|(e, _)| *e)).unwrap();
            let (td, w) = treedepth_exact(&g, 15).unwrap();
            prop_assert!(w.is_valid_for(&g));
            prop_assert_eq!(w.depth(), td);
            prop_assert_eq!(td, brute_td(&g));
        }
    }
}
