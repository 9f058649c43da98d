use crate::graph::block_decomposition;
use crate::Graph;

/// Length of a longest cycle; 2 for forests.
pub fn circumference(g: &Graph) -> usize {
    longest_cycle(g).map_or(2, |c| c.len())
}

/// A longest cycle as a vertex sequence, `None` for forests.
///
/// Every cycle lives inside one block, so each block is searched on its
/// own, and each cycle is only enumerated from its smallest vertex.
pub fn longest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let mut best: Vec<usize> = Vec::new();
    for block in block_decomposition(g).blocks {
        if block.len() < 3 || block.len() <= best.len() {
            continue;
        }
        let (h, map) = g.induced_subgraph(block.as_slice());
        let mut search = Search {
            h: &h,
            on_path: vec![false; h.vertex_count()],
            path: Vec::new(),
            best: Vec::new(),
            floor: best.len(),
        };
        for s in h.vertices() {
            if h.vertex_count() - s <= search.floor.max(search.best.len()) {
                break;
            }
            search.path.push(s);
            search.on_path[s] = true;
            search.extend(s);
            search.on_path[s] = false;
            search.path.pop();
            if search.best.len() == h.vertex_count() {
                break;
            }
        }
        if search.best.len() > best.len() {
            best = search.best.iter().map(|&v| map[v]).collect();
        }
    }
    (!best.is_empty()).then_some(best)
}

struct Search<'a> {
    h: &'a Graph,
    on_path: Vec<bool>,
    path: Vec<usize>,
    best: Vec<usize>,
    floor: usize,
}

impl Search<'_> {
    fn extend(&mut self, start: usize) {
        let n = self.h.vertex_count();
        if self.best.len() == n {
            return;
        }
        let last = *self.path.last().unwrap();
        for &w in self.h.neighbors(last) {
            if w == start
                && self.path.len() >= 3
                && self.path.len() > self.best.len().max(self.floor)
            {
                self.best = self.path.clone();
            }
            if w > start && !self.on_path[w] {
                self.on_path[w] = true;
                self.path.push(w);
                self.extend(start);
                self.path.pop();
                self.on_path[w] = false;
            }
        }
    }
}
