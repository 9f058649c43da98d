use serde::{Deserialize, Serialize};

use super::{check_colouring, Colouring, ColouringReport, Guarantee, Measure};
use crate::{Graph, VertexSet};

/// Irreducible remainder: minimum degree at least 2 and no edge joining two
/// degree-2 vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StuckCertificate {
    pub vertices: VertexSet,
}

impl StuckCertificate {
    pub fn subgraph(&self, g: &Graph) -> Graph {
        g.induced_subgraph(self.vertices.as_slice()).0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LargeGirthOutcome {
    Coloured(ColouringReport),
    Stuck(StuckCertificate),
}

enum Step {
    Single(usize),
    Pair(usize, usize),
}

/// Deletes vertices of degree at most 1, else adjacent pairs of degree-2
/// vertices (smallest ids first), then colours back so that each reinserted
/// vertex differs from its outside neighbour. Clustering at most 2.
pub fn two_colour_large_girth(g: &Graph) -> LargeGirthOutcome {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut remaining = n;
    let mut steps = Vec::new();
    let kill = |v: usize, alive: &mut Vec<bool>, degree: &mut Vec<usize>| {
        alive[v] = false;
        for &w in g.neighbors(v) {
            degree[w] -= 1;
        }
    };
    while remaining > 0 {
        if let Some(v) = (0..n).find(|&v| alive[v] && degree[v] <= 1) {
            kill(v, &mut alive, &mut degree);
            steps.push(Step::Single(v));
            remaining -= 1;
            continue;
        }
        let pair = (0..n)
            .filter(|&v| alive[v] && degree[v] == 2)
            .find_map(|v| {
                g.neighbors(v)
                    .iter()
                    .find(|&&w| w > v && alive[w] && degree[w] == 2)
                    .map(|&w| (v, w))
            });
        match pair {
            Some((v, w)) => {
                kill(v, &mut alive, &mut degree);
                kill(w, &mut alive, &mut degree);
                steps.push(Step::Pair(v, w));
                remaining -= 2;
            }
            None => {
                return LargeGirthOutcome::Stuck(StuckCertificate {
                    vertices: (0..n).filter(|&v| alive[v]).collect(),
                })
            }
        }
    }

    let mut colours = vec![usize::MAX; n];
    let avoid = |colours: &[usize], x: usize, skip: usize| {
        g.neighbors(x)
            .iter()
            .find(|&&w| w != skip && colours[w] != usize::MAX)
            .map_or(0, |&w| 1 - colours[w])
    };
    for step in steps.iter().rev() {
        match *step {
            Step::Single(v) => colours[v] = avoid(&colours, v, usize::MAX),
            Step::Pair(v, w) => {
                colours[v] = avoid(&colours, v, w);
                colours[w] = avoid(&colours, w, v);
            }
        }
    }
    let report = check_colouring(g, &Colouring { colours, k: 2 }).expect("total 2-colouring");
    LargeGirthOutcome::Coloured(report.with_guarantee(Guarantee {
        measure: Measure::Clustering,
        bound: 2,
        conditional: false,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn clustering(g: &Graph) -> usize {
        match two_colour_large_girth(g) {
            LargeGirthOutcome::Coloured(r) => r.clustering,
            LargeGirthOutcome::Stuck(s) => panic!("stuck on {s:?}"),
        }
    }

    #[test]
    fn trees_are_proper() {
        let t = Graph::from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6)]).unwrap();
        assert_eq!(clustering(&t), 1);
        assert_eq!(clustering(&Graph::empty(3)), 1);
    }

    #[test]
    fn cycles() {
        for n in 3..30 {
            let c = clustering(&cycle(n));
            assert!(c <= 2);
            if n % 2 == 1 {
                assert_eq!(c, 2);
            }
        }
    }

    #[test]
    fn petersen_is_stuck() {
        match two_colour_large_girth(&petersen()) {
            LargeGirthOutcome::Stuck(s) => assert_eq!(s.vertices.len(), 10),
            other => panic!("expected a certificate, got {other:?}"),
        }
    }

    #[test]
    fn certificate_is_irreducible() {
        // Heawood with a pendant path: the path is peeled, Heawood remains
        let h = heawood();
        let g = Graph::from_edges(16, h.edges().chain([(0, 14), (14, 15)])).unwrap();
        match two_colour_large_girth(&g) {
            LargeGirthOutcome::Stuck(s) => {
                let sub = s.subgraph(&g);
                assert_eq!(s.vertices, (0..14).collect());
                assert!(sub.min_degree() >= 2);
                assert!(sub
                    .edges()
                    .all(|(u, v)| sub.degree(u) > 2 || sub.degree(v) > 2));
            }
            other => panic!("expected a certificate, got {other:?}"),
        }
    }
}
