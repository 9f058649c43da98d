use serde::{Deserialize, Serialize};

use super::{check_colouring, Colouring, ColouringReport, Guarantee, Measure};
use crate::params::degeneracy;
use crate::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegenerateOutcome {
    Coloured(ColouringReport),
    /// Nonempty vertex set inducing minimum degree at least `limit`.
    TooDense {
        core: VertexSet,
    },
}

/// Proper colouring with `limit` colours along the reverse elimination
/// order when the graph is `(limit - 1)`-degenerate; otherwise the
/// `limit`-core as a certificate.
pub fn proper_colour_degenerate(g: &Graph, limit: usize) -> DegenerateOutcome {
    let d = degeneracy(g);
    if g.vertex_count() > 0 && d.degeneracy + 1 > limit {
        return DegenerateOutcome::TooDense {
            core: core(g, limit),
        };
    }
    let mut colours = vec![usize::MAX; g.vertex_count()];
    for &v in d.elimination_order.iter().rev() {
        let used: Vec<usize> = g.neighbors(v).iter().map(|&w| colours[w]).collect();
        colours[v] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    let colouring = Colouring { colours, k: limit };
    let report = check_colouring(g, &colouring).expect("at most `limit` colours by degeneracy");
    DegenerateOutcome::Coloured(report.with_guarantee(Guarantee {
        measure: Measure::Defect,
        bound: 0,
        conditional: false,
    }))
}

/// Vertices left after repeatedly deleting those of degree below `limit`.
fn core(g: &Graph, limit: usize) -> VertexSet {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut stack: Vec<usize> = g.vertices().filter(|&v| degree[v] < limit).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] < limit {
                    stack.push(w);
                }
            }
        }
    }
    (0..n).filter(|&v| alive[v]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn coloured(o: DegenerateOutcome) -> ColouringReport {
        match o {
            DegenerateOutcome::Coloured(r) => r,
            DegenerateOutcome::TooDense { core } => panic!("unexpected core {core:?}"),
        }
    }

    #[test]
    fn examples() {
        for n in [3, 5, 9] {
            let r = coloured(proper_colour_degenerate(&cycle(n), 3));
            assert!(r.proper && r.colouring.k == 3);
        }
        let t = Graph::from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)]).unwrap();
        assert!(coloured(proper_colour_degenerate(&t, 2)).proper);
        assert_eq!(
            proper_colour_degenerate(&complete(5), 3),
            DegenerateOutcome::TooDense {
                core: (0..5).collect()
            }
        );
        // a triangle with a pendant path: the 2-core is the triangle
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(
            proper_colour_degenerate(&g, 2),
            DegenerateOutcome::TooDense {
                core: vec![0, 1, 2].into()
            }
        );
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn colouring_or_dense_core(n in 1usize..14, mask in proptest::collection::vec(proptest::bool::weighted(0.3), 91), limit in 1usize..5) {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let g = Graph::from_edges(n, pairs.iter().zip(&mask).filter(|(_, k)| **k).map(|(e, _)| *e)).unwrap();
            match proper_colour_degenerate(&g, limit) {
                DegenerateOutcome::Coloured(r) => {
                    prop_assert!(g.edges().all(|(u, v)| r.colouring.colours[u] != r.colouring.colours[v]));
                    prop_assert!(r.colouring.colours.iter().all(|&c| c < limit));
                }
                DegenerateOutcome::TooDense { core } => {
                    prop_assert!(!core.is_empty());
                    let (h, _) = g.induced_subgraph(core.as_slice());
                    prop_assert!(h.min_degree() >= limit);
                }
            }
        }
    }
}
