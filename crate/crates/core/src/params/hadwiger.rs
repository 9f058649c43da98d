use super::{adjacency_masks, bits, guard, ParamError};
use crate::minors::MinorModel;
use crate::{Graph, VertexSet};

/// Largest `t` with a `K_t` minor, with a model.
///
/// Unused vertices of a component can always be absorbed into a touching
/// branch set, so it suffices to search partitions of one component into
/// exactly `t` connected, pairwise adjacent parts.
pub fn hadwiger_number(g: &Graph, limit: usize) -> Result<(usize, MinorModel), ParamError> {
    guard("hadwiger number", g.vertex_count(), limit)?;
    let mut best = (0, MinorModel::default());
    for comp in g.components() {
        let (h, map) = g.induced_subgraph(&comp);
        let (t, model) = component_hadwiger(&h, best.0);
        if t > best.0 {
            let branch_sets = model
                .branch_sets
                .iter()
                .map(|s| s.iter().map(|v| map[v]).collect::<VertexSet>())
                .collect();
            best = (t, MinorModel { branch_sets });
        }
    }
    Ok(best)
}

fn component_hadwiger(h: &Graph, beat: usize) -> (usize, MinorModel) {
    let n = h.vertex_count();
    let m = h.edge_count();
    let mut best = (
        1,
        MinorModel {
            branch_sets: vec![VertexSet::from(vec![0])],
        },
    );
    let adj = adjacency_masks(h);
    let mut t = beat.max(1) + 1;
    while t <= n && t * (t - 1) / 2 <= m {
        match partition_model(&adj, n, t) {
            Some(parts) => {
                best = (
                    t,
                    MinorModel {
                        branch_sets: parts.into_iter().map(|p| bits(p).collect()).collect(),
                    },
                );
                t += 1;
            }
            None => break,
        }
    }
    best
}

fn connected(adj: &[u32], set: u32) -> bool {
    if set == 0 {
        return false;
    }
    let mut seen = set & set.wrapping_neg();
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for u in bits(frontier) {
            next |= adj[u];
        }
        next &= set & !seen;
        seen |= next;
        frontier = next;
    }
    seen == set
}

/// Restricted-growth enumeration of partitions into exactly `t` parts.
fn partition_model(adj: &[u32], n: usize, t: usize) -> Option<Vec<u32>> {
    let mut parts = vec![0u32; t];
    fn rec(adj: &[u32], n: usize, t: usize, v: usize, used: usize, parts: &mut [u32]) -> bool {
        if n - v < t - used {
            return false;
        }
        if v == n {
            return parts.iter().all(|&p| connected(adj, p))
                && (0..t).all(|i| {
                    let reach = bits(parts[i]).fold(0, |acc, u| acc | adj[u]);
                    (i + 1..t).all(|j| reach & parts[j] != 0)
                });
        }
        for label in 0..(used + 1).min(t) {
            parts[label] |= 1 << v;
            if rec(adj, n, t, v + 1, used.max(label + 1), parts) {
                return true;
            }
            parts[label] &= !(1 << v);
        }
        false
    }
    rec(adj, n, t, 0, 0, &mut parts).then_some(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::minors::{contract_model, verify_model};

    fn check(g: &Graph, expected: usize) {
        let (t, model) = hadwiger_number(g, 12).unwrap();
        assert_eq!(t, expected);
        assert!(verify_model(g, &model).valid);
        assert_eq!(contract_model(g, &model).unwrap(), complete(t));
    }

    #[test]
    fn examples() {
        check(&path(4), 2);
        check(&cycle(5), 3);
        check(&complete(4), 4);
        check(&complete(5), 5);
        check(&Graph::empty(3), 1);
        // Petersen has a K5 minor but no K6 minor (only 15 edges)
        check(&petersen(), 5);
        check(&complete_bipartite(3, 3), 4);
        check(&grid(3, 3), 4);
        assert_eq!(hadwiger_number(&Graph::empty(0), 12).unwrap().0, 0);
        assert!(hadwiger_number(&Graph::empty(13), 12).is_err());
    }

    /// C5 has no K4 minor: every contraction to 4 vertices is a 4-cycle.
    #[test]
    fn c5_has_no_k4_model() {
        let adj = adjacency_masks(&cycle(5));
        assert!(partition_model(&adj, 5, 4).is_none());
        assert!(partition_model(&adj, 5, 3).is_some());
    }
}
