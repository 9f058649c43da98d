//! 2-colourings for graphs with a small feedback vertex set.

use std::collections::VecDeque;

use super::{
    binomial, check_colouring, ColourError, Colouring, ColouringReport, Guarantee, Measure,
};
use crate::params::is_feedback_vertex_set;
use crate::{girth, Graph};

enum Step {
    Single(usize),
    Pair { leaf: usize, parent: usize },
}

/// Clustering-2 colouring when deleting one vertex leaves a forest and the
/// girth is at least 5.
///
/// Peels either a vertex of degree at most 1 (other than the apex) or the
/// deepest leaf of the forest together with its parent, then colours the
/// removed vertices back in reverse order.
pub fn two_colour_fvn1_girth5(
    g: &Graph,
    apex: Option<usize>,
) -> Result<ColouringReport, ColourError> {
    let n = g.vertex_count();
    let found = girth(g);
    if !found.at_least(5) {
        return Err(ColourError::GirthTooSmall { found, required: 5 });
    }
    let apex = match apex {
        Some(v) if v >= n => return Err(ColourError::VertexOutOfRange { vertex: v, n }),
        Some(v) if !is_feedback_vertex_set(g, &[v]) => {
            return Err(ColourError::NotAFeedbackSet(vec![v]))
        }
        Some(v) => Some(v),
        None => match g.vertices().find(|&v| is_feedback_vertex_set(g, &[v])) {
            Some(v) => Some(v),
            None if n == 0 => None,
            None => return Err(ColourError::FeedbackNumberTooLarge),
        },
    };

    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut steps = Vec::new();
    let mut remaining = n - usize::from(apex.is_some());
    let kill = |v: usize, alive: &mut Vec<bool>, degree: &mut Vec<usize>| {
        alive[v] = false;
        for &w in g.neighbors(v) {
            degree[w] -= 1;
        }
    };
    while remaining > 0 {
        if let Some(x) = (0..n).find(|&x| alive[x] && Some(x) != apex && degree[x] <= 1) {
            kill(x, &mut alive, &mut degree);
            steps.push(Step::Single(x));
            remaining -= 1;
            continue;
        }
        // Every forest leaf now sees the apex; take a deepest one.
        let r = (0..n).find(|&x| alive[x] && Some(x) != apex).unwrap();
        let mut parent = vec![usize::MAX; n];
        let mut order = vec![r];
        parent[r] = r;
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &w in g.neighbors(u) {
                if alive[w] && Some(w) != apex && parent[w] == usize::MAX {
                    parent[w] = u;
                    order.push(w);
                }
            }
        }
        let leaf = *order.last().unwrap();
        let p = parent[leaf];
        debug_assert!(
            p != leaf && degree[p] <= 2,
            "girth >= 5 forces a degree-2 parent"
        );
        kill(leaf, &mut alive, &mut degree);
        kill(p, &mut alive, &mut degree);
        steps.push(Step::Pair { leaf, parent: p });
        remaining -= 2;
    }

    let mut colours = vec![usize::MAX; n];
    if let Some(v) = apex {
        colours[v] = 0;
    }
    let avoid = |colours: &[usize], x: usize, skip: usize| {
        g.neighbors(x)
            .iter()
            .find(|&&w| w != skip && colours[w] != usize::MAX)
            .map_or(0, |&w| 1 - colours[w])
    };
    for step in steps.iter().rev() {
        match *step {
            Step::Single(x) => colours[x] = avoid(&colours, x, usize::MAX),
            Step::Pair { leaf, parent } => {
                colours[leaf] = apex.map_or(0, |v| 1 - colours[v]);
                colours[parent] = avoid(&colours, parent, leaf);
            }
        }
    }

    let colouring = Colouring { colours, k: 2 };
    Ok(check_colouring(g, &colouring)?.with_guarantee(Guarantee {
        measure: Measure::Clustering,
        bound: 2,
        conditional: false,
    }))
}

/// Clustering `C(|A|,2) + |A| + 1` colouring when `G - A` is a forest and
/// the girth is at least 7.
///
/// `A` is white and its neighbourhood `N` black. Each tree of `G - A` is
/// rooted at its smallest vertex, and every component `C` of `G - A - N`
/// is coloured by depth parity from its topmost vertex, which is white.
pub fn two_colour_fvn_girth7(g: &Graph, a: &[usize]) -> Result<ColouringReport, ColourError> {
    let n = g.vertex_count();
    if let Some(&v) = a.iter().find(|&&v| v >= n) {
        return Err(ColourError::VertexOutOfRange { vertex: v, n });
    }
    if !is_feedback_vertex_set(g, a) {
        return Err(ColourError::NotAFeedbackSet(a.to_vec()));
    }
    let found = girth(g);
    if !found.at_least(7) {
        return Err(ColourError::GirthTooSmall { found, required: 7 });
    }
    let mut in_a = vec![false; n];
    for &v in a {
        in_a[v] = true;
    }
    const WHITE: usize = 0;
    const BLACK: usize = 1;
    let mut colours = vec![usize::MAX; n];
    for v in g.vertices() {
        if in_a[v] {
            colours[v] = WHITE;
        } else if g.neighbors(v).iter().any(|&w| in_a[w]) {
            colours[v] = BLACK;
        }
    }

    let depth = forest_depths(g, &in_a);
    for s in g.vertices() {
        if colours[s] != usize::MAX {
            continue;
        }
        // component of G - A - N containing s
        let mut comp = vec![s];
        let mut seen = std::collections::HashSet::from([s]);
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in g.neighbors(u) {
                if colours[w] == usize::MAX && seen.insert(w) {
                    comp.push(w);
                }
            }
        }
        let top = comp.iter().map(|&v| depth[v]).min().unwrap();
        for &v in &comp {
            colours[v] = if (depth[v] - top) % 2 == 0 {
                WHITE
            } else {
                BLACK
            };
        }
    }

    let k = a.iter().collect::<std::collections::BTreeSet<_>>().len() as u128;
    let colouring = Colouring { colours, k: 2 };
    Ok(check_colouring(g, &colouring)?.with_guarantee(Guarantee {
        measure: Measure::Clustering,
        bound: binomial(k, 2) + k + 1,
        conditional: false,
    }))
}

/// Depth in `G - A` with each tree rooted at its smallest vertex.
fn forest_depths(g: &Graph, in_a: &[bool]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut depth = vec![usize::MAX; n];
    for r in g.vertices() {
        if in_a[r] || depth[r] != usize::MAX {
            continue;
        }
        depth[r] = 0;
        let mut queue = VecDeque::from([r]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !in_a[w] && depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    depth
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::params::feedback_vertex_number;

    #[test]
    fn fvn1_examples() {
        let t = Graph::from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6)]).unwrap();
        let g = t.disjoint_union(&Graph::empty(1));
        let r = two_colour_fvn1_girth5(&g, Some(7)).unwrap();
        assert!(r.clustering <= 2);
        for v in 0..5 {
            let r = two_colour_fvn1_girth5(&cycle(5), Some(v)).unwrap();
            assert!(r.clustering <= 2 && r.meets_guarantee());
        }
        assert!(two_colour_fvn1_girth5(&cycle(9), None).unwrap().clustering <= 2);
    }

    #[test]
    fn fvn1_subdivided_star_with_apex() {
        // star with 4 leaves, each edge subdivided, apex joined to the leaves
        let star = star(4).subdivided();
        let n = star.vertex_count();
        let leaves: Vec<usize> = (1..=4).collect();
        let edges = star.edges().chain(leaves.iter().map(|&l| (l, n)));
        let g = Graph::from_edges(n + 1, edges).unwrap();
        assert!(girth(&g).at_least(5));
        let r = two_colour_fvn1_girth5(&g, Some(n)).unwrap();
        assert!(r.clustering <= 2);
    }

    #[test]
    fn fvn1_preconditions() {
        assert!(matches!(
            two_colour_fvn1_girth5(&cycle(4), None),
            Err(ColourError::GirthTooSmall { .. })
        ));
        assert_eq!(
            two_colour_fvn1_girth5(&petersen(), None),
            Err(ColourError::FeedbackNumberTooLarge)
        );
        assert!(matches!(
            two_colour_fvn1_girth5(&cycle(5).disjoint_union(&cycle(5)), Some(0)),
            Err(ColourError::NotAFeedbackSet(_))
        ));
    }

    #[test]
    fn girth7_examples() {
        let t = Graph::from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)]).unwrap();
        let r = two_colour_fvn_girth7(&t, &[]).unwrap();
        assert!(r.proper && r.clustering == 1);

        let r = two_colour_fvn_girth7(&cycle(14), &[0]).unwrap();
        assert_eq!(r.guarantee.unwrap().bound, 2);
        assert!(r.clustering <= 2);

        let g = heawood().subdivided();
        let a = feedback_vertex_number(&g).set;
        let r = two_colour_fvn_girth7(&g, a.as_slice()).unwrap();
        assert!(r.meets_guarantee());
        for comp in super::super::monochromatic_components(&g, &r.colouring) {
            if comp.iter().any(|v| a.contains(*v)) {
                assert!(comp.iter().all(|v| a.contains(*v)));
            }
        }
    }

    /// Rooting each component of `G - A - N` at its smallest vertex instead
    /// of its topmost one breaks the clustering bound.
    #[test]
    fn component_roots_must_be_topmost() {
        // a = 7 sees only p = 6; paths 0-1-2 and 3-4-5 hang off p at 1 and 4
        let g =
            Graph::from_edges(8, [(0, 1), (1, 2), (1, 6), (3, 4), (4, 5), (4, 6), (6, 7)]).unwrap();
        let r = two_colour_fvn_girth7(&g, &[7]).unwrap();
        assert!(r.clustering <= 2);

        let mut naive = r.colouring.clone();
        for comp in [[0, 1, 2], [3, 4, 5]] {
            let root = comp[0];
            for v in comp {
                let dist = crate::graph::distances_from(&g, root)[v].unwrap();
                naive.colours[v] = dist % 2;
            }
        }
        assert_eq!(check_colouring(&g, &naive).unwrap().clustering, 3);
    }

    #[test]
    fn girth7_preconditions() {
        assert!(matches!(
            two_colour_fvn_girth7(&cycle(6), &[0]),
            Err(ColourError::GirthTooSmall { .. })
        ));
        assert!(matches!(
            two_colour_fvn_girth7(&cycle(8), &[]),
            Err(ColourError::NotAFeedbackSet(_))
        ));
    }
}
