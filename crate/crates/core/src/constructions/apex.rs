//! Sparse grid-based apex graphs of girth 5 and 8 with many edges.

use super::{ConstructionError, GadgetMeta};
use crate::graph::ball;
use crate::{Girth, Graph};

/// Number of apex vertices in [`apex23_grid_girth8`].
pub const APEX23_LABELS: usize = 23;

fn check_side(construction: &'static str, m: usize, min: usize) -> Result<(), ConstructionError> {
    if m < min {
        return Err(ConstructionError::InvalidParameter {
            construction,
            reason: format!("grid side must be at least {min}, got {m}"),
        });
    }
    Ok(())
}

/// `m x m` grid (vertex `(x, y)` has id `y*m + x`) in which every vertical
/// edge `(x,y)(x,y+1)` with `x + y` even is subdivided once, plus an apex
/// adjacent to all division vertices.
///
/// Division vertices follow the grid, ordered by `y` then `x`; the apex is
/// the last vertex.
pub fn apex_grid_girth5(m: usize) -> Result<(Graph, GadgetMeta), ConstructionError> {
    check_side("apex grid girth 5", m, 3)?;
    let id = |x: usize, y: usize| y * m + x;
    let mut edges = Vec::new();
    let mut division = Vec::new();
    let mut next = m * m;
    for y in 0..m {
        for x in 0..m {
            if x + 1 < m {
                edges.push((id(x, y), id(x + 1, y)));
            }
            if y + 1 < m {
                if (x + y) % 2 == 0 {
                    edges.push((id(x, y), next));
                    edges.push((next, id(x, y + 1)));
                    division.push(next);
                    next += 1;
                } else {
                    edges.push((id(x, y), id(x, y + 1)));
                }
            }
        }
    }
    let apex = next;
    edges.extend(division.iter().map(|&s| (s, apex)));
    let g = Graph::from_edges(apex + 1, edges).expect("subdivided grid plus apex is simple");
    let mut meta = GadgetMeta::new("apex-grid5")
        .param("m", m)
        .named("apex", vec![apex])
        .named("division", division)
        .note("edge/vertex ratio tends to 2 as m grows");
    meta.claims.girth = Some(Girth::Finite(5));
    meta.claims.apex_count = Some(1);
    Ok((g, meta))
}

/// `m x m` grid with every edge subdivided once; division vertices get one
/// of 23 labels by first-fit so that equal labels are at distance at least
/// 6, and apex `i` is joined to every division vertex labelled `i`.
///
/// Ids: grid vertex `(x, y)` is `y*m + x`; division vertices follow in
/// row-major order of their doubled coordinates (the midpoint of
/// `(x,y)(x+1,y)` sits at `(2x+1, 2y)`, of `(x,y)(x,y+1)` at `(2x, 2y+1)`);
/// the 23 apexes come last, apex `i` at `n - 23 + i`.
pub fn apex23_grid_girth8(m: usize) -> Result<(Graph, GadgetMeta), ConstructionError> {
    check_side("apex23 grid girth 8", m, 4)?;
    let id = |x: usize, y: usize| y * m + x;
    let mut edges = Vec::new();
    let mut next = m * m;
    for yy in 0..2 * m - 1 {
        for xx in 0..2 * m - 1 {
            let (a, b) = match (xx % 2, yy % 2) {
                (1, 0) => (id(xx / 2, yy / 2), id(xx / 2 + 1, yy / 2)),
                (0, 1) => (id(xx / 2, yy / 2), id(xx / 2, yy / 2 + 1)),
                _ => continue,
            };
            edges.push((a, next));
            edges.push((next, b));
            next += 1;
        }
    }
    let grid_end = m * m;
    let subdivided = Graph::from_edges(next, edges.clone()).expect("subdivided grid is simple");
    let mut label: Vec<Option<usize>> = vec![None; next];
    for s in grid_end..next {
        let mut used = [false; APEX23_LABELS];
        for w in ball(&subdivided, s, 5) {
            if let Some(l) = label[w] {
                used[l] = true;
            }
        }
        let l = used
            .iter()
            .position(|&u| !u)
            .ok_or(ConstructionError::LabellingFailed {
                vertex: s,
                labels: APEX23_LABELS,
            })?;
        label[s] = Some(l);
    }
    let apexes: Vec<usize> = (next..next + APEX23_LABELS).collect();
    for s in grid_end..next {
        edges.push((s, next + label[s].unwrap()));
    }
    let g = Graph::from_edges(next + APEX23_LABELS, edges).expect("labelled apexes are simple");
    let mut meta = GadgetMeta::new("apex23-grid8")
        .param("m", m)
        .named("A", apexes)
        .named("division", (grid_end..next).collect())
        .note("edge/vertex ratio tends to 2 as m grows");
    meta.claims.girth = Some(Girth::Finite(8));
    meta.claims.apex_count = Some(APEX23_LABELS);
    Ok((g, meta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::girth;
    use crate::graph::distances_from;

    /// Counts from the construction rules alone, without building the graph.
    fn apex5_counts(m: usize) -> (usize, usize) {
        let grid_edges = 2 * m * (m - 1);
        let division = (0..m)
            .flat_map(|x| (0..m - 1).map(move |y| (x, y)))
            .filter(|(x, y)| (x + y) % 2 == 0)
            .count();
        (m * m + division + 1, grid_edges + 2 * division)
    }

    #[test]
    fn apex5_counts_match() {
        assert_eq!(apex5_counts(4), (23, 36));
        for m in 3..=9 {
            let (g, meta) = apex_grid_girth5(m).unwrap();
            assert_eq!((g.vertex_count(), g.edge_count()), apex5_counts(m));
            assert!(meta.names_are_valid(&g));
        }
        assert!(apex_grid_girth5(2).is_err());
    }

    #[test]
    fn apex5_girth_and_structure() {
        for m in 4..=8 {
            let (g, meta) = apex_grid_girth5(m).unwrap();
            assert_eq!(girth(&g), Girth::Finite(5));
            let apex = meta.named_vertices["apex"][0];
            assert_eq!(apex, g.vertex_count() - 1);
            let (rest, _) = g.without(&[apex]);
            // removing the apex leaves a subdivided grid: faces of size 5
            assert_eq!(girth(&rest), Girth::Finite(5));
        }
    }

    #[test]
    fn apex5_ratio_increases() {
        let ratios: Vec<f64> = (4..=12)
            .map(|m| {
                let (g, _) = apex_grid_girth5(m).unwrap();
                g.edge_count() as f64 / g.vertex_count() as f64
            })
            .collect();
        assert!(ratios.windows(2).all(|w| w[0] < w[1]));
        assert!(ratios.iter().all(|&r| r < 2.0));
    }

    #[test]
    fn apex23_labels_are_far_apart() {
        let m = 5;
        let (g, meta) = apex23_grid_girth8(m).unwrap();
        let apexes = &meta.named_vertices["A"];
        let (core, _) = g.without(apexes);
        let division = &meta.named_vertices["division"];
        assert_eq!(division.len(), 2 * m * (m - 1));
        for &a in apexes {
            let class = g.neighbors(a);
            for &u in class {
                let d = distances_from(&core, u);
                assert!(class
                    .iter()
                    .all(|&w| w == u || d[w].map_or(true, |x| x >= 6)));
            }
        }
        assert!(division
            .iter()
            .all(|&s| apexes.iter().filter(|&&a| g.has_edge(a, s)).count() == 1));
    }

    #[test]
    fn apex23_girth() {
        for m in 5..=6 {
            let (g, _) = apex23_grid_girth8(m).unwrap();
            assert_eq!(g.vertex_count(), m * m + 2 * m * (m - 1) + 23);
            assert_eq!(girth(&g), Girth::Finite(8));
        }
    }
}
