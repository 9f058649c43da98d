use std::collections::VecDeque;

use super::reachability::{defective_colour_rooted, KstCheck};
use super::{check_colouring, ColourError, Colouring, ColouringReport, Guarantee, Measure};
use crate::graph::block_decomposition;
use crate::params::{circumference, strong_colouring_number_exact, strong_colouring_number_greedy};
use crate::{girth, Graph};

/// `(4k^2)^(k^2)`, saturating.
pub fn circumference_clustering_bound(k: usize) -> u128 {
    let base = 4u128.saturating_mul((k as u128).saturating_mul(k as u128));
    let exp = (k * k) as u32;
    base.checked_pow(exp).unwrap_or(u128::MAX)
}

/// 2-colouring of a girth-5 graph block by block.
///
/// Blocks are visited outward from `root` through the block-cut tree.
/// Each block is coloured with its attachment vertex properly coloured
/// inside the block (bridges and isolated vertices directly, cyclic
/// blocks by the rooted greedy colouring), then its colours are swapped
/// if needed to agree with the colour already given to the attachment
/// vertex. Cyclic blocks with at most `exact_limit` vertices use an
/// optimal 2-reach ordering, larger ones the degeneracy ordering.
pub fn two_colour_circumference_girth5(
    g: &Graph,
    root: Option<usize>,
    exact_limit: usize,
) -> Result<ColouringReport, ColourError> {
    let n = g.vertex_count();
    if let Some(r) = root.filter(|&r| r >= n) {
        return Err(ColourError::VertexOutOfRange { vertex: r, n });
    }
    let found = girth(g);
    if !found.at_least(5) {
        return Err(ColourError::GirthTooSmall { found, required: 5 });
    }
    let k = circumference(g);

    let blocks = block_decomposition(g).blocks;
    let mut blocks_of = vec![Vec::new(); n];
    for (i, b) in blocks.iter().enumerate() {
        for v in b.iter() {
            blocks_of[v].push(i);
        }
    }
    let mut colours = vec![usize::MAX; n];
    let mut block_done = vec![false; blocks.len()];
    let starts = root.into_iter().chain(0..n);
    for start in starts {
        if colours[start] != usize::MAX {
            continue;
        }
        colours[start] = 0;
        let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
        for &b in &blocks_of[start] {
            queue.push_back((b, start));
        }
        while let Some((b, attach)) = queue.pop_front() {
            if block_done[b] {
                continue;
            }
            block_done[b] = true;
            colour_block(g, blocks[b].as_slice(), attach, &mut colours, exact_limit)?;
            for v in blocks[b].iter().filter(|&v| v != attach) {
                for &other in &blocks_of[v] {
                    if !block_done[other] {
                        queue.push_back((other, v));
                    }
                }
            }
        }
    }

    let colouring = Colouring { colours, k: 2 };
    Ok(check_colouring(g, &colouring)?.with_guarantee(Guarantee {
        measure: Measure::Clustering,
        bound: circumference_clustering_bound(k),
        conditional: false,
    }))
}

fn colour_block(
    g: &Graph,
    block: &[usize],
    attach: usize,
    colours: &mut [usize],
    exact_limit: usize,
) -> Result<(), ColourError> {
    match block.len() {
        1 => {}
        2 => {
            let other = if block[0] == attach {
                block[1]
            } else {
                block[0]
            };
            colours[other] = 1 - colours[attach];
        }
        _ => {
            let (h, map) = g.induced_subgraph(block);
            let local = map
                .iter()
                .position(|&v| v == attach)
                .expect("attachment in block");
            let witness = if h.vertex_count() <= exact_limit {
                strong_colouring_number_exact(&h, 2, exact_limit)
            } else {
                strong_colouring_number_greedy(&h, 2)
            }
            .expect("radius 2 and size checked");
            // girth >= 5 was checked on the whole graph, so no 4-cycles
            let report = defective_colour_rooted(&h, 2, 2, &witness, local, KstCheck::Assume)?;
            let flip = report.colouring.colour(local) != colours[attach];
            for (i, &v) in map.iter().enumerate() {
                let c = report.colouring.colour(i);
                colours[v] = if flip { 1 - c } else { c };
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn properly_coloured(g: &Graph, r: &ColouringReport, v: usize) -> bool {
        g.neighbors(v)
            .iter()
            .all(|&w| r.colouring.colour(w) != r.colouring.colour(v))
    }

    #[test]
    fn trees_are_properly_coloured() {
        let t =
            Graph::from_edges(8, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6), (6, 7)]).unwrap();
        let r = two_colour_circumference_girth5(&t, None, 16).unwrap();
        assert!(r.proper && r.meets_guarantee());
        assert_eq!(r.guarantee.unwrap().bound, 65_536);
    }

    #[test]
    fn c5() {
        let g = cycle(5);
        for v in 0..5 {
            let r = two_colour_circumference_girth5(&g, Some(v), 16).unwrap();
            assert!(r.clustering <= 2 && r.meets_guarantee());
            assert!(properly_coloured(&g, &r, v));
        }
    }

    #[test]
    fn two_pentagons_sharing_a_vertex() {
        let edges =
            (0..5)
                .map(|i| (i, (i + 1) % 5))
                .chain([(0, 5), (5, 6), (6, 7), (7, 8), (8, 0)]);
        let g = Graph::from_edges(9, edges).unwrap();
        let r = two_colour_circumference_girth5(&g, None, 16).unwrap();
        assert!(properly_coloured(&g, &r, 0));
        for root in [3, 7] {
            let r = two_colour_circumference_girth5(&g, Some(root), 16).unwrap();
            assert!(properly_coloured(&g, &r, root));
            assert!(r.meets_guarantee());
        }
    }

    #[test]
    fn rejects_short_girth() {
        assert!(matches!(
            two_colour_circumference_girth5(&cycle(4), None, 16),
            Err(ColourError::GirthTooSmall { .. })
        ));
    }

    #[test]
    fn bound_saturates() {
        assert_eq!(circumference_clustering_bound(2), 65_536);
        assert_eq!(circumference_clustering_bound(5), u128::MAX);
    }

    #[test]
    fn larger_blocks_use_greedy_witness() {
        let g = heawood().subdivided();
        let r = two_colour_circumference_girth5(&g, Some(0), 16).unwrap();
        assert!(properly_coloured(&g, &r, 0));
        assert!(r.meets_guarantee());
        let p = petersen();
        let r = two_colour_circumference_girth5(&p, Some(3), 16).unwrap();
        assert!(properly_coloured(&p, &r, 3));
    }
}
