use super::{Graph, VertexSet};

/// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices) and
/// cut vertices.
///
/// Each block is given by its vertex set; the block's edges are exactly the
/// edges of `g` induced by that set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

/// Hopcroft-Tarjan with an explicit edge stack (no recursion, so long paths
/// are fine).
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = time;
            time += 1;
            blocks.push(VertexSet::from(vec![root]));
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(u) {
                let w = g.neighbors(u)[*idx];
                *idx += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, u, 0));
                } else if disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent == usize::MAX {
                    continue;
                }
                low[parent] = low[parent].min(low[u]);
                if low[u] >= disc[parent] {
                    if parent != root {
                        is_cut[parent] = true;
                    }
                    let mut members = Vec::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        members.push(a);
                        members.push(b);
                        if (a, b) == (parent, u) {
                            break;
                        }
                    }
                    blocks.push(VertexSet::from(members));
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    blocks.sort();
    BlockDecomposition {
        blocks,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let bd = block_decomposition(&g);
        assert_eq!(bd.blocks.len(), 2);
        assert_eq!(bd.cut_vertices, VertexSet::from(vec![2]));
    }

    #[test]
    fn tree_blocks_are_edges() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let bd = block_decomposition(&g);
        assert_eq!(bd.blocks.len(), 5);
        assert!(bd.blocks.iter().all(|b| b.len() == 2));
        assert_eq!(bd.cut_vertices, VertexSet::from(vec![1, 3]));
    }

    #[test]
    fn cycle_is_one_block() {
        let bd = block_decomposition(&cycle(5));
        assert_eq!(bd.blocks, vec![VertexSet::from(vec![0, 1, 2, 3, 4])]);
        assert!(bd.cut_vertices.is_empty());
    }

    #[test]
    fn isolated_vertices_are_singleton_blocks() {
        let g = Graph::empty(2).disjoint_union(&complete(2));
        let bd = block_decomposition(&g);
        assert_eq!(bd.blocks.len(), 3);
    }

    #[test]
    fn long_path_does_not_overflow() {
        let bd = block_decomposition(&path(200_000));
        assert_eq!(bd.blocks.len(), 199_999);
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn blocks_partition_edges(n in 1usize..12, mask in proptest::collection::vec(any::<bool>(), 66)) {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let g = Graph::from_edges(n, pairs.iter().zip(&mask).filter(|(_, k)| **k).map(|(e, _)| *e)).unwrap();
            let bd = block_decomposition(&g);
            let mut count = BTreeSet::new();
            let mut total = 0;
            for b in &bd.blocks {
                let (h, map) = g.induced_subgraph(b.as_slice());
                for (u, v) in h.edges() {
                    total += 1;
                    count.insert((map[u], map[v]));
                }
                // every block with >= 3 vertices is 2-connected
                if h.vertex_count() >= 3 {
                    for x in 0..h.vertex_count() {
                        prop_assert!(h.without(&[x]).0.is_connected());
                    }
                }
            }
            prop_assert_eq!(total, g.edge_count());
            prop_assert_eq!(count.len(), g.edge_count());
            for (i, a) in bd.blocks.iter().enumerate() {
                for b in &bd.blocks[i + 1..] {
                    let shared = a.iter().filter(|&v| b.contains(v)).count();
                    prop_assert!(shared <= 1);
                }
            }
            // cut vertices are exactly those whose removal splits a component
            for v in g.vertices() {
                let before = g.components().len();
                let after = g.without(&[v]).0.components().len();
                prop_assert_eq!(bd.cut_vertices.contains(v), after > before);
            }
        }
    }
}
