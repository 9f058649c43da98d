//! Closures of complete trees, treedepth amplification and the
//! independent-set tree.

use std::collections::{BTreeSet, HashMap, VecDeque};

use thiserror::Error;

use super::{check_cap, ConstructionError, GadgetMeta, OrderedHost};
use crate::colourers::{binomial, Colouring};
use crate::params::RootedForestWitness;
use crate::Graph;

/// `H^(d)`: the complete `d`-ary tree of vertex-height `n = |V(H)|` where,
/// along every root-leaf path `x_1..x_n`, `x_i x_j` is an edge exactly when
/// `v_i v_j` is an edge of `H`.
///
/// Vertices are in heap order: the root is 0 and the children of `x` are
/// `d*x + 1 ..= d*x + d` (for `d = 1` the tree is the path `0..n`).
pub fn standard_example(
    h: &OrderedHost,
    d: usize,
    cap: usize,
) -> Result<(Graph, GadgetMeta), ConstructionError> {
    let n = h.graph.vertex_count();
    if d == 0 || n == 0 {
        return Err(ConstructionError::InvalidParameter {
            construction: "standard example",
            reason: format!("need d >= 1 and a nonempty host, got d = {d}, n = {n}"),
        });
    }
    let total: u128 = (0..n as u32).fold(0u128, |acc, i| {
        acc.saturating_add((d as u128).saturating_pow(i))
    });
    check_cap("standard example", total, cap)?;
    let total = total as usize;

    let parent = |x: usize| (x - 1) / d;
    let mut level = vec![0usize; total];
    let mut edges = Vec::new();
    for x in 1..total {
        level[x] = level[parent(x)] + 1;
        let vx = h.order[level[x]];
        let mut a = x;
        while a != 0 {
            a = parent(a);
            if h.graph.has_edge(h.order[level[a]], vx) {
                edges.push((a, x));
            }
        }
    }
    let g = Graph::from_edges(total, edges).expect("ancestor edges are simple");
    let meta = GadgetMeta::new("standard-example")
        .param("d", d)
        .param("host_vertices", n)
        .named("root", vec![0]);
    let mut meta = meta;
    meta.claims.treedepth_at_most = Some(n);
    Ok((g, meta))
}

/// Output of [`treedepth_amplification`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Amplified {
    pub graph: Graph,
    /// Vertex of the source graph that each vertex copies.
    pub origin: Vec<usize>,
    /// Rooted forest of the amplified graph; every edge joins an ancestor
    /// to a descendant.
    pub forest: RootedForestWitness,
    /// The forest the amplification started from.
    pub source_forest: RootedForestWitness,
    pub d: usize,
}

/// Number of vertices [`treedepth_amplification`] will produce: a source
/// vertex at depth `i` ends up with `(d+1)^(i-1)` copies.
pub fn amplified_size(forest: &RootedForestWitness, d: usize) -> Option<u128> {
    let depths = forest.depths()?;
    Some(depths.iter().fold(0u128, |acc, &i| {
        acc.saturating_add((d as u128 + 1).saturating_pow(i as u32 - 1))
    }))
}

/// For `i = 2..=depth`, replaces the subtree rooted at every vertex of
/// depth `i` by `d + 1` copies, each joined to the ancestors exactly as the
/// original. Source vertices keep their ids; copies are appended.
pub fn treedepth_amplification(
    h: &Graph,
    forest: &RootedForestWitness,
    d: usize,
    cap: usize,
) -> Result<Amplified, ConstructionError> {
    if d == 0 {
        return Err(ConstructionError::InvalidParameter {
            construction: "treedepth amplification",
            reason: "d must be at least 1".into(),
        });
    }
    if !forest.is_valid_for(h) {
        return Err(ConstructionError::InvalidForest);
    }
    let size = amplified_size(forest, d).expect("validated forest");
    check_cap("treedepth amplification", size, cap)?;

    let mut depth = forest.depths().expect("validated forest");
    let mut parent = forest.parent.clone();
    let mut origin: Vec<usize> = h.vertices().collect();
    let mut children = forest.children();
    let mut adj: Vec<BTreeSet<usize>> = h
        .vertices()
        .map(|v| h.neighbors(v).iter().copied().collect())
        .collect();
    let max_depth = depth.iter().copied().max().unwrap_or(0);

    for i in 2..=max_depth {
        let layer: Vec<usize> = (0..origin.len()).filter(|&v| depth[v] == i).collect();
        for w in layer {
            let mut subtree = vec![w];
            let mut k = 0;
            while k < subtree.len() {
                subtree.extend(children[subtree[k]].iter().copied());
                k += 1;
            }
            for _ in 0..d {
                let base = origin.len();
                let map: HashMap<usize, usize> = subtree
                    .iter()
                    .enumerate()
                    .map(|(j, &u)| (u, base + j))
                    .collect();
                for &u in &subtree {
                    origin.push(origin[u]);
                    depth.push(depth[u]);
                    parent.push(if u == w {
                        parent[w]
                    } else {
                        Some(map[&parent[u].unwrap()])
                    });
                    children.push(Vec::new());
                    adj.push(BTreeSet::new());
                }
                for &u in &subtree {
                    let nu = map[&u];
                    match parent[nu] {
                        Some(p) => children[p].push(nu),
                        None => unreachable!("depth >= 2 has a parent"),
                    }
                    let nbrs: Vec<usize> = adj[u].iter().copied().collect();
                    for y in nbrs {
                        let ny = map.get(&y).copied().unwrap_or(y);
                        adj[nu].insert(ny);
                        adj[ny].insert(nu);
                    }
                }
            }
        }
    }

    let n = origin.len();
    debug_assert_eq!(n as u128, size);
    let edges = (0..n).flat_map(|u| {
        adj[u]
            .iter()
            .copied()
            .filter(move |&v| v > u)
            .map(move |v| (u, v))
    });
    let graph = Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("simple by construction");
    Ok(Amplified {
        graph,
        origin,
        forest: RootedForestWitness { parent },
        source_forest: forest.clone(),
        d,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractionError {
    #[error("colouring covers {found} vertices, the amplified graph has {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("every copy of source vertex {vertex} holds a neighbour of its parent's representative in the same colour")]
    NoProperCopy { vertex: usize },
}

/// Picks one representative per source vertex, top down: each copy of `w`
/// below the representative `v'` of its parent is tried in id order, and
/// the first whose subtree holds no neighbour of `v'` coloured like `v'`
/// is taken. When the colouring has defect at most `d` this never fails
/// and the representatives induce a properly coloured copy of the source.
pub fn extract_proper_copy(
    amp: &Amplified,
    colouring: &Colouring,
) -> Result<Vec<usize>, ExtractionError> {
    let n = amp.graph.vertex_count();
    if colouring.colours.len() != n {
        return Err(ExtractionError::WrongLength {
            expected: n,
            found: colouring.colours.len(),
        });
    }
    let source_n = amp.source_forest.parent.len();
    let amp_children = amp.forest.children();
    let src_children = amp.source_forest.children();
    let mut rep = vec![usize::MAX; source_n];
    let mut queue: VecDeque<usize> = amp.source_forest.roots().into();
    for &r in &queue {
        rep[r] = r;
    }
    while let Some(v) = queue.pop_front() {
        let vp = rep[v];
        let colour = colouring.colour(vp);
        for &w in &src_children[v] {
            let chosen = amp_children[vp]
                .iter()
                .copied()
                .filter(|&c| amp.origin[c] == w)
                .find(|&c| {
                    subtree(&amp_children, c)
                        .into_iter()
                        .all(|x| !(amp.graph.has_edge(vp, x) && colouring.colour(x) == colour))
                })
                .ok_or(ExtractionError::NoProperCopy { vertex: w })?;
            rep[w] = chosen;
            queue.push_back(w);
        }
    }
    Ok(rep)
}

fn subtree(children: &[Vec<usize>], root: usize) -> Vec<usize> {
    let mut out = vec![root];
    let mut i = 0;
    while i < out.len() {
        out.extend(children[out[i]].iter().copied());
        i += 1;
    }
    out
}

/// Rooted tree grown layer by layer: in BFS order, each vertex `v` above
/// layer `layer_cap` receives one child for every independent set `I` of
/// the graph induced on its root path (including the empty set), and that
/// child is adjacent to exactly `I`.
///
/// Vertices are numbered in creation (BFS) order with the root 0; children
/// of a vertex follow the bitmask order of their independent sets over the
/// root path. Returns the graph, its metadata and the tree as a treedepth
/// witness.
pub fn independent_set_tree(
    k: usize,
    layer_cap: usize,
    cap: usize,
) -> Result<(Graph, GadgetMeta, RootedForestWitness), ConstructionError> {
    if k == 0 || layer_cap == 0 {
        return Err(ConstructionError::InvalidParameter {
            construction: "independent set tree",
            reason: format!("need k >= 1 and layer_cap >= 1, got k = {k}, layer_cap = {layer_cap}"),
        });
    }
    if layer_cap > 30 {
        return Err(ConstructionError::InvalidParameter {
            construction: "independent set tree",
            reason: "layer_cap above 30 cannot fit under any vertex cap".into(),
        });
    }
    let mut parent: Vec<Option<usize>> = vec![None];
    let mut layer = vec![1usize];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut up: Vec<Vec<usize>> = vec![Vec::new()];
    let mut v = 0;
    while v < parent.len() {
        if layer[v] < layer_cap {
            let mut path = vec![v];
            while let Some(p) = parent[*path.last().unwrap()] {
                path.push(p);
            }
            path.reverse();
            let index: HashMap<usize, usize> =
                path.iter().enumerate().map(|(i, &x)| (x, i)).collect();
            let adj_mask: Vec<u32> = path
                .iter()
                .map(|&x| up_and_down(&up, &path, &index, x))
                .collect();
            for mask in 0u32..1 << path.len() {
                let independent =
                    (0..path.len()).all(|i| mask >> i & 1 == 0 || adj_mask[i] & mask == 0);
                if !independent {
                    continue;
                }
                check_cap("independent set tree", parent.len() as u128 + 1, cap)?;
                let c = parent.len();
                parent.push(Some(v));
                layer.push(layer[v] + 1);
                let nbrs: Vec<usize> = (0..path.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| path[i])
                    .collect();
                for &x in &nbrs {
                    edges.push((x, c));
                }
                up.push(nbrs);
            }
        }
        v += 1;
    }
    let n = parent.len();
    let g = Graph::from_edges(n, edges).expect("edges join a child to distinct ancestors");
    let mut meta = GadgetMeta::new("independent-set-tree")
        .param("k", k)
        .param("layer_cap", layer_cap)
        .named("root", vec![0]);
    meta.claims.triangle_free = Some(true);
    meta.claims.treedepth_at_most = Some(layer_cap);
    if layer_cap as u128 >= binomial(k as u128 + 1, 2) {
        meta.claims.chromatic_at_least = Some(k);
    }
    Ok((g, meta, RootedForestWitness { parent }))
}

/// Adjacency of `x` within the root path, as a bitmask over path indices.
fn up_and_down(up: &[Vec<usize>], path: &[usize], index: &HashMap<usize, usize>, x: usize) -> u32 {
    let mut mask = 0;
    for &a in &up[x] {
        mask |= 1 << index[&a];
    }
    for &y in path {
        if up[y].contains(&x) {
            mask |= 1 << index[&y];
        }
    }
    mask
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::params::treedepth_exact;

    const CAP: usize = super::super::DEFAULT_VERTEX_CAP;

    fn chain(n: usize) -> RootedForestWitness {
        RootedForestWitness {
            parent: (0..n).map(|v| v.checked_sub(1)).collect(),
        }
    }

    #[test]
    fn standard_example_small() {
        let (g, _) = standard_example(&OrderedHost::natural(complete(2)), 2, CAP).unwrap();
        assert_eq!(g, star(2));
        let (g, _) = standard_example(&OrderedHost::natural(path(3)), 2, CAP).unwrap();
        assert_eq!(g.vertex_count(), 7);
        // consecutive levels only: the edges are exactly the tree edges
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]
        );
        let (g, _) = standard_example(&OrderedHost::natural(complete(3)), 2, CAP).unwrap();
        // closure of the binary tree of height 3: 6 tree edges + 4 root-grandchild edges
        assert_eq!(g.edge_count(), 10);
        let (g, _) = standard_example(&OrderedHost::natural(complete(3)), 1, CAP).unwrap();
        assert_eq!(g, complete(3));
        assert_eq!(
            standard_example(&OrderedHost::natural(complete(30)), 2, CAP),
            Err(ConstructionError::TooLarge {
                construction: "standard example",
                vertices: (1 << 30) - 1,
                cap: CAP
            })
        );
    }

    #[test]
    fn standard_example_respects_order() {
        // path 0-1-2 ordered (1, 0, 2): v_1 = 1 is adjacent to both others
        let h = OrderedHost::new(path(3), vec![1, 0, 2]).unwrap();
        let (g, _) = standard_example(&h, 2, CAP).unwrap();
        assert_eq!(g.degree(0), 6);
        assert!(OrderedHost::new(path(3), vec![0, 0, 1]).is_err());
    }

    #[test]
    fn standard_example_is_kp_free_iff_host_is() {
        for host in [
            path(4),
            cycle(4),
            cycle(5),
            complete(3),
            complete(4),
            complete_bipartite(2, 2),
        ] {
            let (g, _) = standard_example(&OrderedHost::natural(host.clone()), 2, CAP).unwrap();
            for p in 2..=4 {
                assert_eq!(g.find_clique(p).is_some(), host.find_clique(p).is_some());
            }
        }
    }

    #[test]
    fn amplification_sizes() {
        let single = treedepth_amplification(&Graph::empty(1), &chain(1), 3, CAP).unwrap();
        assert_eq!(single.graph, Graph::empty(1));

        let k2 = treedepth_amplification(&complete(2), &chain(2), 1, CAP).unwrap();
        assert_eq!(k2.graph, star(2));

        let p3 = treedepth_amplification(&path(3), &chain(3), 1, CAP).unwrap();
        assert_eq!(p3.graph.vertex_count(), 1 + 2 * (1 + 2 * 1));
        for d in 1..=3 {
            for h in [path(3), complete(3), path(4), star(3)] {
                let (_, forest) = treedepth_exact(&h, 15).unwrap();
                let amp = treedepth_amplification(&h, &forest, d, CAP).unwrap();
                assert_eq!(amp.graph.vertex_count() as u128, recursive_size(&forest, d));
                assert!(amp.forest.is_valid_for(&amp.graph));
                assert_eq!(amp.forest.depth(), forest.depth());
                for p in 3..=4 {
                    assert_eq!(
                        amp.graph.find_clique(p).is_some(),
                        h.find_clique(p).is_some()
                    );
                }
            }
        }
    }

    /// Size by recursion on the source tree: a vertex at depth `i >= 2`
    /// is copied `d + 1` times together with its subtree.
    fn recursive_size(forest: &RootedForestWitness, d: usize) -> u128 {
        let ch = forest.children();
        fn sub(ch: &[Vec<usize>], v: usize, d: u128) -> u128 {
            1 + ch[v].iter().map(|&c| (d + 1) * sub(ch, c, d)).sum::<u128>()
        }
        forest.roots().iter().map(|&r| sub(&ch, r, d as u128)).sum()
    }

    #[test]
    fn extraction_hand_simulation() {
        let amp = treedepth_amplification(&complete(2), &chain(2), 1, CAP).unwrap();
        // root blue (0), child 1 blue, child 2 red
        let c = Colouring::new(vec![0, 0, 1], 2).unwrap();
        assert_eq!(extract_proper_copy(&amp, &c).unwrap(), vec![0, 2]);
        let mono = Colouring::new(vec![0, 0, 0], 1).unwrap();
        assert_eq!(
            extract_proper_copy(&amp, &mono),
            Err(ExtractionError::NoProperCopy { vertex: 1 })
        );
        let proper = Colouring::new(vec![0, 1, 1], 2).unwrap();
        assert_eq!(extract_proper_copy(&amp, &proper).unwrap(), vec![0, 1]);
    }

    #[test]
    fn independent_set_tree_small() {
        let (g, meta, _) = independent_set_tree(1, 1, CAP).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(meta.claims.chromatic_at_least, Some(1));
        let (g, meta, forest) = independent_set_tree(2, 3, CAP).unwrap();
        assert!(g.edge_count() > 0);
        assert_eq!(meta.claims.chromatic_at_least, Some(2));
        assert!(forest.is_valid_for(&g));
        assert!(g.is_triangle_free());
        // root: children for {} and {r}
        assert_eq!(forest.children()[0].len(), 2);
        assert!(independent_set_tree(3, 6, 1000).is_err());
    }
}
