//! Gadgets with small feedback vertex number that resist 2-colouring.

use itertools::Itertools;

use super::{GadgetMeta, NonColourability};
use crate::colourers::Measure;
use crate::{Girth, Graph};

/// Star `T_0` with `d + 1` leaves, `2d + 1` private leaves hung on each
/// vertex of `T_0`, and a vertex `alpha` adjacent to every leaf of the
/// resulting tree.
///
/// Labelling: centre 0, the leaves of `T_0` are `1..=d+1`, the private
/// leaves of `v` are `(d+2) + v(2d+1) + j` for `j < 2d+1`, and `alpha` is
/// the last vertex. There are `(d+2)(2d+2) + 1` vertices.
pub fn fvn1_gadget(d: usize) -> (Graph, GadgetMeta) {
    let t0 = d + 2;
    let per = 2 * d + 1;
    let alpha = t0 * (per + 1);
    let mut edges: Vec<(usize, usize)> = (1..t0).map(|v| (0, v)).collect();
    let mut leaves = Vec::new();
    for v in 0..t0 {
        for j in 0..per {
            let l = t0 + v * per + j;
            edges.push((v, l));
            edges.push((l, alpha));
            leaves.push(l);
        }
    }
    let g = Graph::from_edges(alpha + 1, edges).expect("tree plus apex is simple");
    let mut meta = GadgetMeta::new("fvn1")
        .param("d", d)
        .named("alpha", vec![alpha])
        .named("T0", (0..t0).collect())
        .named("leaves", leaves);
    meta.claims.girth = Some(Girth::Finite(if d == 0 { 5 } else { 4 }));
    meta.claims.triangle_free = Some(true);
    meta.claims.fvn_at_most = Some(1);
    meta.claims.not_colourable = Some(NonColourability {
        colours: 2,
        measure: Measure::Defect,
        value: d,
    });
    (g, meta)
}

/// Edge count of each attached path: `4c^2 + 4c + 1`.
pub fn fvn7_path_edges(c: usize) -> usize {
    4 * c * c + 4 * c + 1
}

/// Seven vertices `V = 0..7` and, for each 4-subset `S` of `V` in
/// lexicographic order, a path `P_S` with `n = 4c^2 + 4c + 1` edges whose
/// vertex at position `i` is joined to the `(i mod 4)`-th element of `S`.
///
/// Path `s` occupies ids `7 + s(n+1) ..= 7 + s(n+1) + n`.
pub fn fvn7_gadget(c: usize) -> (Graph, GadgetMeta) {
    let n = fvn7_path_edges(c);
    let subsets: Vec<Vec<usize>> = (0..7).combinations(4).collect();
    let total = 7 + subsets.len() * (n + 1);
    let mut edges = Vec::with_capacity(subsets.len() * (2 * n + 1));
    for (s, set) in subsets.iter().enumerate() {
        let base = 7 + s * (n + 1);
        for i in 0..=n {
            if i > 0 {
                edges.push((base + i - 1, base + i));
            }
            edges.push((set[i % 4], base + i));
        }
    }
    let g = Graph::from_edges(total, edges).expect("paths plus attachments are simple");
    let mut meta = GadgetMeta::new("fvn7")
        .param("c", c)
        .param("path_edges", n)
        .named("V", (0..7).collect())
        .note("each path has path_edges edges and path_edges + 1 vertices");
    meta.claims.girth = Some(Girth::Finite(6));
    meta.claims.fvn_at_most = Some(7);
    meta.claims.pathwidth_at_most = Some(8);
    meta.claims.not_colourable = Some(NonColourability {
        colours: 2,
        measure: Measure::Clustering,
        value: c,
    });
    (g, meta)
}
