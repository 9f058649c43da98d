//! Greedy defective colouring along an ordering with small 2-reach.

use serde::{Deserialize, Serialize};

use super::{
    binomial, check_colouring, ColourError, Colouring, ColouringReport, Guarantee, Measure,
};
use crate::params::OrderingWitness;
use crate::Graph;

/// Whether to verify `K_{s,t}`-freeness or take it on trust.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KstCheck {
    Check,
    Assume,
}

/// A `K_{s,t}` subgraph: every vertex of `small` is adjacent to every
/// vertex of `large`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KstWitness {
    pub small: Vec<usize>,
    pub large: Vec<usize>,
}

/// Looks for a `K_{s,t}` subgraph with `s <= t`: some vertex of the
/// `t` side sees the whole `s` side, so it is enough to try the
/// `s`-subsets of every neighbourhood.
pub fn find_kst(g: &Graph, s: usize, t: usize) -> Option<KstWitness> {
    if s == 0 || t == 0 {
        return None;
    }
    let mut chosen = Vec::with_capacity(s);
    for b in g.vertices() {
        if let Some(w) = subsets(g, s, t, g.neighbors(b), 0, &mut chosen) {
            return Some(w);
        }
    }
    None
}

fn subsets(
    g: &Graph,
    s: usize,
    t: usize,
    pool: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
) -> Option<KstWitness> {
    if chosen.len() == s {
        let common: Vec<usize> = g
            .neighbors(chosen[0])
            .iter()
            .copied()
            .filter(|&w| chosen[1..].iter().all(|&a| g.has_edge(a, w)))
            .collect();
        return (common.len() >= t).then(|| KstWitness {
            small: chosen.clone(),
            large: common[..t].to_vec(),
        });
    }
    for i in from..pool.len() {
        chosen.push(pool[i]);
        let found = subsets(g, s, t, pool, i + 1, chosen);
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

fn preconditions(
    g: &Graph,
    s: usize,
    t: usize,
    witness: &OrderingWitness,
    kst: KstCheck,
) -> Result<(), ColourError> {
    if s == 0 || s > t {
        return Err(ColourError::BadShape { s, t });
    }
    if witness.radius != 2 || witness.order.len() != g.vertex_count() || !witness.verify(g) {
        return Err(ColourError::BadWitness {
            radius: witness.radius,
            expected: 2,
        });
    }
    if kst == KstCheck::Check {
        if let Some(w) = find_kst(g, s, t) {
            return Err(ColourError::KstSubgraph { s, t, witness: w });
        }
    }
    Ok(())
}

/// Each vertex, left to right, avoids the colours of its `s - 1` leftmost
/// neighbours and takes the smallest remaining colour.
fn greedy(g: &Graph, order: &[usize], s: usize) -> Colouring {
    let n = g.vertex_count();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut colours = vec![usize::MAX; n];
    for &v in order {
        let mut left: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] < pos[v])
            .collect();
        left.sort_unstable_by_key(|&w| pos[w]);
        let banned: Vec<usize> = left.iter().take(s - 1).map(|&w| colours[w]).collect();
        colours[v] = (0..s)
            .find(|c| !banned.contains(c))
            .expect("s - 1 bans leave a colour");
    }
    Colouring { colours, k: s }
}

fn defect_bound(bound: usize, s: usize, t: usize) -> u128 {
    let b = bound as u128;
    b.saturating_add((t as u128 - 1).saturating_mul(binomial(b, s as u128 - 1)))
}

/// `s`-colouring with defect at most `b + (t-1) * C(b, s-1)` where `b`
/// is the witness's 2-reach bound, for `K_{s,t}`-free graphs.
pub fn defective_colour_via_col2(
    g: &Graph,
    s: usize,
    t: usize,
    witness: &OrderingWitness,
    kst: KstCheck,
) -> Result<ColouringReport, ColourError> {
    preconditions(g, s, t, witness, kst)?;
    let colouring = greedy(g, &witness.order, s);
    Ok(check_colouring(g, &colouring)?.with_guarantee(Guarantee {
        measure: Measure::Defect,
        bound: defect_bound(witness.bound, s, t),
        conditional: kst == KstCheck::Assume,
    }))
}

/// As [`defective_colour_via_col2`] with `root` moved to the front of the
/// order, which leaves `root` properly coloured and costs one extra
/// reachable vertex per vertex.
pub fn defective_colour_rooted(
    g: &Graph,
    s: usize,
    t: usize,
    witness: &OrderingWitness,
    root: usize,
    kst: KstCheck,
) -> Result<ColouringReport, ColourError> {
    if root >= g.vertex_count() {
        return Err(ColourError::VertexOutOfRange {
            vertex: root,
            n: g.vertex_count(),
        });
    }
    if s < 2 {
        return Err(ColourError::RootedNeedsTwoColours(s));
    }
    preconditions(g, s, t, witness, kst)?;
    let order: Vec<usize> = std::iter::once(root)
        .chain(witness.order.iter().copied().filter(|&v| v != root))
        .collect();
    let colouring = greedy(g, &order, s);
    Ok(check_colouring(g, &colouring)?.with_guarantee(Guarantee {
        measure: Measure::Defect,
        bound: defect_bound(witness.bound + 1, s, t),
        conditional: kst == KstCheck::Assume,
    }))
}
