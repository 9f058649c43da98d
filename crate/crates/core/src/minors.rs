//! Branch-set minor models, contraction, and extraction of a minor with
//! large minimum degree from a graph of large girth.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::{girth, Girth, Graph, VertexSet};

/// Disjoint connected vertex sets of a host graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub branch_sets: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum ModelError {
    #[error("branch set {set} contains vertex {vertex}, outside the host")]
    VertexOutOfRange { set: usize, vertex: usize },
    #[error("branch set {set} is empty")]
    Empty { set: usize },
    #[error("branch sets {first} and {second} overlap at vertex {vertex}")]
    Overlap {
        first: usize,
        second: usize,
        vertex: usize,
    },
    #[error("branch set {set} does not induce a connected subgraph")]
    Disconnected { set: usize },
}

/// Everything wrong with a model, plus which host vertices it leaves out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelReport {
    pub valid: bool,
    pub problems: Vec<ModelError>,
    pub covers_host: bool,
    pub uncovered: VertexSet,
}

pub fn verify_model(g: &Graph, m: &MinorModel) -> ModelReport {
    let n = g.vertex_count();
    let mut problems = Vec::new();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (i, set) in m.branch_sets.iter().enumerate() {
        if set.is_empty() {
            problems.push(ModelError::Empty { set: i });
            continue;
        }
        let mut in_range = true;
        for v in set.iter() {
            if v >= n {
                problems.push(ModelError::VertexOutOfRange { set: i, vertex: v });
                in_range = false;
                continue;
            }
            match owner[v] {
                Some(first) => problems.push(ModelError::Overlap {
                    first,
                    second: i,
                    vertex: v,
                }),
                None => owner[v] = Some(i),
            }
        }
        if in_range && !g.induced_subgraph(set.as_slice()).0.is_connected() {
            problems.push(ModelError::Disconnected { set: i });
        }
    }
    let uncovered: VertexSet = (0..n).filter(|&v| owner[v].is_none()).collect();
    ModelReport {
        valid: problems.is_empty(),
        problems,
        covers_host: uncovered.is_empty(),
        uncovered,
    }
}

/// One vertex per branch set, adjacent when some host edge joins the two
/// sets. Vertices outside every branch set are dropped.
pub fn contract_model(g: &Graph, m: &MinorModel) -> Result<Graph, ModelError> {
    let report = verify_model(g, m);
    if let Some(problem) = report.problems.into_iter().next() {
        return Err(problem);
    }
    let owner = owners(g, m);
    let mut edges = std::collections::BTreeSet::new();
    for (u, v) in g.edges() {
        if let (Some(a), Some(b)) = (owner[u], owner[v]) {
            if a != b {
                edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    Ok(Graph::from_edges(m.branch_sets.len(), edges).expect("quotient edges are simple"))
}

fn owners(g: &Graph, m: &MinorModel) -> Vec<Option<usize>> {
    let mut owner = vec![None; g.vertex_count()];
    for (i, set) in m.branch_sets.iter().enumerate() {
        for v in set.iter() {
            owner[v] = Some(i);
        }
    }
    owner
}

/// Largest number of host edges joining any two distinct branch sets.
pub fn max_edges_between(g: &Graph, m: &MinorModel) -> usize {
    let owner = owners(g, m);
    let mut count = std::collections::HashMap::new();
    for (u, v) in g.edges() {
        if let (Some(a), Some(b)) = (owner[u], owner[v]) {
            if a != b {
                *count.entry((a.min(b), a.max(b))).or_insert(0usize) += 1;
            }
        }
    }
    count.into_values().max().unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum Hypothesis {
    #[error("radius must be at least 1")]
    ZeroRadius,
    #[error("girth {found} is below the required {required}")]
    Girth { found: Girth, required: usize },
    #[error("vertex {vertex} has degree {degree} < 2")]
    LowDegree { vertex: usize, degree: usize },
    #[error("edge {u}-{v} joins two vertices of degree 2")]
    AdjacentDegreeTwo { u: usize, v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("hypotheses violated: {}", .0.iter().map(|h| h.to_string()).collect::<Vec<_>>().join("; "))]
pub struct HypothesisError(pub Vec<Hypothesis>);

/// `ceil(2^(k/2))`, the promised minimum degree of the extracted minor.
pub fn mader_degree_bound(k: usize) -> usize {
    if k % 2 == 0 {
        1 << (k / 2)
    } else {
        (2f64.powf(k as f64 / 2.0)).ceil() as usize
    }
}

/// Every hypothesis failure, not only the first.
pub fn mader_hypotheses(g: &Graph, k: usize) -> Vec<Hypothesis> {
    let mut out = Vec::new();
    if k == 0 {
        out.push(Hypothesis::ZeroRadius);
    }
    let required = 8 * k + 3;
    let found = girth(g);
    if !found.at_least(required) {
        out.push(Hypothesis::Girth { found, required });
    }
    for v in g.vertices().filter(|&v| g.degree(v) < 2) {
        out.push(Hypothesis::LowDegree {
            vertex: v,
            degree: g.degree(v),
        });
    }
    for (u, v) in g.edges() {
        if g.degree(u) == 2 && g.degree(v) == 2 {
            out.push(Hypothesis::AdjacentDegreeTwo { u, v });
        }
    }
    out
}

/// Greedy centres at pairwise distance at least `2k + 1`, balls of radius
/// `k` around them, then every vertex at distance `i = k+1..=2k` joins the
/// set of a neighbour at distance `i - 1` (smallest centre wins).
pub fn mader_extract(g: &Graph, k: usize) -> Result<MinorModel, HypothesisError> {
    let violations = mader_hypotheses(g, k);
    if !violations.is_empty() {
        return Err(HypothesisError(violations));
    }
    let n = g.vertex_count();
    let centres = greedy_centres(g, 2 * k + 1);
    // owner = index into `centres`; BFS layers from all centres at once
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut dist = vec![usize::MAX; n];
    let mut layer: Vec<usize> = Vec::new();
    for (i, &x) in centres.iter().enumerate() {
        owner[x] = Some(i);
        dist[x] = 0;
        layer.push(x);
    }
    for d in 1..=2 * k {
        let mut next: Vec<usize> = layer
            .iter()
            .flat_map(|&u| g.neighbors(u).iter().copied())
            .filter(|&w| dist[w] == usize::MAX)
            .collect();
        next.sort_unstable();
        next.dedup();
        for &w in &next {
            dist[w] = d;
        }
        for &w in &next {
            owner[w] = g
                .neighbors(w)
                .iter()
                .filter(|&&u| dist[u] == d - 1)
                .filter_map(|&u| owner[u])
                .min();
        }
        layer = next;
    }
    debug_assert!(owner.iter().all(Option::is_some), "centres are maximal");

    let mut sets = vec![Vec::new(); centres.len()];
    for v in g.vertices() {
        if let Some(i) = owner[v] {
            sets[i].push(v);
        }
    }
    Ok(MinorModel {
        branch_sets: sets.into_iter().map(VertexSet::from).collect(),
    })
}

/// Scans vertices by index and keeps each one at distance at least
/// `separation` from all those kept so far. The result is maximal.
pub fn greedy_centres(g: &Graph, separation: usize) -> Vec<usize> {
    let mut near = vec![false; g.vertex_count()];
    let mut centres = Vec::new();
    for v in g.vertices() {
        if near[v] {
            continue;
        }
        centres.push(v);
        for w in crate::graph::ball(g, v, separation.saturating_sub(1)) {
            near[w] = true;
        }
    }
    centres
}
