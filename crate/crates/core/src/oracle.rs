//! Exhaustive colourability certifiers for small graphs.
//!
//! The search colours one component at a time in reverse degeneracy
//! order, tries colours in increasing order with restricted growth (a new
//! colour is only ever the next unused one), and prunes as soon as a
//! partial colouring breaks the defect or clustering bound. Every call has
//! a node budget and reports [`OracleError::BudgetExceeded`] instead of
//! guessing.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colourers::{check_colouring, Colouring};
use crate::constructions::{standard_example, OrderedHost, DEFAULT_VERTEX_CAP};
use crate::params::degeneracy;
use crate::Graph;

/// Default limit on search nodes per call.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Proper,
    Defect(usize),
    Clustering(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColourabilityQuery {
    pub k: usize,
    pub mode: Mode,
}

impl ColourabilityQuery {
    pub fn new(k: usize, mode: Mode) -> Result<Self, OracleError> {
        let q = Self { k, mode };
        q.validate()?;
        Ok(q)
    }

    fn validate(&self) -> Result<(), OracleError> {
        if self.k == 0 {
            return Err(OracleError::InvalidQuery("k must be at least 1".into()));
        }
        if self.mode == Mode::Clustering(0) {
            return Err(OracleError::InvalidQuery(
                "clustering must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("search exceeded the budget of {budget} nodes")]
    BudgetExceeded { budget: u64 },
    #[error("more than {limit} colourings")]
    TooManyColourings { limit: usize },
    #[error("host is too large: {0}")]
    Construction(#[from] crate::constructions::ConstructionError),
}

/// Answer to a colourability query; the witness is present exactly when
/// the answer is yes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Answer {
    pub colourable: bool,
    pub witness: Option<Colouring>,
    pub nodes: u64,
}

pub fn is_colourable(g: &Graph, q: ColourabilityQuery) -> Result<Answer, OracleError> {
    is_colourable_with_budget(g, q, DEFAULT_BUDGET)
}

pub fn is_colourable_with_budget(
    g: &Graph,
    q: ColourabilityQuery,
    budget: u64,
) -> Result<Answer, OracleError> {
    q.validate()?;
    let n = g.vertex_count();
    let yes = |colours: Vec<usize>, nodes| {
        let witness = Colouring::new(colours, q.k).expect("colours below k");
        Ok(Answer {
            colourable: true,
            witness: Some(witness),
            nodes,
        })
    };
    if q.k >= n {
        return yes((0..n).collect(), 0);
    }
    if q.k == 2 && q.mode == Mode::Proper {
        return match g.bipartition() {
            Some(side) => yes(side, 0),
            None => Ok(Answer {
                colourable: false,
                witness: None,
                nodes: 0,
            }),
        };
    }

    let rank = search_rank(g);
    let mut search = Search::new(g, q, budget, true);
    let mut colours = vec![0; n];
    for mut comp in g.components() {
        comp.sort_by_key(|&v| rank[v]);
        search.order = comp;
        if !search.run(&mut |s| {
            for &v in &s.order {
                colours[v] = s.colour[v];
            }
            true
        })? {
            return Ok(Answer {
                colourable: false,
                witness: None,
                nodes: search.nodes,
            });
        }
    }
    debug_assert!(satisfies(g, &colours, q));
    yes(colours, search.nodes)
}

/// Every colouring with colours in `0..q.k` meeting the query, without
/// symmetry reduction, in lexicographic order of the search.
pub fn all_colourings(
    g: &Graph,
    q: ColourabilityQuery,
    limit: usize,
    budget: u64,
) -> Result<Vec<Colouring>, OracleError> {
    q.validate()?;
    let rank = search_rank(g);
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| rank[v]);
    let mut search = Search::new(g, q, budget, false);
    search.order = order;
    let mut out = Vec::new();
    let mut overflow = false;
    search.run(&mut |s| {
        if out.len() == limit {
            overflow = true;
            return true;
        }
        out.push(Colouring::new(s.colour.clone(), q.k).expect("colours below k"));
        false
    })?;
    if overflow {
        return Err(OracleError::TooManyColourings { limit });
    }
    Ok(out)
}

/// Position of each vertex in reverse degeneracy order.
fn search_rank(g: &Graph) -> Vec<usize> {
    let mut rank = vec![0; g.vertex_count()];
    for (i, &v) in degeneracy(g).elimination_order.iter().rev().enumerate() {
        rank[v] = i;
    }
    rank
}

fn satisfies(g: &Graph, colours: &[usize], q: ColourabilityQuery) -> bool {
    let Ok(report) = check_colouring(
        g,
        &Colouring {
            colours: colours.to_vec(),
            k: q.k,
        },
    ) else {
        return false;
    };
    match q.mode {
        Mode::Proper => report.proper,
        Mode::Defect(d) => report.defect <= d,
        Mode::Clustering(c) => report.clustering <= c,
    }
}

const UNCOLOURED: usize = usize::MAX;

struct Search<'a> {
    g: &'a Graph,
    q: ColourabilityQuery,
    order: Vec<usize>,
    colour: Vec<usize>,
    same: Vec<usize>,
    uf_parent: Vec<usize>,
    uf_size: Vec<usize>,
    nodes: u64,
    budget: u64,
    symmetric: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, q: ColourabilityQuery, budget: u64, symmetric: bool) -> Self {
        let n = g.vertex_count();
        Self {
            g,
            q,
            order: Vec::new(),
            colour: vec![UNCOLOURED; n],
            same: vec![0; n],
            uf_parent: (0..n).collect(),
            uf_size: vec![1; n],
            nodes: 0,
            budget,
            symmetric,
        }
    }

    /// Calls `leaf` on every complete colouring of `order` until it returns
    /// true. Returns whether a colouring was found and accepted.
    fn run(&mut self, leaf: &mut dyn FnMut(&Self) -> bool) -> Result<bool, OracleError> {
        let found = self.go(0, 0, leaf)?;
        if !found {
            debug_assert!(self.order.iter().all(|&v| self.colour[v] == UNCOLOURED));
        }
        Ok(found)
    }

    fn find(&self, mut v: usize) -> usize {
        while self.uf_parent[v] != v {
            v = self.uf_parent[v];
        }
        v
    }

    fn go(
        &mut self,
        i: usize,
        used: usize,
        leaf: &mut dyn FnMut(&Self) -> bool,
    ) -> Result<bool, OracleError> {
        if self.nodes >= self.budget {
            return Err(OracleError::BudgetExceeded {
                budget: self.budget,
            });
        }
        self.nodes += 1;
        if i == self.order.len() {
            return Ok(leaf(self));
        }
        let v = self.order[i];
        let top = if self.symmetric {
            (used + 1).min(self.q.k)
        } else {
            self.q.k
        };
        for c in 0..top {
            let like: Vec<usize> = self
                .g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| self.colour[w] == c)
                .collect();
            let found = match self.q.mode {
                Mode::Proper => {
                    if !like.is_empty() {
                        continue;
                    }
                    self.colour[v] = c;
                    let r = self.go(i + 1, used.max(c + 1), leaf);
                    self.colour[v] = UNCOLOURED;
                    r?
                }
                Mode::Defect(d) => {
                    if like.len() > d || like.iter().any(|&w| self.same[w] >= d) {
                        continue;
                    }
                    self.colour[v] = c;
                    self.same[v] = like.len();
                    for &w in &like {
                        self.same[w] += 1;
                    }
                    let r = self.go(i + 1, used.max(c + 1), leaf);
                    for &w in &like {
                        self.same[w] -= 1;
                    }
                    self.same[v] = 0;
                    self.colour[v] = UNCOLOURED;
                    r?
                }
                Mode::Clustering(limit) => {
                    let mut roots: Vec<usize> = like.iter().map(|&w| self.find(w)).collect();
                    roots.sort_unstable();
                    roots.dedup();
                    let size: usize = 1 + roots.iter().map(|&r| self.uf_size[r]).sum::<usize>();
                    if size > limit {
                        continue;
                    }
                    self.colour[v] = c;
                    // hang every merged root under v, undo in reverse
                    for &r in &roots {
                        self.uf_parent[r] = v;
                    }
                    self.uf_size[v] = size;
                    let r = self.go(i + 1, used.max(c + 1), leaf);
                    for &r in &roots {
                        self.uf_parent[r] = r;
                    }
                    self.uf_size[v] = 1;
                    self.colour[v] = UNCOLOURED;
                    r?
                }
            };
            if found {
                // leave the accepted colouring in place for the caller
                self.colour[v] = c;
                return Ok(true);
            }
        }
        Ok(false)
    }
}

pub fn chromatic_number(g: &Graph, budget: u64) -> Result<usize, OracleError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    for k in 1..n {
        if is_colourable_with_budget(
            g,
            ColourabilityQuery {
                k,
                mode: Mode::Proper,
            },
            budget,
        )?
        .colourable
        {
            return Ok(k);
        }
    }
    Ok(n)
}

/// Least `d` such that `g` is `k`-colourable with defect `d`.
pub fn min_defect(g: &Graph, k: usize, budget: u64) -> Result<usize, OracleError> {
    lowest(0, g.max_degree(), |d| {
        is_colourable_with_budget(g, ColourabilityQuery::new(k, Mode::Defect(d))?, budget)
            .map(|a| a.colourable)
    })
}

/// Least `c >= 1` such that `g` is `k`-colourable with clustering `c`.
pub fn min_clustering(g: &Graph, k: usize, budget: u64) -> Result<usize, OracleError> {
    let largest = g.components().iter().map(Vec::len).max().unwrap_or(1);
    lowest(1, largest, |c| {
        is_colourable_with_budget(g, ColourabilityQuery::new(k, Mode::Clustering(c))?, budget)
            .map(|a| a.colourable)
    })
}

/// Binary search for the least value in `lo..=hi` accepted by a monotone
/// predicate that accepts `hi`.
fn lowest(
    mut lo: usize,
    mut hi: usize,
    mut ok: impl FnMut(usize) -> Result<bool, OracleError>,
) -> Result<usize, OracleError> {
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if ok(mid)? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}

/// The four statements about `H^(d)` and `H` that are equivalent for every
/// ordered host, each decided by the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub d: usize,
    pub k: usize,
    pub vertices: usize,
    /// `H^(d)` is `k`-colourable with defect `d - 1`.
    pub defect: bool,
    /// `H^(d)` is `k`-colourable with clustering `d`.
    pub clustering: bool,
    /// `H^(d)` is properly `k`-colourable.
    pub proper: bool,
    /// `H` is properly `k`-colourable.
    pub host_proper: bool,
}

impl EquivalenceReport {
    pub fn agree(&self) -> bool {
        self.defect == self.clustering
            && self.clustering == self.proper
            && self.proper == self.host_proper
    }
}

pub fn verify_equivalence_thm31(
    h: &OrderedHost,
    d: usize,
    k: usize,
    budget: u64,
) -> Result<EquivalenceReport, OracleError> {
    if d == 0 {
        return Err(OracleError::InvalidQuery("d must be at least 1".into()));
    }
    let (big, _) = standard_example(h, d, DEFAULT_VERTEX_CAP)?;
    let ask = |g: &Graph, mode| {
        is_colourable_with_budget(g, ColourabilityQuery::new(k, mode)?, budget)
            .map(|a| a.colourable)
    };
    Ok(EquivalenceReport {
        d,
        k,
        vertices: big.vertex_count(),
        defect: ask(&big, Mode::Defect(d - 1))?,
        clustering: ask(&big, Mode::Clustering(d))?,
        proper: ask(&big, Mode::Proper)?,
        host_proper: ask(&h.graph, Mode::Proper)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::fvn1_gadget;
    use crate::graph::named::*;

    fn ask(g: &Graph, k: usize, mode: Mode) -> bool {
        let a = is_colourable(g, ColourabilityQuery::new(k, mode).unwrap()).unwrap();
        if let Some(w) = &a.witness {
            assert!(satisfies(g, &w.colours, ColourabilityQuery { k, mode }));
        }
        assert_eq!(a.colourable, a.witness.is_some());
        a.colourable
    }

    /// Every colouring in `0..k`, straight from the definitions.
    fn brute(g: &Graph, k: usize, mode: Mode) -> bool {
        let n = g.vertex_count();
        let total = k.pow(n as u32);
        (0..total).any(|mut code| {
            let colours: Vec<usize> = (0..n)
                .map(|_| {
                    let c = code % k;
                    code /= k;
                    c
                })
                .collect();
            satisfies(g, &colours, ColourabilityQuery { k, mode })
        })
    }

    #[test]
    fn examples() {
        assert!(!ask(&cycle(5), 2, Mode::Proper));
        assert!(ask(&cycle(5), 3, Mode::Proper));
        for d in 0..2 {
            assert!(!ask(&fvn1_gadget(d).0, 2, Mode::Defect(d)));
        }
        assert!(ask(&complete(4), 2, Mode::Clustering(2)));
        assert!(!ask(&complete(4), 2, Mode::Clustering(1)));
        assert!(ask(&Graph::empty(0), 1, Mode::Proper));
        assert!(ColourabilityQuery::new(0, Mode::Proper).is_err());
        assert!(ColourabilityQuery::new(2, Mode::Clustering(0)).is_err());
    }

    #[test]
    fn parameters() {
        assert_eq!(chromatic_number(&cycle(5), DEFAULT_BUDGET).unwrap(), 3);
        assert_eq!(chromatic_number(&petersen(), DEFAULT_BUDGET).unwrap(), 3);
        assert_eq!(chromatic_number(&complete(5), DEFAULT_BUDGET).unwrap(), 5);
        assert_eq!(
            chromatic_number(&complete_bipartite(3, 4), DEFAULT_BUDGET).unwrap(),
            2
        );
        assert_eq!(min_defect(&cycle(5), 2, DEFAULT_BUDGET).unwrap(), 1);
        assert_eq!(min_clustering(&cycle(5), 2, DEFAULT_BUDGET).unwrap(), 2);
        assert_eq!(min_clustering(&complete(4), 2, DEFAULT_BUDGET).unwrap(), 2);
        assert_eq!(min_defect(&complete(4), 2, DEFAULT_BUDGET).unwrap(), 1);
        assert_eq!(min_defect(&heawood(), 2, DEFAULT_BUDGET).unwrap(), 0);
        assert_eq!(min_clustering(&heawood(), 2, DEFAULT_BUDGET).unwrap(), 1);
    }

    #[test]
    fn budget_is_reported() {
        let q = ColourabilityQuery::new(3, Mode::Clustering(2)).unwrap();
        assert_eq!(
            is_colourable_with_budget(&petersen(), q, 3),
            Err(OracleError::BudgetExceeded { budget: 3 })
        );
    }

    #[test]
    fn equivalence_examples() {
        let k3 = OrderedHost::natural(complete(3));
        let r = verify_equivalence_thm31(&k3, 2, 2, DEFAULT_BUDGET).unwrap();
        assert!(r.agree() && !r.proper && r.vertices == 7);
        let r = verify_equivalence_thm31(&k3, 2, 3, DEFAULT_BUDGET).unwrap();
        assert!(r.agree() && r.proper);
        let k2 = OrderedHost::natural(complete(2));
        let r = verify_equivalence_thm31(&k2, 1, 1, DEFAULT_BUDGET).unwrap();
        assert!(r.agree() && !r.host_proper);
        let r = verify_equivalence_thm31(&k2, 1, 2, DEFAULT_BUDGET).unwrap();
        assert!(r.agree() && r.host_proper);
    }

    #[test]
    fn enumeration_counts() {
        let q = ColourabilityQuery::new(2, Mode::Proper).unwrap();
        assert_eq!(
            all_colourings(&path(4), q, 100, DEFAULT_BUDGET)
                .unwrap()
                .len(),
            2
        );
        let q = ColourabilityQuery::new(3, Mode::Proper).unwrap();
        assert_eq!(
            all_colourings(&cycle(5), q, 100, DEFAULT_BUDGET)
                .unwrap()
                .len(),
            30
        );
        let q = ColourabilityQuery::new(2, Mode::Defect(2)).unwrap();
        assert_eq!(
            all_colourings(&cycle(4), q, 100, DEFAULT_BUDGET)
                .unwrap()
                .len(),
            16
        );
        assert_eq!(
            all_colourings(&cycle(4), q, 15, DEFAULT_BUDGET),
            Err(OracleError::TooManyColourings { limit: 15 })
        );
    }

    use proptest::prelude::*;

    fn small_graph() -> impl Strategy<Value = Graph> {
        (
            1usize..8,
            proptest::collection::vec(proptest::bool::weighted(0.4), 28),
        )
            .prop_map(|(n, mask)| {
                let pairs: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .collect();
                Graph::from_edges(
                    n,
                    pairs
                        .iter()
                        .zip(&mask)
                        .filter(|(_, k)| **k)
                        .map(|(e, _)| *e),
                )
                .unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn matches_brute_force(g in small_graph(), k in 1usize..4, bound in 0usize..4) {
            prop_assert_eq!(ask(&g, k, Mode::Proper), brute(&g, k, Mode::Proper));
            prop_assert_eq!(ask(&g, k, Mode::Defect(bound)), brute(&g, k, Mode::Defect(bound)));
            prop_assert_eq!(ask(&g, k, Mode::Clustering(bound + 1)), brute(&g, k, Mode::Clustering(bound + 1)));
        }

        #[test]
        fn enumeration_matches_brute_force(g in small_graph(), bound in 0usize..3) {
            let q = ColourabilityQuery::new(2, Mode::Defect(bound)).unwrap();
            let all = all_colourings(&g, q, 1 << 10, DEFAULT_BUDGET).unwrap();
            let n = g.vertex_count();
            let expected = (0u32..1 << n)
                .filter(|code| {
                    let colours: Vec<usize> = (0..n).map(|v| (code >> v & 1) as usize).collect();
                    satisfies(&g, &colours, q)
                })
                .count();
            prop_assert_eq!(all.len(), expected);
        }

        #[test]
        fn monotone(g in small_graph(), k in 1usize..3, d in 0usize..3) {
            if ask(&g, k, Mode::Defect(d)) {
                prop_assert!(ask(&g, k, Mode::Defect(d + 1)));
                prop_assert!(ask(&g, k + 1, Mode::Defect(d)));
            }
            if ask(&g, k, Mode::Clustering(d + 1)) {
                prop_assert!(ask(&g, k, Mode::Clustering(d + 2)));
                prop_assert!(ask(&g, k + 1, Mode::Clustering(d + 1)));
            }
        }
    }
}
