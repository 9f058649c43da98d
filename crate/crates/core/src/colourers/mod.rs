//! Constructive colouring algorithms.
//!
//! Every colourer returns a [`ColouringReport`] whose defect, clustering
//! and properness are recomputed from the graph by [`check_colouring`];
//! the algorithm only contributes the colour array and the bound it
//! promises. Colours are `0..k`.

mod blockwise;
mod degenerate;
mod feedback;
mod large_girth;
mod reachability;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::{Girth, Graph};

pub use blockwise::{circumference_clustering_bound, two_colour_circumference_girth5};
pub use degenerate::{proper_colour_degenerate, DegenerateOutcome};
pub use feedback::{two_colour_fvn1_girth5, two_colour_fvn_girth7};
pub use large_girth::{two_colour_large_girth, LargeGirthOutcome, StuckCertificate};
pub use reachability::{
    defective_colour_rooted, defective_colour_via_col2, find_kst, KstCheck, KstWitness,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colouring {
    pub colours: Vec<usize>,
    pub k: usize,
}

impl Colouring {
    pub fn new(colours: Vec<usize>, k: usize) -> Result<Self, ColourError> {
        if let Some((vertex, &colour)) = colours.iter().enumerate().find(|(_, &c)| c >= k) {
            return Err(ColourError::ColourOutOfRange { vertex, colour, k });
        }
        Ok(Self { colours, k })
    }

    pub fn monochromatic(n: usize) -> Self {
        Self {
            colours: vec![0; n],
            k: 1,
        }
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    /// Exchanges colours `a` and `b` everywhere.
    pub fn swap(&mut self, a: usize, b: usize) {
        for c in &mut self.colours {
            if *c == a {
                *c = b;
            } else if *c == b {
                *c = a;
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Defect,
    Clustering,
}

/// Bound promised by the algorithm. `conditional` is set when a
/// precondition was assumed rather than checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guarantee {
    pub measure: Measure,
    pub bound: u128,
    pub conditional: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringReport {
    pub colouring: Colouring,
    pub defect: usize,
    pub clustering: usize,
    pub proper: bool,
    pub guarantee: Option<Guarantee>,
}

impl ColouringReport {
    pub fn with_guarantee(mut self, guarantee: Guarantee) -> Self {
        self.guarantee = Some(guarantee);
        self
    }

    /// Whether the recomputed statistic respects the promised bound
    /// (vacuously true without a guarantee).
    pub fn meets_guarantee(&self) -> bool {
        match self.guarantee {
            None => true,
            Some(Guarantee {
                measure: Measure::Defect,
                bound,
                ..
            }) => self.defect as u128 <= bound,
            Some(Guarantee {
                measure: Measure::Clustering,
                bound,
                ..
            }) => self.clustering as u128 <= bound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColourError {
    #[error("colouring has {found} entries but the graph has {expected} vertices")]
    Partial { expected: usize, found: usize },
    #[error("vertex {vertex} has colour {colour}, outside 0..{k}")]
    ColourOutOfRange {
        vertex: usize,
        colour: usize,
        k: usize,
    },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error(
        "ordering witness does not match the graph or has radius {radius}, expected {expected}"
    )]
    BadWitness { radius: usize, expected: usize },
    #[error("need 1 <= s <= t, got s = {s}, t = {t}")]
    BadShape { s: usize, t: usize },
    #[error("the rooted variant needs s >= 2 to keep the root properly coloured, got s = {0}")]
    RootedNeedsTwoColours(usize),
    #[error("graph contains K_{{{s},{t}}}: {witness:?}")]
    KstSubgraph {
        s: usize,
        t: usize,
        witness: KstWitness,
    },
    #[error("girth {found} is below the required {required}")]
    GirthTooSmall { found: Girth, required: usize },
    #[error("removing {0:?} does not leave a forest")]
    NotAFeedbackSet(Vec<usize>),
    #[error("feedback vertex number exceeds 1")]
    FeedbackNumberTooLarge,
}

/// Recomputes defect, clustering and properness from scratch.
pub fn check_colouring(g: &Graph, c: &Colouring) -> Result<ColouringReport, ColourError> {
    let n = g.vertex_count();
    if c.colours.len() != n {
        return Err(ColourError::Partial {
            expected: n,
            found: c.colours.len(),
        });
    }
    let c = Colouring::new(c.colours.clone(), c.k)?;
    let defect = g
        .vertices()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| c.colours[w] == c.colours[v])
                .count()
        })
        .max()
        .unwrap_or(0);
    let clustering = monochromatic_components(g, &c)
        .iter()
        .map(Vec::len)
        .max()
        .unwrap_or(0);
    Ok(ColouringReport {
        colouring: c,
        defect,
        clustering,
        proper: defect == 0,
        guarantee: None,
    })
}

/// Connected components of the subgraphs induced by each colour class.
pub fn monochromatic_components(g: &Graph, c: &Colouring) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in g.neighbors(u) {
                if !seen[w] && c.colours[w] == c.colours[s] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn report(g: &Graph, colours: &[usize]) -> ColouringReport {
        check_colouring(g, &Colouring::new(colours.to_vec(), 2).unwrap()).unwrap()
    }

    #[test]
    fn statistics() {
        let r = report(&cycle(4), &[0, 1, 0, 1]);
        assert_eq!((r.defect, r.clustering, r.proper), (0, 1, true));
        let r = check_colouring(&complete(3), &Colouring::monochromatic(3)).unwrap();
        assert_eq!((r.defect, r.clustering, r.proper), (2, 3, false));
        let r = report(&cycle(5), &[0, 0, 1, 1, 1]);
        assert_eq!((r.defect, r.clustering), (2, 3));
    }

    #[test]
    fn rejects_bad_colourings() {
        let g = path(3);
        assert_eq!(
            check_colouring(
                &g,
                &Colouring {
                    colours: vec![0, 1],
                    k: 2
                }
            ),
            Err(ColourError::Partial {
                expected: 3,
                found: 2
            })
        );
        assert!(matches!(
            check_colouring(
                &g,
                &Colouring {
                    colours: vec![0, 1, 2],
                    k: 2
                }
            ),
            Err(ColourError::ColourOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(40, 20), 137_846_528_820);
    }

    #[test]
    fn swap_colours() {
        let mut c = Colouring::new(vec![0, 1, 2, 1], 3).unwrap();
        c.swap(1, 2);
        assert_eq!(c.colours, vec![0, 2, 1, 2]);
    }
}
