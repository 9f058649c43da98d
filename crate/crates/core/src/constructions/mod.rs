//! Deterministic generators for the lower-bound gadgets and proof devices.
//!
//! Every generator documents its vertex labelling so that callers can
//! address named vertices, and reports what it claims about its output in
//! a [`GadgetMeta`] that tests check against the exact oracles.

mod apex;
mod feedback;
mod standard;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::{Girth, Graph};

pub use apex::{apex23_grid_girth8, apex_grid_girth5, APEX23_LABELS};
pub use feedback::{fvn1_gadget, fvn7_gadget, fvn7_path_edges};
pub use standard::{
    amplified_size, extract_proper_copy, independent_set_tree, standard_example,
    treedepth_amplification, Amplified, ExtractionError,
};

/// Default explosion guard for every generator.
pub const DEFAULT_VERTEX_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{construction}: output would have {vertices} vertices, above the cap {cap}")]
    TooLarge {
        construction: &'static str,
        vertices: u128,
        cap: usize,
    },
    #[error("{construction}: {reason}")]
    InvalidParameter {
        construction: &'static str,
        reason: String,
    },
    #[error("vertex order is not a permutation of the host's vertices")]
    NotAPermutation,
    #[error("rooted forest is not a treedepth witness for the graph")]
    InvalidForest,
    #[error("no label among {labels} is free for division vertex {vertex}")]
    LabellingFailed { vertex: usize, labels: usize },
}

pub(crate) fn check_cap(
    construction: &'static str,
    vertices: u128,
    cap: usize,
) -> Result<(), ConstructionError> {
    if vertices > cap as u128 {
        Err(ConstructionError::TooLarge {
            construction,
            vertices,
            cap,
        })
    } else {
        Ok(())
    }
}

/// A graph with a fixed vertex order `v_1, ..., v_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedHost {
    pub graph: Graph,
    pub order: Vec<usize>,
}

impl OrderedHost {
    pub fn new(graph: Graph, order: Vec<usize>) -> Result<Self, ConstructionError> {
        let n = graph.vertex_count();
        let mut seen = vec![false; n];
        if order.len() != n {
            return Err(ConstructionError::NotAPermutation);
        }
        for &v in &order {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(ConstructionError::NotAPermutation);
            }
        }
        Ok(Self { graph, order })
    }

    /// Order `0, 1, ..., n-1`.
    pub fn natural(graph: Graph) -> Self {
        let order = graph.vertices().collect();
        Self { graph, order }
    }
}

/// A claim that the graph admits no `k`-colouring with the given defect or
/// clustering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonColourability {
    pub colours: usize,
    pub measure: crate::colourers::Measure,
    pub value: usize,
}

/// Properties a generator asserts about its output.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claims {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub girth: Option<Girth>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangle_free: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fvn_at_most: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pathwidth_at_most: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub treedepth_at_most: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chromatic_at_least: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub apex_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_colourable: Option<NonColourability>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetMeta {
    pub construction: String,
    pub parameters: BTreeMap<String, u64>,
    pub named_vertices: BTreeMap<String, Vec<usize>>,
    pub claims: Claims,
    pub notes: Vec<String>,
}

impl GadgetMeta {
    pub(crate) fn new(construction: &str) -> Self {
        Self {
            construction: construction.into(),
            parameters: BTreeMap::new(),
            named_vertices: BTreeMap::new(),
            claims: Claims::default(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn param(mut self, key: &str, value: usize) -> Self {
        self.parameters.insert(key.into(), value as u64);
        self
    }

    pub(crate) fn named(mut self, key: &str, vertices: Vec<usize>) -> Self {
        self.named_vertices.insert(key.into(), vertices);
        self
    }

    pub(crate) fn note(mut self, text: &str) -> Self {
        self.notes.push(text.into());
        self
    }

    /// Every named vertex exists in `g`.
    pub fn names_are_valid(&self, g: &Graph) -> bool {
        self.named_vertices
            .values()
            .flatten()
            .all(|&v| v < g.vertex_count())
    }
}
