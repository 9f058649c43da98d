//! Minor-monotone graph parameters and strong colouring numbers.
//!
//! Exact routines enumerate vertex subsets, so each one refuses inputs
//! above a configurable vertex threshold instead of quietly degrading to a
//! heuristic.

mod circumference;
mod fvn;
mod hadwiger;
mod ordering;
mod treedepth;
mod width;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use circumference::{circumference, longest_cycle};
pub use fvn::{feedback_vertex_number, is_feedback_vertex_set, FeedbackVertexSet};
pub use hadwiger::hadwiger_number;
pub use ordering::{
    degeneracy, r_reachable_set, strong_colouring_number_exact, strong_colouring_number_greedy,
    Degeneracy, OrderingWitness,
};
pub use treedepth::{treedepth_exact, RootedForestWitness};
pub use width::{pathwidth_exact, treewidth_exact, PathDecomposition, TreeDecomposition};

/// Hard ceiling imposed by the `u32` subset masks.
pub(crate) const MASK_BITS: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("{operation}: {n} vertices exceeds the exact threshold {limit}")]
    TooLarge {
        operation: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("ordering is not a permutation of the {n} vertices")]
    NotAPermutation { n: usize },
    #[error("radius must be at least 1")]
    ZeroRadius,
}

/// Vertex thresholds for the exact (exponential) routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactLimits {
    pub colouring_number: usize,
    pub width: usize,
    pub hadwiger: usize,
}

impl Default for ExactLimits {
    fn default() -> Self {
        Self {
            colouring_number: 16,
            width: 15,
            hadwiger: 12,
        }
    }
}

pub(crate) fn guard(operation: &'static str, n: usize, limit: usize) -> Result<(), ParamError> {
    let limit = limit.min(MASK_BITS - 1);
    if n > limit {
        Err(ParamError::TooLarge {
            operation,
            n,
            limit,
        })
    } else {
        Ok(())
    }
}

/// Adjacency as bitmasks, for the subset dynamic programs.
pub(crate) fn adjacency_masks(g: &crate::Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}
