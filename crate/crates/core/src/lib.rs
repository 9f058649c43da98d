//! Defective and clustered colouring of graphs with given girth.
//!
//! The crate bundles lower-bound gadget generators, the constructive
//! colouring algorithms, minor extraction, exact graph parameters and
//! exhaustive colourability oracles that certify all of the above on
//! small instances.

pub mod battery;
pub mod colourers;
pub mod constructions;
pub mod corpus;
pub mod graph;
pub mod minors;
pub mod oracle;
pub mod params;

pub use graph::{girth, Girth, Graph, VertexSet};
