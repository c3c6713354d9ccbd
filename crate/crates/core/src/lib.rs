//! Diameter and eccentricity computation for graphs with few pairwise
//! nonadjacent extremities, with brute-force oracles for checking.

pub mod bench;
pub mod chordal;
pub mod domtarget;
pub mod engine;
pub mod error;
pub mod extremities;
pub mod fixtures;
pub mod generators;
pub mod graph;
pub mod hyperbolicity;
pub mod io;
pub mod modular;
pub mod partition;
pub mod rng;
pub mod search;

pub use error::{Error, Result};
pub use graph::{DistanceVector, Graph, VertexSet, UNREACHABLE};
