//! Graph coloring through DFS decompositions and deterministic online
//! algorithms, with exhaustive oracles that make every claimed bound
//! checkable at desk scale.
//!
//! The pieces:
//! - [`graph`]: graphs, colorings, properness checks;
//! - [`oracle`]: exact cycle spectrum, longest path, chromatic and clique
//!   numbers, forbidden-subgraph detection (budget-gated);
//! - [`dfs`] / [`blocks`]: DFS trees, levels, bands, leaf-heavy spines,
//!   block-cut decomposition;
//! - [`online`]: the online session contract and the concrete algorithms
//!   (first fit, modulo-level, quad-group, parity-greedy levels);
//! - [`compose`]: path, band, and recursive compositions turning an
//!   online algorithm into a full-graph coloring with a claimed bound;
//! - [`residue`]: colorings for graphs with few cycle lengths in a fixed
//!   residue class mod k, with witness extraction on hypothesis failure;
//! - [`adversary`]: the k^2-vertex lower-bound game forcing any online
//!   algorithm to open at least k bins on a triangle-free graph;
//! - [`generate`] / [`io`] / [`batch`]: test families, text formats, and
//!   corpus-level evaluation (rayon-parallel with the `parallel` feature).

pub mod adversary;
pub mod batch;
pub mod blocks;
pub mod compose;
pub mod dfs;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod online;
pub mod oracle;
pub mod residue;

pub use error::{Error, Result};
pub use graph::{validate_coloring, Coloring, ColoringVerdict, Graph};
pub use online::AlgorithmSpec;
