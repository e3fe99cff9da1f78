//! Classification of graph elements against optimal substructures, plus three
//! small planar construction problems.
//!
//! * [`matching_classify`]: edges and vertices of a bipartite multigraph against
//!   all maximum (or minimum-cost maximum) matchings.
//! * [`mst_classify`]: edges of a multigraph against all minimum spanning trees.
//! * [`flow`]: arcs whose unit capacity increase raises the maximum flow.
//! * [`geometry`]: balanced weighted point sets, polygon recovery from ratio
//!   points, and triangles from two sides and a median.
//!
//! Every classifier has a brute-force counterpart in [`oracle`].

pub mod decimal;
pub mod error;
pub mod flow;
pub mod geometry;
pub mod graph;
pub mod matching;
pub mod matching_classify;
pub mod mst_classify;
pub mod oracle;

pub use error::{Error, Result};
pub use graph::{Category, Digraph, Dsu, Multigraph};
pub use matching::{BipartiteGraph, Matching};
