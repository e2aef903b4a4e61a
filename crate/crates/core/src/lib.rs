//! Exact computation of backedge-graph parameters of digraphs.
//!
//! An ordering of the vertices of a digraph determines its *backedge
//! graph*: the undirected graph of the arcs that point backwards. Many
//! digraph parameters are the minimum, over all orderings, of an undirected
//! parameter of that graph; degreewidth uses the maximum degree. This crate
//! computes those parameters exactly for small digraphs, the related
//! linear-arrangement costs, and builds the 3-SAT and dicolouring gadget
//! instances together with their witness translations.

mod bits;
pub mod costs;
pub mod digraph;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod ordering;
pub mod params;
pub mod reductions;
pub mod report;
mod search;
pub mod width;

pub use digraph::{Arc, ArcSet, DegreeStats, Digraph};
pub use error::{Error, Result};
pub use graph::UndirectedGraph;
pub use ordering::Ordering;
pub use params::ParameterSelector;
pub use width::{degreewidth_via_fas, dig_lower_bound, Guards, Method, Solver, WidthResult};
