//! Vertex cover, connected vertex cover and the price of connectivity
//! (PoC = tau_c / tau) of small graphs, computed exactly.

pub mod bitset;
pub mod canon;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod ratio;
pub mod recognize;
pub mod solver;
pub mod verify;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use graph::{Bipartition, Graph, GraphError};
pub use ratio::Ratio;
pub use solver::{CoverNumbers, SolveError, SolveResult, Solver};
