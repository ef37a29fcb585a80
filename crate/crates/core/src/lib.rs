//! k-ordered Hamiltonicity: exact and heuristic cycle search, extremal
//! constructions, matchings, regularity checks and the constructive
//! extremal-case solvers.

pub mod bitset;
pub mod constructions;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod hamilton;
pub mod io;
pub mod matching;
pub mod regularity;
pub mod report;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, Rational};
pub use hamilton::{HamCycle, HamPath, OrderedSequence, SolverConfig};
