//! Exact vertex cover above the LP lower bound.
//!
//! The crate contains a half-integral LP engine, LP-guided reduction rules with
//! solution lifting, two branch-and-reduce solvers, applications (odd cycle
//! transversal, split vertex deletion, cover parameterised by a deletion set,
//! kernelization) and independent brute-force oracles used by the tests.

pub mod exec;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod lpvc;
pub mod matching;
pub mod oracle;
pub mod reduce;
pub mod solve;
pub mod transversal;

pub use graph::{Graph, GraphError, Origin, VertexId};
pub use lpvc::HalfUnits;
