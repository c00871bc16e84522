//! Oriented perfect path double covers (OPPDCs) of simple graphs.
//!
//! An OPPDC of a graph `G` is a set of directed paths in the symmetric
//! orientation of `G` (every edge replaced by two opposite arcs) such that
//! every arc lies on exactly one path and every vertex begins exactly one
//! path and ends exactly one path.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: simple undirected graphs, graph6 / edge-list I/O, blocks,
//!   small edge cuts, ear and cycle decompositions, Cartesian products.
//! * [`cover`]: directed paths, path covers, the cover verifier and the
//!   conversion to and from small oriented cycle double covers.
//! * [`construct`]: explicit cover constructions and composition surgeries.
//! * [`solver`]: exhaustive and structured search for covers.
//! * [`hunter`]: minimal-counterexample filtering over graph streams.

pub mod construct;
pub mod cover;
pub mod graph;
pub mod hunter;
pub mod solver;

pub use cover::{DiPath, PathCover, VerifyReport};
pub use graph::{Graph, VertexId};
pub use solver::{Budget, SolveOutcome, SolveStatus};
