//! Minimum t-partial vertex covers and, through them, the smallest static
//! and dynamic monopolies of a graph under an average-threshold constraint.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: simple undirected graphs, the edge-list format, coverage;
//! * [`pvc`]: exact, tree, degree-greedy and heuristic partial cover solvers;
//! * [`monopoly`]: threshold assignments, the spread process, and the
//!   smallest monopolies computed through partial covers;
//! * [`reductions`]: the pendant-triple augmentation and the star/path
//!   gadget, with machine-checked instance equivalence;
//! * [`verify`]: exhaustive small-graph batteries driving the CLI.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod monopoly;
pub mod pvc;
pub mod ratio;
pub mod reductions;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{bipartition, parse_graph, BipartitionView, Graph, InducedSubgraph};
pub use ratio::{parse_rational, Rational};
pub use vertex_set::VertexSet;
