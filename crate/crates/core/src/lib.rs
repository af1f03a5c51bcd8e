//! Exact perfect Italian, Italian, Roman and plain domination numbers of
//! small graphs, closed forms for named families, and the gadget graphs
//! that realize prescribed pairs of values.

pub mod cli;
pub mod families;
pub mod graph;
pub mod labeling;
pub mod realize;
pub mod solver;

pub use graph::{FamilySpec, Graph, GraphBuilder, GraphError};
pub use labeling::{is_valid, violations, Labeling, LabelingError, Variant, Violation};
pub use solver::{enumerate_optima, solve, solve_with, Optima, SolveError, SolveOptions, SolveResult};
