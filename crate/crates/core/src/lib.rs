pub mod bitset;
pub mod bounds;
pub mod graph;
pub mod pattern;
pub mod solver;
pub mod verify;

pub use bitset::VertexSet;
pub use graph::{Graph, GraphError};
pub use pattern::{CopyFamily, Pattern, PatternError};
pub use solver::{check, solve, Coloring, Goal, SolveError, SolveOutcome, WormInstance};
