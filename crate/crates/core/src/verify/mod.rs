//! Executable checks of closed-form statements, batch scans over graph6
//! streams, and probes of open conjectures on cubic graphs.

mod catalog;
mod cubic;
mod scan;

pub use catalog::{regression_suite, run_theorem_case, Relation, Status, TheoremCase, CASE_IDS};
pub use cubic::{connected_cubic_graphs, moebius_coloring, prism_coloring, NAIVE_CUBIC_LIMIT};
pub use scan::{
    probe_conjecture, scan_stream, Conjecture, Flags, OrderSummary, ProbeFinding, ProbeReport,
    ScanFailure, ScanRecord, ScanReport, Statistic,
};

use crate::graph::{Graph6Error, GraphError};
use crate::pattern::PatternError;
use crate::solver::SolveError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown case {0:?}")]
    UnknownCase(String),
    #[error("{id}: {reason}")]
    Params { id: String, reason: String },
    #[error("unknown {kind} {name:?}")]
    UnknownName { kind: &'static str, name: String },
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error("read error: {0}")]
    Io(#[from] std::io::Error),
    #[error("thread pool: {0}")]
    Pool(String),
}
