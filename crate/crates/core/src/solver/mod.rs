//! (M,R)-WORM colorings: colorings of a host graph with no monochromatic
//! copy of `M` and no rainbow copy of `R`.
//!
//! Patterns are compiled into a [`WormInstance`]. `kK_1` patterns become
//! cardinality caps (each color fewer than `k` times on the monochromatic
//! side, fewer than `k` colors on the rainbow side); every other pattern is
//! enumerated into a [`CopyFamily`].

mod check;
pub(crate) mod engine;
mod reduce;
mod solve;

pub use check::{check, ViolationReport};
pub use reduce::reduce_to_path_bound;
pub use solve::{
    enumerate_colorings, m_minus, r_plus, solve, solve_with, Goal, SolveOptions, SolveOutcome,
    EXACT_LIMIT,
};

use crate::graph::Graph;
use crate::pattern::{enumerate_copies, CopyFamily, Pattern, PatternError};
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("instance too large for exact engine: n = {n} exceeds {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("coloring has {found} entries, graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("coloring is not a valid WORM coloring for this instance")]
    InvalidColoring,
    #[error("path length must be at least 1")]
    PathLength,
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

/// Monochromatic side of an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoConstraint {
    /// None of these sets may be monochromatic.
    Copies(CopyFamily),
    /// Every color class has fewer than `k` vertices.
    ClassCap(usize),
}

/// Rainbow side of an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RainbowConstraint {
    /// None of these sets may be rainbow.
    Copies(CopyFamily),
    /// Fewer than `k` colors in total.
    ColorCap(usize),
}

#[derive(Clone, Debug)]
pub struct WormInstance {
    pub graph: Graph,
    pub mono: MonoConstraint,
    pub rainbow: RainbowConstraint,
}

impl WormInstance {
    pub fn new(graph: &Graph, m: &Pattern, r: &Pattern) -> Result<Self, SolveError> {
        Ok(WormInstance {
            graph: graph.clone(),
            mono: compile_mono(graph, m)?,
            rainbow: compile_rainbow(graph, r)?,
        })
    }

    /// Only the monochromatic side constrains the coloring.
    pub fn mono_only(graph: &Graph, m: &Pattern) -> Result<Self, SolveError> {
        Ok(WormInstance {
            graph: graph.clone(),
            mono: compile_mono(graph, m)?,
            rainbow: RainbowConstraint::Copies(CopyFamily::empty(graph.order(), 0)),
        })
    }

    /// Only the rainbow side constrains the coloring.
    pub fn rainbow_only(graph: &Graph, r: &Pattern) -> Result<Self, SolveError> {
        Ok(WormInstance {
            graph: graph.clone(),
            mono: MonoConstraint::Copies(CopyFamily::empty(graph.order(), 0)),
            rainbow: compile_rainbow(graph, r)?,
        })
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

fn compile_mono(g: &Graph, m: &Pattern) -> Result<MonoConstraint, SolveError> {
    m.validate()?;
    Ok(match m {
        Pattern::Empty(k) => MonoConstraint::ClassCap(*k),
        _ => MonoConstraint::Copies(enumerate_copies(g, m)?),
    })
}

fn compile_rainbow(g: &Graph, r: &Pattern) -> Result<RainbowConstraint, SolveError> {
    r.validate()?;
    Ok(match r {
        Pattern::Empty(k) => RainbowConstraint::ColorCap(*k),
        _ => RainbowConstraint::Copies(enumerate_copies(g, r)?),
    })
}

/// A vertex coloring in restricted-growth form: color `i + 1` first appears
/// after color `i`, so colorings equal up to renaming compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    /// Normalizes arbitrary labels into restricted-growth form.
    pub fn new<T: Eq + std::hash::Hash + Copy>(labels: &[T]) -> Self {
        let mut seen = std::collections::HashMap::new();
        let colors = labels
            .iter()
            .map(|l| {
                let next = seen.len();
                *seen.entry(*l).or_insert(next)
            })
            .collect();
        Coloring { colors }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn colors_used(&self) -> usize {
        self.colors.iter().max().map_or(0, |&m| m + 1)
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Serialize for Coloring {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.colors.serialize(serializer)
    }
}
