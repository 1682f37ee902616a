//! Forbidden patterns and their copies inside a host graph.
//!
//! A copy is recorded as the vertex set it occupies: whether a copy is
//! monochromatic or rainbow depends only on that set, so copies with the same
//! image collapse into one entry.

mod bicover;
mod enumerate;
mod expr;

pub use expr::parse_pattern;

pub use bicover::{
    bicover_count, bicover_max, bicover_slope, breakbound_from_count, breakbound_upper,
};
pub use enumerate::{enumerate_copies, enumerate_copies_generic};

use crate::bitset::VertexSet;
use crate::graph::{generate, Family, Graph};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("cardinality pattern {0} cannot be enumerated as copies")]
    NotEnumerable(Pattern),
    #[error("invalid pattern: {0}")]
    Invalid(String),
    #[error("pattern syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("slope must be positive")]
    NonPositiveSlope,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    Path(usize),
    Cycle(usize),
    Clique(usize),
    /// `K_{1,r}`.
    Star(usize),
    /// `K_{a,b}` with `2 <= a <= b`; `a = 1` is always represented as `Star`.
    Biclique(usize, usize),
    /// `kK_1`: handled as a cardinality constraint, never enumerated.
    Empty(usize),
    Custom(Graph),
}

impl Pattern {
    /// Validated constructor for bicliques; orders the sides and folds `K_{1,b}`
    /// into [`Pattern::Star`].
    pub fn biclique(a: usize, b: usize) -> Result<Pattern, PatternError> {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let p = if a == 1 {
            Pattern::Star(b)
        } else {
            Pattern::Biclique(a, b)
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), PatternError> {
        let bad = |m: &str| Err(PatternError::Invalid(m.to_string()));
        match *self {
            Pattern::Path(r) | Pattern::Clique(r) | Pattern::Star(r) | Pattern::Empty(r)
                if r == 0 =>
            {
                bad("parameter must be positive")
            }
            Pattern::Cycle(r) if r < 3 => bad("cycles need at least 3 vertices"),
            Pattern::Biclique(a, b) if a < 2 || a > b => bad("biclique needs 2 <= a <= b"),
            _ => Ok(()),
        }
    }

    /// Number of vertices, `|F|`.
    pub fn order(&self) -> usize {
        match self {
            Pattern::Path(r) | Pattern::Cycle(r) | Pattern::Clique(r) | Pattern::Empty(r) => *r,
            Pattern::Star(r) => r + 1,
            Pattern::Biclique(a, b) => a + b,
            Pattern::Custom(g) => g.order(),
        }
    }

    pub fn is_cardinality(&self) -> bool {
        matches!(self, Pattern::Empty(_))
    }

    /// The pattern as an explicit graph.
    pub fn to_graph(&self) -> Result<Graph, PatternError> {
        self.validate()?;
        let fam = match *self {
            Pattern::Path(r) => Family::Path(r),
            Pattern::Cycle(r) => Family::Cycle(r),
            Pattern::Clique(r) => Family::Complete(r),
            Pattern::Star(r) => Family::Star(r),
            Pattern::Biclique(a, b) => Family::CompleteBipartite(a, b),
            Pattern::Empty(k) => {
                return Graph::new(k).map_err(|e| PatternError::Invalid(e.to_string()))
            }
            Pattern::Custom(ref g) => return Ok(g.clone()),
        };
        generate(&fam, None).map_err(|e| PatternError::Invalid(e.to_string()))
    }

    pub fn is_connected(&self) -> bool {
        match self {
            Pattern::Empty(k) => *k == 1,
            Pattern::Custom(g) => g.is_connected(),
            _ => true,
        }
    }

    pub fn has_edge(&self) -> bool {
        match self {
            Pattern::Empty(_) => false,
            Pattern::Path(r) | Pattern::Clique(r) => *r >= 2,
            Pattern::Custom(g) => g.edge_count() > 0,
            _ => true,
        }
    }

    /// True for `K_2` in any spelling (`K2`, `P2`, `K1,1`).
    pub fn is_single_edge(&self) -> bool {
        match self {
            Pattern::Path(2) | Pattern::Clique(2) | Pattern::Star(1) => true,
            Pattern::Custom(g) => g.order() == 2 && g.edge_count() == 1,
            _ => false,
        }
    }
}

/// Deduplicated copies of one pattern in one host, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CopyFamily {
    host_order: usize,
    pattern_order: usize,
    copies: Vec<VertexSet>,
}

impl CopyFamily {
    /// Builds a family from arbitrary sets; sorts and removes duplicates.
    pub fn new(host_order: usize, pattern_order: usize, mut copies: Vec<VertexSet>) -> Self {
        copies.sort();
        copies.dedup();
        debug_assert!(copies.iter().all(|c| c.len() == pattern_order));
        debug_assert!(copies
            .iter()
            .all(|c| c.is_subset(VertexSet::prefix(host_order))));
        CopyFamily {
            host_order,
            pattern_order,
            copies,
        }
    }

    pub fn empty(host_order: usize, pattern_order: usize) -> Self {
        CopyFamily::new(host_order, pattern_order, Vec::new())
    }

    pub fn host_order(&self) -> usize {
        self.host_order
    }

    pub fn pattern_order(&self) -> usize {
        self.pattern_order
    }

    pub fn copies(&self) -> &[VertexSet] {
        &self.copies
    }

    pub fn len(&self) -> usize {
        self.copies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.copies.iter().copied()
    }
}
