//! Upper bounds on the number of colors and the consistency of the chain
//! `m- <= W- <= W+ <= r+`.
//!
//! For a star `K_{1,r}` and `M = K_2` a coloring is proper, so the center of
//! every star differs from its leaves and a rainbow star is exactly an open
//! neighborhood seeing `r` colors. That turns `W+(G; K_2, K_{1,r})` into a
//! capped coloring problem on the open-neighborhood hypergraph.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::pattern::{bicover_slope, breakbound_from_count, enumerate_copies, Pattern};
use crate::solver::engine::{Constraint, Engine, Problem};
use crate::solver::{
    check, m_minus, r_plus, solve, Coloring, Goal, SolveError, WormInstance, EXACT_LIMIT,
};
use num_rational::Rational64;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    pub n: usize,
    /// Edges as a multiset; two vertices may share a neighborhood.
    pub edges: Vec<VertexSet>,
}

/// One edge `N(v)` per non-isolated vertex `v`, in vertex order.
pub fn open_neighborhood_hypergraph(g: &Graph) -> Hypergraph {
    Hypergraph {
        n: g.order(),
        edges: g
            .vertices()
            .iter()
            .map(|v| g.neighbors(v))
            .filter(|nb| !nb.is_empty())
            .collect(),
    }
}

/// Maximum number of colors such that every edge sees at most `cap` colors,
/// with a witness; `None` when even one color is too many.
pub fn max_colors_capped_with_witness(
    h: &Hypergraph,
    cap: usize,
) -> Result<Option<(usize, Coloring)>, SolveError> {
    if h.n > EXACT_LIMIT {
        return Err(SolveError::TooLarge {
            n: h.n,
            limit: EXACT_LIMIT,
        });
    }
    let mut p = Problem::new(h.n);
    for &e in &h.edges {
        p.push(Constraint {
            set: e,
            min_colors: 1,
            max_colors: cap,
        });
    }
    let mut engine = Engine::new(&p);
    Ok(engine.maximize(h.n).map(|(k, c)| (k, Coloring::new(&c))))
}

pub fn max_colors_capped(h: &Hypergraph, cap: usize) -> Result<Option<usize>, SolveError> {
    Ok(max_colors_capped_with_witness(h, cap)?.map(|(k, _)| k))
}

/// Upper bound for a star pattern with `M = K_2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeighborhoodBound {
    /// `None` when no capped coloring exists.
    pub bound: Option<usize>,
    /// Bipartite hosts only: whether the capped optimum, with colors made
    /// disjoint across the two sides, is itself a valid WORM coloring.
    pub bipartite_witness: Option<bool>,
}

pub fn neighborhood_bound(g: &Graph, star: usize) -> Result<NeighborhoodBound, SolveError> {
    let h = open_neighborhood_hypergraph(g);
    let best = max_colors_capped_with_witness(&h, star.saturating_sub(1))?;
    let bipartite_witness = match (g.bipartition(), &best) {
        (Some(side), Some((k, c))) => {
            let labels: Vec<(usize, bool)> = (0..g.order())
                .map(|v| (c.color(v), side.contains(v)))
                .collect();
            let split = Coloring::new(&labels);
            let inst = WormInstance::new(g, &Pattern::Clique(2), &Pattern::Star(star))?;
            Some(split.colors_used() == *k && check(&inst, &split)?.is_valid())
        }
        _ => None,
    };
    Ok(NeighborhoodBound {
        bound: best.map(|(k, _)| k),
        bipartite_witness,
    })
}

/// The counting bound `floor(n - f / a)` for the rainbow pattern, with `a`
/// the exact bi-cover slope of its copies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountingBound {
    pub copies: usize,
    pub slope: String,
    pub bound: i64,
}

/// `None` when no copy can be bi-covered, which leaves the bound undefined.
pub fn counting_bound(g: &Graph, r: &Pattern) -> Result<Option<CountingBound>, SolveError> {
    if r.is_cardinality() {
        return Ok(None);
    }
    let fam = enumerate_copies(g, r)?;
    let slope = bicover_slope(&fam);
    if slope <= Rational64::from_integer(0) {
        return Ok(None);
    }
    let bound = breakbound_from_count(g.order(), fam.len(), slope)?;
    Ok(Some(CountingBound {
        copies: fam.len(),
        slope: slope.to_string(),
        bound,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundChainReport {
    pub m_minus: Option<usize>,
    pub w_minus: Option<usize>,
    pub w_plus: Option<usize>,
    pub r_plus: Option<usize>,
    /// Present when `M = K_2` and `R` is a star.
    pub neighborhood: Option<NeighborhoodBound>,
    pub consistent: bool,
}

pub fn bound_chain(g: &Graph, m: &Pattern, r: &Pattern) -> Result<BoundChainReport, SolveError> {
    let inst = WormInstance::new(g, m, r)?;
    let out = solve(&inst, &[Goal::WMinus, Goal::WPlus])?;
    let m_minus = m_minus(g, m)?;
    let r_plus = r_plus(g, r)?;
    let neighborhood = match r {
        Pattern::Star(s) if m.is_single_edge() => Some(neighborhood_bound(g, *s)?),
        _ => None,
    };

    let mut consistent = true;
    if let (Some(mm), Some(wm), Some(wp), Some(rp)) = (m_minus, out.w_minus, out.w_plus, r_plus) {
        consistent = mm <= wm && wm <= wp && wp <= rp;
    } else if out.exists {
        consistent = false;
    }
    if let Some(nb) = &neighborhood {
        match (out.w_plus, nb.bound) {
            (Some(wp), Some(b)) => {
                consistent &= wp <= b;
                if nb.bipartite_witness.is_some() {
                    consistent &= wp == b && nb.bipartite_witness == Some(true);
                }
            }
            (Some(_), None) => consistent = false,
            _ => {}
        }
    }
    Ok(BoundChainReport {
        m_minus,
        w_minus: out.w_minus,
        w_plus: out.w_plus,
        r_plus,
        neighborhood,
        consistent,
    })
}
