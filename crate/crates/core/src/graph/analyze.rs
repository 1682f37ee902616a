use super::Graph;
use crate::bitset::VertexSet;
use serde::Serialize;
use std::collections::HashSet;

/// Largest order for which [`analyze`] computes the exact chromatic number.
pub const CHROMATIC_LIMIT: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub n: usize,
    pub edges: usize,
    pub is_connected: bool,
    pub is_bipartite: bool,
    /// `Some(k)` when every vertex has degree `k`.
    pub regular_degree: Option<usize>,
    pub every_vertex_in_triangle: bool,
    pub has_perfect_matching: bool,
    pub clique_number: usize,
    /// Absent above [`CHROMATIC_LIMIT`] vertices.
    pub chromatic_number: Option<usize>,
}

impl StructureReport {
    pub fn is_km_free(&self, m: usize) -> bool {
        self.clique_number < m
    }
}

pub fn analyze(g: &Graph) -> StructureReport {
    let degrees = g.degrees();
    let regular_degree = if degrees.iter().all(|&d| d == degrees[0]) {
        Some(degrees[0])
    } else {
        None
    };
    StructureReport {
        n: g.order(),
        edges: g.edge_count(),
        is_connected: g.is_connected(),
        is_bipartite: g.is_bipartite(),
        regular_degree,
        every_vertex_in_triangle: every_vertex_in_triangle(g),
        has_perfect_matching: has_perfect_matching(g),
        clique_number: clique_number(g),
        chromatic_number: (g.order() <= CHROMATIC_LIMIT).then(|| chromatic_number(g)),
    }
}

pub fn every_vertex_in_triangle(g: &Graph) -> bool {
    (0..g.order()).all(|v| {
        g.neighbors(v)
            .iter()
            .any(|u| !g.neighbors(u).is_disjoint(g.neighbors(v)))
    })
}

/// Exhaustive matching search over the set of still-unmatched vertices,
/// memoizing dead ends.
pub fn has_perfect_matching(g: &Graph) -> bool {
    if g.order() % 2 == 1 {
        return false;
    }
    fn go(g: &Graph, free: VertexSet, dead: &mut HashSet<u128>) -> bool {
        let Some(v) = free.first() else {
            return true;
        };
        if dead.contains(&free.bits()) {
            return false;
        }
        let rest = free.without(v);
        for u in g.neighbors(v).intersection(rest) {
            if go(g, rest.without(u), dead) {
                return true;
            }
        }
        dead.insert(free.bits());
        false
    }
    go(g, g.vertices(), &mut HashSet::new())
}

pub fn clique_number(g: &Graph) -> usize {
    fn expand(g: &Graph, size: usize, cand: VertexSet, best: &mut usize) {
        if cand.is_empty() {
            *best = (*best).max(size);
            return;
        }
        let mut cand = cand;
        while let Some(v) = cand.first() {
            if size + cand.len() <= *best {
                return;
            }
            expand(g, size + 1, cand.intersection(g.neighbors(v)), best);
            cand.remove(v);
        }
    }
    let mut best = 0;
    expand(g, 0, g.vertices(), &mut best);
    best
}

pub fn chromatic_number(g: &Graph) -> usize {
    let c = chromatic_coloring(g);
    c.iter().max().map_or(0, |&m| m + 1)
}

/// An optimal proper coloring (colors `0..χ`), found by trying
/// `k = ω, ω+1, ...` with backtracking over the degeneracy order.
pub fn chromatic_coloring(g: &Graph) -> Vec<usize> {
    let order = g.degeneracy_order();
    let mut k = clique_number(g).max(1);
    loop {
        let mut colors = vec![usize::MAX; g.order()];
        let mut classes = vec![VertexSet::EMPTY; k];
        if color_with(g, &order, 0, 0, k, &mut colors, &mut classes) {
            return colors;
        }
        k += 1;
    }
}

fn color_with(
    g: &Graph,
    order: &[usize],
    depth: usize,
    used: usize,
    k: usize,
    colors: &mut [usize],
    classes: &mut [VertexSet],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let nb = g.neighbors(v);
    for c in 0..(used + 1).min(k) {
        if !classes[c].is_disjoint(nb) {
            continue;
        }
        colors[v] = c;
        classes[c].insert(v);
        if color_with(g, order, depth + 1, used.max(c + 1), k, colors, classes) {
            return true;
        }
        classes[c].remove(v);
    }
    colors[v] = usize::MAX;
    false
}
