use super::{CopyFamily, Pattern, PatternError};
use crate::bitset::VertexSet;
use crate::graph::Graph;
use std::collections::HashSet;

/// All vertex sets that are images of an injective edge-preserving map from
/// the pattern into `g`. Named families use dedicated enumerators; custom
/// graphs go through the generic backtracking matcher.
pub fn enumerate_copies(g: &Graph, p: &Pattern) -> Result<CopyFamily, PatternError> {
    p.validate()?;
    if p.is_cardinality() {
        return Err(PatternError::NotEnumerable(p.clone()));
    }
    let k = p.order();
    let n = g.order();
    if k > n {
        return Ok(CopyFamily::empty(n, k));
    }
    let mut out = HashSet::new();
    match *p {
        Pattern::Path(r) => paths(g, r, &mut out),
        Pattern::Cycle(r) => cycles(g, r, &mut out),
        Pattern::Clique(r) => cliques(g, r, VertexSet::EMPTY, g.vertices(), &mut out),
        Pattern::Star(r) => {
            for v in 0..n {
                for_each_subset(g.neighbors(v), r, &mut |leaves| {
                    out.insert(leaves.with(v));
                });
            }
        }
        Pattern::Biclique(a, b) => bicliques(g, a, b, &mut out),
        Pattern::Custom(ref h) => embed(g, h, &mut out),
        Pattern::Empty(_) => unreachable!("rejected above"),
    }
    Ok(CopyFamily::new(n, k, out.into_iter().collect()))
}

/// Generic matcher applied to any pattern with an explicit graph; used as the
/// reference the dedicated enumerators are tested against.
pub fn enumerate_copies_generic(g: &Graph, p: &Pattern) -> Result<CopyFamily, PatternError> {
    if p.is_cardinality() {
        return Err(PatternError::NotEnumerable(p.clone()));
    }
    let h = p.to_graph()?;
    let mut out = HashSet::new();
    if h.order() <= g.order() {
        embed(g, &h, &mut out);
    }
    Ok(CopyFamily::new(
        g.order(),
        h.order(),
        out.into_iter().collect(),
    ))
}

fn paths(g: &Graph, r: usize, out: &mut HashSet<VertexSet>) {
    fn walk(g: &Graph, end: usize, used: VertexSet, left: usize, out: &mut HashSet<VertexSet>) {
        if left == 0 {
            out.insert(used);
            return;
        }
        for w in g.neighbors(end).difference(used) {
            walk(g, w, used.with(w), left - 1, out);
        }
    }
    for s in 0..g.order() {
        walk(g, s, VertexSet::singleton(s), r - 1, out);
    }
}

/// Cycles are rooted at their smallest vertex.
fn cycles(g: &Graph, r: usize, out: &mut HashSet<VertexSet>) {
    fn walk(
        g: &Graph,
        root: usize,
        end: usize,
        used: VertexSet,
        allowed: VertexSet,
        left: usize,
        out: &mut HashSet<VertexSet>,
    ) {
        if left == 0 {
            if g.has_edge(end, root) {
                out.insert(used);
            }
            return;
        }
        for w in g.neighbors(end).intersection(allowed).difference(used) {
            walk(g, root, w, used.with(w), allowed, left - 1, out);
        }
    }
    for s in 0..g.order() {
        let allowed = g.vertices().difference(VertexSet::prefix(s + 1));
        walk(g, s, s, VertexSet::singleton(s), allowed, r - 1, out);
    }
}

fn cliques(g: &Graph, r: usize, clique: VertexSet, cand: VertexSet, out: &mut HashSet<VertexSet>) {
    if clique.len() == r {
        out.insert(clique);
        return;
    }
    if clique.len() + cand.len() < r {
        return;
    }
    let mut cand = cand;
    while let Some(v) = cand.first() {
        cand.remove(v);
        cliques(g, r, clique.with(v), cand.intersection(g.neighbors(v)), out);
    }
}

fn bicliques(g: &Graph, a: usize, b: usize, out: &mut HashSet<VertexSet>) {
    fn pick(
        g: &Graph,
        a: usize,
        b: usize,
        side: VertexSet,
        common: VertexSet,
        next: usize,
        out: &mut HashSet<VertexSet>,
    ) {
        if common.len() < b {
            return;
        }
        if side.len() == a {
            for_each_subset(common, b, &mut |other| {
                out.insert(side.union(other));
            });
            return;
        }
        for v in next..g.order() {
            pick(
                g,
                a,
                b,
                side.with(v),
                common.intersection(g.neighbors(v)),
                v + 1,
                out,
            );
        }
    }
    pick(g, a, b, VertexSet::EMPTY, g.vertices(), 0, out);
}

/// Calls `f` on every `k`-subset of `set`.
pub(crate) fn for_each_subset(set: VertexSet, k: usize, f: &mut dyn FnMut(VertexSet)) {
    fn go(rest: VertexSet, k: usize, acc: VertexSet, f: &mut dyn FnMut(VertexSet)) {
        if k == 0 {
            f(acc);
            return;
        }
        if rest.len() < k {
            return;
        }
        let v = rest.first().expect("nonempty");
        let rest = rest.without(v);
        go(rest, k - 1, acc.with(v), f);
        go(rest, k, acc, f);
    }
    go(set, k, VertexSet::EMPTY, f);
}

/// Backtracking subgraph matcher. Pattern vertices are visited in BFS order
/// per component so each new vertex is constrained by mapped neighbors.
fn embed(g: &Graph, h: &Graph, out: &mut HashSet<VertexSet>) {
    let k = h.order();
    let mut order = Vec::with_capacity(k);
    let mut placed = VertexSet::EMPTY;
    for root in 0..k {
        if placed.contains(root) {
            continue;
        }
        placed.insert(root);
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            for w in h.neighbors(order[i]).difference(placed) {
                placed.insert(w);
                order.push(w);
            }
            i += 1;
        }
    }
    let mut image = vec![usize::MAX; k];
    go(g, h, &order, 0, &mut image, VertexSet::EMPTY, out);

    fn go(
        g: &Graph,
        h: &Graph,
        order: &[usize],
        depth: usize,
        image: &mut [usize],
        used: VertexSet,
        out: &mut HashSet<VertexSet>,
    ) {
        if depth == order.len() {
            out.insert(used);
            return;
        }
        let p = order[depth];
        let mut cand = g.vertices().difference(used);
        for q in h.neighbors(p) {
            if image[q] != usize::MAX {
                cand = cand.intersection(g.neighbors(image[q]));
            }
        }
        let need = h.degree(p);
        for v in cand {
            if g.degree(v) < need {
                continue;
            }
            image[p] = v;
            go(g, h, order, depth + 1, image, used.with(v), out);
        }
        image[p] = usize::MAX;
    }
}
