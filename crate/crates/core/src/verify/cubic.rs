use crate::graph::{canonical_form, Graph};
use crate::solver::Coloring;
use std::collections::BTreeMap;

/// Largest order accepted by [`connected_cubic_graphs`].
pub const NAIVE_CUBIC_LIMIT: usize = 10;

/// All connected cubic graphs of order `n` up to isomorphism, sorted by
/// canonical graph6. A plain backtracking generator meant as a cross-check
/// on external lists, so it refuses orders above [`NAIVE_CUBIC_LIMIT`].
pub fn connected_cubic_graphs(n: usize) -> Option<Vec<Graph>> {
    if n > NAIVE_CUBIC_LIMIT {
        return None;
    }
    if n < 4 || n % 2 == 1 {
        return Some(Vec::new());
    }
    let mut g = Graph::new(n).expect("order within bounds");
    let mut found = BTreeMap::new();
    extend(&mut g, &mut found);
    Some(found.into_values().collect())
}

fn extend(g: &mut Graph, found: &mut BTreeMap<String, Graph>) {
    let n = g.order();
    let Some(u) = (0..n).find(|&v| g.degree(v) < 3) else {
        if g.is_connected() {
            found.entry(canonical_form(g)).or_insert_with(|| g.clone());
        }
        return;
    };
    let open: Vec<usize> = (u + 1..n)
        .filter(|&w| g.degree(w) < 3 && !g.has_edge(u, w))
        .collect();
    if open.len() < 3 - g.degree(u) {
        return;
    }
    // Untouched vertices are interchangeable; only the first is tried.
    let fresh = open.iter().copied().find(|&w| g.degree(w) == 0);
    for w in open {
        if g.degree(w) == 0 && Some(w) != fresh {
            continue;
        }
        g.add_edge(u, w).expect("valid edge");
        extend(g, found);
        g.remove_edge(u, w);
    }
}

/// The `m`-color coloring of the prism `C_m × K_2` in which `u_i` and
/// `v_{i+1}` share color `i`.
pub fn prism_coloring(m: usize) -> Coloring {
    let mut labels = vec![0; 2 * m];
    for i in 0..m {
        labels[i] = i;
        labels[m + (i + 1) % m] = i;
    }
    Coloring::new(&labels)
}

/// The `n/2`-color coloring of the Möbius ladder on `w_1, ..., w_n`:
/// `w_i` and `w_{i+m-1}` get color `i` for `2 <= i <= m`, `w_1` gets color 1
/// and `w_n` gets color 2.
pub fn moebius_coloring(n: usize) -> Coloring {
    let m = n / 2;
    let mut labels = vec![0; n];
    let w = |i: usize| i - 1;
    for i in 2..=m {
        labels[w(i)] = i;
        labels[w(i + m - 1)] = i;
    }
    labels[w(1)] = 1;
    labels[w(n)] = 2;
    Coloring::new(&labels)
}
