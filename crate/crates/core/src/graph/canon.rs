//! Canonical labeling by individualization and refinement.
//!
//! No automorphism pruning: the search visits every leaf of the refinement
//! tree, which is cheap for the sparse, small graphs this crate scans
//! (cubic graphs, graphs on a handful of vertices) but grows factorially
//! on graphs such as `K_n`.

use super::Graph;

type Partition = Vec<Vec<usize>>;

/// Canonical graph6 string: equal iff the graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> String {
    let n = g.order();
    let mut best: Option<String> = None;
    let start = refine(g, vec![(0..n).collect()]);
    search(g, start, &mut best);
    best.expect("at least one leaf")
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && {
            let mut da = a.degrees();
            let mut db = b.degrees();
            da.sort_unstable();
            db.sort_unstable();
            da == db
        }
        && canonical_form(a) == canonical_form(b)
}

fn search(g: &Graph, part: Partition, best: &mut Option<String>) {
    let Some(target) = part.iter().position(|c| c.len() > 1) else {
        let mut perm = vec![0; g.order()];
        for (label, cell) in part.iter().enumerate() {
            perm[cell[0]] = label;
        }
        let cert = g.relabel(&perm).to_graph6();
        if best.as_ref().is_none_or(|b| cert < *b) {
            *best = Some(cert);
        }
        return;
    };
    for &v in &part[target] {
        let mut next = part.clone();
        let rest: Vec<usize> = part[target].iter().copied().filter(|&w| w != v).collect();
        next[target] = vec![v];
        next.insert(target + 1, rest);
        search(g, refine(g, next), best);
    }
}

/// Equitable refinement: split every cell by neighbor counts into each cell
/// until stable. Cell order depends only on the input cell order and the
/// counts, so the result commutes with relabeling.
fn refine(g: &Graph, mut part: Partition) -> Partition {
    let n = g.order();
    loop {
        let mut cell_of = vec![0usize; n];
        for (i, cell) in part.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let k = part.len();
        let mut next: Partition = Vec::with_capacity(n);
        for cell in &part {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0usize; k];
                    for w in g.neighbors(v) {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut i = 0;
            while i < keyed.len() {
                let mut j = i;
                let mut group = Vec::new();
                while j < keyed.len() && keyed[j].0 == keyed[i].0 {
                    group.push(keyed[j].1);
                    j += 1;
                }
                group.sort_unstable();
                next.push(group);
                i = j;
            }
        }
        if next.len() == part.len() {
            return next;
        }
        part = next;
    }
}
