#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;
use wormlab::pattern::enumerate_copies_generic;
use wormlab::{Graph, Pattern, VertexSet};

pub fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(rel)
}

pub fn read_graphs(rel: &str) -> Vec<Graph> {
    std::fs::read_to_string(data(rel))
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| Graph::from_graph6(l).unwrap())
        .collect()
}

/// Every set partition of `0..n` as a restricted-growth string.
pub fn partitions(n: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(a: &mut Vec<usize>, n: usize, max: usize, f: &mut dyn FnMut(&[usize])) {
        if a.len() == n {
            f(a);
            return;
        }
        for c in 0..=max {
            a.push(c);
            go(a, n, if c == max { max + 1 } else { max }, f);
            a.pop();
        }
    }
    go(&mut Vec::new(), n, 0, f);
}

fn distinct(colors: &[usize], s: VertexSet) -> usize {
    s.iter().map(|v| colors[v]).collect::<BTreeSet<_>>().len()
}

/// Color counts of all valid colorings, by exhaustive enumeration.
pub fn brute_spectrum(g: &Graph, m: Option<&Pattern>, r: Option<&Pattern>) -> BTreeSet<usize> {
    let n = g.order();
    let copies = |p: &Pattern| match p {
        Pattern::Empty(_) => Vec::new(),
        _ => enumerate_copies_generic(g, p)
            .unwrap()
            .iter()
            .collect::<Vec<_>>(),
    };
    let mono = m.map(copies).unwrap_or_default();
    let rain = r.map(copies).unwrap_or_default();
    let class_cap = match m {
        Some(Pattern::Empty(k)) => *k,
        _ => usize::MAX,
    };
    let color_cap = match r {
        Some(Pattern::Empty(k)) => *k,
        _ => usize::MAX,
    };
    let mut out = BTreeSet::new();
    partitions(n, &mut |c| {
        let used = c.iter().max().unwrap() + 1;
        if used >= color_cap {
            return;
        }
        if (0..used).any(|k| c.iter().filter(|&&x| x == k).count() >= class_cap) {
            return;
        }
        if mono.iter().any(|&s| distinct(c, s) == 1) {
            return;
        }
        if rain.iter().any(|&s| distinct(c, s) == s.len()) {
            return;
        }
        out.insert(used);
    });
    out
}

pub fn gnp(n: usize, percent: u32, seed: u64) -> Graph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n).unwrap();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_range(0..100) < percent {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}
