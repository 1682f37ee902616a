//! Bi-covering: a vertex set bi-covers a copy when it holds at least two of
//! the copy's vertices. The maximum over `s`-sets bounds how many copies one
//! repeated color can neutralize, which turns into an upper bound on the
//! number of colors in a coloring with no rainbow copy.

use super::{enumerate_copies, CopyFamily, Pattern, PatternError};
use crate::bitset::VertexSet;
use crate::graph::Graph;
use num_rational::Rational64;

/// Number of copies `s` bi-covers.
pub fn bicover_count(copies: &CopyFamily, s: VertexSet) -> usize {
    copies
        .iter()
        .filter(|c| c.intersection(s).len() >= 2)
        .count()
}

/// Maximum number of copies bi-covered by any `s`-subset of the host.
///
/// Exact branch and bound over subsets of the vertices that occur in some
/// copy, seeded with a greedy solution. `s` larger than the host behaves as
/// the whole vertex set.
pub fn bicover_max(copies: &CopyFamily, s: usize) -> usize {
    let live: Vec<VertexSet> = copies.iter().filter(|c| c.len() >= 2).collect();
    if s < 2 || live.is_empty() {
        return 0;
    }
    let support: Vec<usize> = live
        .iter()
        .fold(VertexSet::EMPTY, |acc, c| acc.union(*c))
        .to_vec();
    if s >= support.len() {
        return live.len();
    }

    let mut greedy = VertexSet::EMPTY;
    for _ in 0..s {
        let best = support
            .iter()
            .copied()
            .filter(|&v| !greedy.contains(v))
            .max_by_key(|&v| (count(&live, greedy.with(v)), std::cmp::Reverse(v)))
            .expect("support larger than s");
        greedy.insert(best);
    }
    let mut best = count(&live, greedy);

    branch(&live, &support, 0, VertexSet::EMPTY, s, &mut best);
    best
}

fn count(live: &[VertexSet], s: VertexSet) -> usize {
    live.iter().filter(|c| c.intersection(s).len() >= 2).count()
}

fn branch(
    live: &[VertexSet],
    support: &[usize],
    idx: usize,
    chosen: VertexSet,
    s: usize,
    best: &mut usize,
) {
    let need = s - chosen.len();
    if need == 0 {
        *best = (*best).max(count(live, chosen));
        return;
    }
    if support.len() - idx < need {
        return;
    }
    let pool: VertexSet = support[idx..].iter().copied().collect();
    let optimistic = live
        .iter()
        .filter(|c| c.intersection(chosen).len() + c.intersection(pool).len().min(need) >= 2)
        .count();
    if optimistic <= *best {
        return;
    }
    let v = support[idx];
    branch(live, support, idx + 1, chosen.with(v), s, best);
    branch(live, support, idx + 1, chosen, s, best);
}

/// Smallest slope `a` with `bicover_max(copies, s) <= a (s - 1)` for every
/// `s >= 1`; zero when nothing can be bi-covered.
pub fn bicover_slope(copies: &CopyFamily) -> Rational64 {
    let support = copies
        .iter()
        .filter(|c| c.len() >= 2)
        .fold(VertexSet::EMPTY, |acc, c| acc.union(c))
        .len();
    let mut slope = Rational64::from_integer(0);
    for s in 2..=support.max(2) {
        let r = Rational64::new(bicover_max(copies, s) as i64, (s - 1) as i64);
        if r > slope {
            slope = r;
        }
    }
    slope
}

/// `floor(n - f / a)` in exact arithmetic.
pub fn breakbound_from_count(n: usize, f: usize, a: Rational64) -> Result<i64, PatternError> {
    if a <= Rational64::from_integer(0) {
        return Err(PatternError::NonPositiveSlope);
    }
    let v = Rational64::from_integer(n as i64) - Rational64::from_integer(f as i64) / a;
    Ok(v.floor().to_integer())
}

/// Upper bound on the number of colors of any coloring of `g` with no
/// rainbow copy of `r_pattern`, given a caller-verified bi-cover slope `a`.
pub fn breakbound_upper(
    g: &Graph,
    r_pattern: &Pattern,
    a: Rational64,
) -> Result<i64, PatternError> {
    if a <= Rational64::from_integer(0) {
        return Err(PatternError::NonPositiveSlope);
    }
    let f = enumerate_copies(g, r_pattern)?.len();
    breakbound_from_count(g.order(), f, a)
}
