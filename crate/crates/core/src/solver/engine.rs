//! Exact backtracking over colorings in restricted-growth form.
//!
//! Every constraint is a vertex set with bounds on how many distinct colors
//! it may see: a forbidden monochromatic copy needs at least two colors, a
//! forbidden rainbow copy at most `|S| - 1`, a capped hyperedge at most
//! `cap`. Vertices are relabeled so that search position `p` is bit `p`;
//! the prefix `0..depth` is always the colored part.

use crate::bitset::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Constraint {
    pub set: VertexSet,
    pub min_colors: usize,
    pub max_colors: usize,
}

#[derive(Clone, Debug)]
pub(crate) struct Problem {
    pub n: usize,
    pub constraints: Vec<Constraint>,
    /// Largest allowed color class.
    pub max_class: usize,
    /// Largest allowed number of colors.
    pub max_colors: usize,
}

impl Problem {
    pub fn new(n: usize) -> Self {
        Problem {
            n,
            constraints: Vec::new(),
            max_class: n,
            max_colors: n,
        }
    }

    /// Adds a constraint, merging bounds with an existing one on the same set.
    pub fn push(&mut self, c: Constraint) {
        if let Some(old) = self.constraints.iter_mut().find(|o| o.set == c.set) {
            old.min_colors = old.min_colors.max(c.min_colors);
            old.max_colors = old.max_colors.min(c.max_colors);
        } else {
            self.constraints.push(c);
        }
    }

    /// The same problem with vertex `v` moved to position `pos[v]`.
    pub fn permuted(&self, pos: &[usize]) -> Problem {
        let map = |s: VertexSet| s.iter().map(|v| pos[v]).collect::<VertexSet>();
        Problem {
            n: self.n,
            constraints: self
                .constraints
                .iter()
                .map(|c| Constraint {
                    set: map(c.set),
                    ..*c
                })
                .collect(),
            max_class: self.max_class,
            max_colors: self.max_colors,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum ColorOrder {
    /// Existing colors in increasing order, then the new color: yields the
    /// lexicographically least solution first.
    Lex,
    /// New color first, then existing colors descending.
    NewFirst,
}

enum Mode<'f> {
    First,
    Maximize { upper: usize },
    All(&'f mut dyn FnMut(&[usize]) -> bool),
}

pub(crate) struct Engine<'p> {
    p: &'p Problem,
    watch: Vec<Vec<usize>>,
    /// Constraints that can absorb new colors only up to a cap, smallest first.
    capped: Vec<usize>,
    colors: Vec<usize>,
    classes: Vec<VertexSet>,
    best: Option<Vec<usize>>,
    best_count: usize,
    pub nodes: u64,
}

impl<'p> Engine<'p> {
    pub fn new(p: &'p Problem) -> Self {
        let mut watch = vec![Vec::new(); p.n];
        let mut capped = Vec::new();
        for (i, c) in p.constraints.iter().enumerate() {
            let members = c.set.to_vec();
            let size = members.len();
            if size == 0 {
                continue;
            }
            let mut from = size - 1;
            if c.max_colors < size {
                capped.push(i);
                // It can first overflow once max + 1 of its vertices are colored.
                from = from.min(c.max_colors);
            }
            for &pos in &members[from..] {
                watch[pos].push(i);
            }
        }
        capped.sort_by_key(|&i| (p.constraints[i].set.len(), i));
        Engine {
            p,
            watch,
            capped,
            colors: vec![usize::MAX; p.n],
            classes: Vec::with_capacity(p.n),
            best: None,
            best_count: 0,
            nodes: 0,
        }
    }

    /// Lexicographically first solution using between `lo` and `hi` colors.
    pub fn first(&mut self, lo: usize, hi: usize) -> Option<Vec<usize>> {
        self.reset();
        let mut mode = Mode::First;
        self.dfs(0, lo, hi, ColorOrder::Lex, &mut mode);
        self.best.take()
    }

    /// Maximum number of colors, stopping early at `upper`.
    pub fn maximize(&mut self, upper: usize) -> Option<(usize, Vec<usize>)> {
        self.reset();
        let mut mode = Mode::Maximize { upper };
        self.dfs(0, 1, self.p.max_colors, ColorOrder::NewFirst, &mut mode);
        let count = self.best_count;
        self.best.take().map(|b| (count, b))
    }

    /// Visits every solution with between `lo` and `hi` colors in lex order;
    /// the callback returns `false` to stop.
    pub fn for_each(&mut self, lo: usize, hi: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
        self.reset();
        let mut mode = Mode::All(f);
        self.dfs(0, lo, hi, ColorOrder::Lex, &mut mode);
    }

    fn reset(&mut self) {
        self.colors.iter_mut().for_each(|c| *c = usize::MAX);
        self.classes.clear();
        self.best = None;
        self.best_count = 0;
    }

    /// Returns `true` when the search should stop.
    fn dfs(
        &mut self,
        depth: usize,
        lo: usize,
        hi: usize,
        order: ColorOrder,
        mode: &mut Mode,
    ) -> bool {
        self.nodes += 1;
        let n = self.p.n;
        if depth == n {
            let used = self.classes.len();
            if used < lo || used > hi {
                return false;
            }
            return match mode {
                Mode::First => {
                    self.best = Some(self.colors.clone());
                    self.best_count = used;
                    true
                }
                Mode::Maximize { upper } => {
                    if self.best.is_none() || used > self.best_count {
                        self.best = Some(self.colors.clone());
                        self.best_count = used;
                    }
                    used >= *upper
                }
                Mode::All(f) => !f(&self.colors),
            };
        }

        let used = self.classes.len();
        let limit = hi.min(self.p.max_colors);
        let top = if used < limit {
            used
        } else {
            used.saturating_sub(1)
        };
        let candidates: Vec<usize> = match order {
            ColorOrder::Lex => (0..=top).collect(),
            ColorOrder::NewFirst => (0..=top).rev().collect(),
        };
        for c in candidates {
            if c == used {
                if used >= limit || self.p.max_class == 0 {
                    continue;
                }
                self.classes.push(VertexSet::EMPTY);
            } else if self.classes[c].len() >= self.p.max_class {
                continue;
            }
            self.colors[depth] = c;
            self.classes[c].insert(depth);

            let mut ok = self.constraints_hold(depth);
            if ok {
                let lo_now = match mode {
                    Mode::Maximize { .. } if self.best.is_some() => lo.max(self.best_count + 1),
                    _ => lo,
                };
                ok = self.can_reach(depth + 1, lo_now);
            }
            if ok && self.dfs(depth + 1, lo, hi, order, mode) {
                return true;
            }

            self.classes[c].remove(depth);
            self.colors[depth] = usize::MAX;
            if c == used {
                self.classes.pop();
            }
        }
        false
    }

    fn distinct(&self, set: VertexSet) -> usize {
        let mut seen = 0u128;
        for v in set {
            seen |= 1u128 << self.colors[v];
        }
        seen.count_ones() as usize
    }

    fn constraints_hold(&self, depth: usize) -> bool {
        let colored = VertexSet::prefix(depth + 1);
        for &i in &self.watch[depth] {
            let c = &self.p.constraints[i];
            let part = c.set.intersection(colored);
            let d = self.distinct(part);
            if d > c.max_colors {
                return false;
            }
            if part == c.set && d < c.min_colors {
                return false;
            }
        }
        true
    }

    /// Optimistic test that `lo` colors are still reachable from `depth`.
    fn can_reach(&self, depth: usize, lo: usize) -> bool {
        let used = self.classes.len();
        if used >= lo {
            return true;
        }
        let remaining = self.p.n - depth;
        if used + remaining < lo {
            return false;
        }
        if used + remaining.min(self.p.max_colors - used) < lo {
            return false;
        }
        // Each capped set with uncolored part U and d colors so far can host
        // at most (cap - d) first occurrences of new colors; on disjoint U's
        // the shortfalls add up.
        let colored = VertexSet::prefix(depth);
        let mut taken = VertexSet::EMPTY;
        let mut lost = 0;
        for &i in &self.capped {
            let c = &self.p.constraints[i];
            let open = c.set.difference(colored);
            if open.is_empty() || !open.is_disjoint(taken) {
                continue;
            }
            let d = self.distinct(c.set.intersection(colored));
            let room = c.max_colors.saturating_sub(d);
            if open.len() > room {
                lost += open.len() - room;
                taken = taken.union(open);
                if used + remaining - lost < lo {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rainbow(set: &[usize]) -> Constraint {
        Constraint {
            set: set.iter().copied().collect(),
            min_colors: 1,
            max_colors: set.len() - 1,
        }
    }

    fn mono(set: &[usize]) -> Constraint {
        Constraint {
            set: set.iter().copied().collect(),
            min_colors: 2,
            max_colors: set.len(),
        }
    }

    #[test]
    fn unconstrained_extremes() {
        let p = Problem::new(4);
        let mut e = Engine::new(&p);
        assert_eq!(e.first(1, 4), Some(vec![0, 0, 0, 0]));
        assert_eq!(e.maximize(4).map(|x| x.0), Some(4));
    }

    #[test]
    fn edge_both_ways_is_infeasible() {
        let mut p = Problem::new(2);
        p.push(mono(&[0, 1]));
        p.push(rainbow(&[0, 1]));
        assert_eq!(p.constraints.len(), 1);
        let mut e = Engine::new(&p);
        assert_eq!(e.first(1, 2), None);
        assert_eq!(e.maximize(2), None);
    }

    #[test]
    fn counts_partitions() {
        // No constraints: all set partitions of 5 elements, Bell(5) = 52.
        let p = Problem::new(5);
        let mut e = Engine::new(&p);
        let mut count = 0;
        e.for_each(1, 5, &mut |_| {
            count += 1;
            true
        });
        assert_eq!(count, 52);
        // Stirling S(5, 2) = 15.
        let mut count = 0;
        e.for_each(2, 2, &mut |_| {
            count += 1;
            true
        });
        assert_eq!(count, 15);
    }

    #[test]
    fn class_and_color_caps() {
        let mut p = Problem::new(5);
        p.max_class = 2;
        let mut e = Engine::new(&p);
        assert_eq!(e.first(1, 5).map(|c| *c.iter().max().unwrap() + 1), Some(3));
        let mut p = Problem::new(5);
        p.max_colors = 2;
        let mut e = Engine::new(&p);
        assert_eq!(e.maximize(5).map(|x| x.0), Some(2));
    }
}
