use super::engine::{Constraint, Engine, Problem};
use super::{check, Coloring, MonoConstraint, RainbowConstraint, SolveError, WormInstance};
use crate::graph::Graph;
use crate::pattern::{breakbound_from_count, Pattern};
use num_rational::Rational64;
use serde::Serialize;
use std::collections::BTreeSet;

/// Largest order accepted for `WPlus` and `Spectrum`.
pub const EXACT_LIMIT: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Goal {
    Exists,
    WMinus,
    WPlus,
    Spectrum,
}

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    /// A verified bi-cover slope for the rainbow pattern; enables the
    /// counting upper bound on `W+` as an early stop.
    pub rainbow_slope: Option<Rational64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveOutcome {
    pub exists: bool,
    pub w_minus: Option<usize>,
    pub w_plus: Option<usize>,
    /// Feasible color counts; only filled for the `Spectrum` goal.
    pub spectrum: Option<BTreeSet<usize>>,
    /// First coloring found by the existence search.
    pub witness: Option<Coloring>,
    pub witness_min: Option<Coloring>,
    pub witness_max: Option<Coloring>,
}

pub fn solve(instance: &WormInstance, goals: &[Goal]) -> Result<SolveOutcome, SolveError> {
    solve_with(instance, goals, &SolveOptions::default())
}

pub fn solve_with(
    instance: &WormInstance,
    goals: &[Goal],
    options: &SolveOptions,
) -> Result<SolveOutcome, SolveError> {
    let n = instance.order();
    let wants = |g: Goal| goals.contains(&g);
    let exhaustive = wants(Goal::WPlus) || wants(Goal::Spectrum);
    if exhaustive && n > EXACT_LIMIT {
        return Err(SolveError::TooLarge {
            n,
            limit: EXACT_LIMIT,
        });
    }

    let mut out = SolveOutcome::default();
    if n > EXACT_LIMIT && !wants(Goal::WMinus) {
        if let Some(c) = proper_shortcut(instance)? {
            out.exists = true;
            out.witness = Some(c);
            return Ok(out);
        }
    }

    let search = Search::new(instance);
    let mut engine = Engine::new(&search.problem);

    let Some(first) = engine.first(1, n) else {
        if wants(Goal::Spectrum) {
            out.spectrum = Some(BTreeSet::new());
        }
        return Ok(out);
    };
    out.exists = true;
    out.witness = Some(search.coloring(&first));

    if wants(Goal::WMinus) || wants(Goal::Spectrum) {
        let (k, c) = (1..=n)
            .find_map(|k| engine.first(1, k).map(|c| (k, c)))
            .expect("a coloring exists");
        out.w_minus = Some(k);
        out.witness_min = Some(search.coloring(&c));
    }

    if exhaustive {
        let mut upper = n.min(search.problem.max_colors);
        if let (Some(a), RainbowConstraint::Copies(fam)) =
            (options.rainbow_slope, &instance.rainbow)
        {
            if let Ok(b) = breakbound_from_count(n, fam.len(), a) {
                upper = upper.min(b.max(1) as usize);
            }
        }
        let (k, _) = engine.maximize(upper).expect("a coloring exists");
        let c = engine.first(k, k).expect("maximum is attained");
        out.w_plus = Some(k);
        out.witness_max = Some(search.coloring(&c));
    }

    if wants(Goal::Spectrum) {
        let (lo, hi) = (out.w_minus.unwrap(), out.w_plus.unwrap());
        let mut spectrum: BTreeSet<usize> = [lo, hi].into_iter().collect();
        for k in lo + 1..hi {
            if engine.first(k, k).is_some() {
                spectrum.insert(k);
            }
        }
        out.spectrum = Some(spectrum);
    }
    Ok(out)
}

/// Minimum colors with no monochromatic copy of `m`; `None` if impossible.
pub fn m_minus(g: &Graph, m: &Pattern) -> Result<Option<usize>, SolveError> {
    let inst = WormInstance::mono_only(g, m)?;
    Ok(solve(&inst, &[Goal::WMinus])?.w_minus)
}

/// Maximum colors with no rainbow copy of `r`; `None` if impossible.
pub fn r_plus(g: &Graph, r: &Pattern) -> Result<Option<usize>, SolveError> {
    let inst = WormInstance::rainbow_only(g, r)?;
    Ok(solve(&inst, &[Goal::WPlus])?.w_plus)
}

/// Every valid coloring, optionally restricted to exactly `colors` colors,
/// in sorted order.
pub fn enumerate_colorings(
    instance: &WormInstance,
    colors: Option<usize>,
) -> Result<Vec<Coloring>, SolveError> {
    let n = instance.order();
    if n > EXACT_LIMIT {
        return Err(SolveError::TooLarge {
            n,
            limit: EXACT_LIMIT,
        });
    }
    let (lo, hi) = colors.map_or((1, n), |k| (k, k));
    let search = Search::new(instance);
    let mut engine = Engine::new(&search.problem);
    let mut all = Vec::new();
    engine.for_each(lo, hi, &mut |c| {
        all.push(search.coloring(c));
        true
    });
    all.sort();
    Ok(all)
}

/// An instance compiled to engine form over degeneracy-order positions.
struct Search {
    problem: Problem,
    /// `pos[v]` is the search position of vertex `v`.
    pos: Vec<usize>,
}

impl Search {
    fn new(instance: &WormInstance) -> Self {
        let n = instance.order();
        let mut p = Problem::new(n);
        match &instance.mono {
            MonoConstraint::Copies(fam) => {
                for s in fam.iter() {
                    p.push(Constraint {
                        set: s,
                        min_colors: 2,
                        max_colors: s.len(),
                    });
                }
            }
            MonoConstraint::ClassCap(k) => p.max_class = k - 1,
        }
        match &instance.rainbow {
            RainbowConstraint::Copies(fam) => {
                for s in fam.iter() {
                    p.push(Constraint {
                        set: s,
                        min_colors: 1,
                        max_colors: s.len() - 1,
                    });
                }
            }
            RainbowConstraint::ColorCap(k) => p.max_colors = k - 1,
        }
        let order = instance.graph.degeneracy_order();
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        Search {
            problem: p.permuted(&pos),
            pos,
        }
    }

    fn coloring(&self, by_position: &[usize]) -> Coloring {
        let labels: Vec<usize> = self.pos.iter().map(|&p| by_position[p]).collect();
        Coloring::new(&labels)
    }
}

/// A proper coloring is valid whenever every monochromatic copy contains an
/// edge and it uses fewer colors than the smallest rainbow copy.
fn proper_shortcut(instance: &WormInstance) -> Result<Option<Coloring>, SolveError> {
    let g = &instance.graph;
    let mono_ok = match &instance.mono {
        MonoConstraint::Copies(fam) => fam
            .iter()
            .all(|s| s.iter().any(|v| !g.neighbors(v).is_disjoint(s))),
        MonoConstraint::ClassCap(_) => false,
    };
    if !mono_ok {
        return Ok(None);
    }
    let labels: Vec<usize> = match g.bipartition() {
        Some(side) => g
            .vertices()
            .iter()
            .map(|v| side.contains(v) as usize)
            .collect(),
        None => greedy_coloring(g),
    };
    let c = Coloring::new(&labels);
    Ok(check(instance, &c)?.is_valid().then_some(c))
}

fn greedy_coloring(g: &Graph) -> Vec<usize> {
    let mut colors = vec![usize::MAX; g.order()];
    for v in g.degeneracy_order() {
        let taken: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
        colors[v] = (0..).find(|c| !taken.contains(c)).expect("unbounded");
    }
    colors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn gen(f: Family) -> Graph {
        generate(&f, None).unwrap()
    }

    fn all_goals(g: &Graph, m: Pattern, r: Pattern) -> SolveOutcome {
        let inst = WormInstance::new(g, &m, &r).unwrap();
        let out = solve(
            &inst,
            &[Goal::Exists, Goal::WMinus, Goal::WPlus, Goal::Spectrum],
        )
        .unwrap();
        for w in [&out.witness, &out.witness_min, &out.witness_max]
            .into_iter()
            .flatten()
        {
            assert!(check(&inst, w).unwrap().is_valid());
        }
        out
    }

    #[test]
    fn cycle_thirteen_k2_p4() {
        let out = all_goals(
            &gen(Family::Cycle(13)),
            Pattern::Clique(2),
            Pattern::Path(4),
        );
        assert_eq!(out.w_plus, Some(6));
        assert_eq!(out.witness_max.unwrap().colors_used(), 6);
    }

    #[test]
    fn square_k2_claw() {
        let out = all_goals(
            &gen(Family::CompleteBipartite(2, 2)),
            Pattern::Clique(2),
            Pattern::Star(3),
        );
        assert_eq!(out.w_plus, Some(4));
    }

    #[test]
    fn grid_c4_c4() {
        let out = all_goals(
            &gen(Family::Grid(3, 3)),
            Pattern::Cycle(4),
            Pattern::Cycle(4),
        );
        assert_eq!(out.w_plus, Some(7));
    }

    #[test]
    fn path_p3_p3_two_colors() {
        let out = all_goals(&gen(Family::Path(7)), Pattern::Path(3), Pattern::Path(3));
        assert!(out.exists);
        assert_eq!(out.w_minus, Some(2));
        assert!(out.witness.unwrap().colors_used() <= 2);
    }

    #[test]
    fn no_coloring_for_k2_k2() {
        let out = all_goals(
            &gen(Family::Path(3)),
            Pattern::Clique(2),
            Pattern::Clique(2),
        );
        assert!(!out.exists);
        assert_eq!(out.spectrum, Some(BTreeSet::new()));
        assert_eq!(out.w_plus, None);
    }

    #[test]
    fn auxiliary_parameters() {
        let corona = gen(Family::Corona(Box::new(Family::Path(3))));
        assert_eq!(r_plus(&corona, &Pattern::Path(3)), Ok(Some(4)));
        assert_eq!(
            m_minus(&gen(Family::Complete(4)), &Pattern::Clique(2)),
            Ok(Some(4))
        );
        assert_eq!(
            m_minus(&gen(Family::Cycle(5)), &Pattern::Path(3)),
            Ok(Some(2))
        );
        assert_eq!(
            m_minus(&gen(Family::Cycle(5)), &Pattern::Clique(1)),
            Ok(None)
        );
    }

    #[test]
    fn slope_bound_does_not_change_value() {
        let g = gen(Family::Grid(3, 3));
        let inst = WormInstance::new(&g, &Pattern::Cycle(4), &Pattern::Cycle(4)).unwrap();
        let opts = SolveOptions {
            rainbow_slope: Some(Rational64::from_integer(2)),
        };
        assert_eq!(
            solve_with(&inst, &[Goal::WPlus], &opts).unwrap().w_plus,
            Some(7)
        );
    }

    #[test]
    fn too_large_for_w_plus() {
        let g = gen(Family::Cycle(40));
        let inst = WormInstance::new(&g, &Pattern::Clique(2), &Pattern::Path(3)).unwrap();
        assert_eq!(
            solve(&inst, &[Goal::WPlus]),
            Err(SolveError::TooLarge { n: 40, limit: 32 })
        );
        let out = solve(&inst, &[Goal::Exists]).unwrap();
        assert!(out.exists);
    }

    #[test]
    fn cardinality_caps() {
        let g = gen(Family::Cycle(6));
        let out = all_goals(&g, Pattern::Empty(3), Pattern::Empty(4));
        assert_eq!(out.w_minus, Some(3));
        assert_eq!(out.w_plus, Some(3));
    }

    #[test]
    fn enumeration_counts() {
        // Proper 2-colorings of C4 up to renaming: one.
        let g = gen(Family::Cycle(4));
        let inst = WormInstance::new(&g, &Pattern::Clique(2), &Pattern::Path(3)).unwrap();
        let all = enumerate_colorings(&inst, None).unwrap();
        assert_eq!(all, vec![Coloring::new(&[0, 1, 0, 1])]);
    }
}
