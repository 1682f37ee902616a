use proptest::prelude::*;
use wormlab::bounds::bound_chain;
use wormlab::graph::{canonical_form, chromatic_coloring};
use wormlab::pattern::enumerate_copies;
use wormlab::solver::{m_minus, reduce_to_path_bound};
use wormlab::{check, solve, Coloring, Goal, Graph, Pattern, WormInstance};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n).unwrap();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        g.add_edge(i, j).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn pattern() -> impl Strategy<Value = Pattern> {
    prop_oneof![
        Just(Pattern::Clique(2)),
        Just(Pattern::Path(3)),
        Just(Pattern::Path(4)),
        Just(Pattern::Clique(3)),
        Just(Pattern::Star(3)),
        Just(Pattern::Cycle(4)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(g in graph(128)) {
        prop_assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(9), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(canonical_form(&g.relabel(&perm)), canonical_form(&g));
    }

    #[test]
    fn coloring_is_restricted_growth(labels in proptest::collection::vec(0u8..6, 1..20)) {
        let c = Coloring::new(&labels);
        let mut next = 0;
        for &x in c.colors() {
            prop_assert!(x <= next);
            if x == next {
                next += 1;
            }
        }
        prop_assert_eq!(c.colors_used(), next);
        prop_assert_eq!(Coloring::new(c.colors()), c);
    }

    #[test]
    fn witnesses_and_chain(g in graph(7), m in pattern(), r in pattern()) {
        let inst = WormInstance::new(&g, &m, &r).unwrap();
        let out = solve(&inst, &[Goal::Exists, Goal::WMinus, Goal::WPlus, Goal::Spectrum]).unwrap();
        for w in [&out.witness, &out.witness_min, &out.witness_max].into_iter().flatten() {
            prop_assert!(check(&inst, w).unwrap().is_valid());
        }
        prop_assert_eq!(out.witness_min.as_ref().map(|c| c.colors_used()), out.w_minus);
        prop_assert_eq!(out.witness_max.as_ref().map(|c| c.colors_used()), out.w_plus);
        let spectrum = out.spectrum.unwrap();
        prop_assert_eq!(out.exists, !spectrum.is_empty());
        prop_assert!(bound_chain(&g, &m, &r).unwrap().consistent);
        // W+ = n exactly when the host has no copy of R.
        if let Some(wp) = out.w_plus {
            prop_assert_eq!(wp == g.order(), enumerate_copies(&g, &r).unwrap().is_empty());
        }
    }

    #[test]
    fn path_reduction(g in graph(8), m in prop_oneof![Just(Pattern::Path(3)), Just(Pattern::Clique(3)), Just(Pattern::Star(3))], r in 3usize..=4) {
        let inst = WormInstance::new(&g, &m, &Pattern::Path(r)).unwrap();
        let out = solve(&inst, &[Goal::WMinus, Goal::WPlus]).unwrap();
        let mm = m_minus(&g, &m).unwrap().unwrap();
        prop_assert_eq!(out.exists, mm < r);
        if out.exists {
            prop_assert_eq!(out.w_minus, Some(mm));
            let f = out.witness_max.unwrap();
            let red = reduce_to_path_bound(&g, &m, r, &f).unwrap();
            prop_assert!(red.colors_used() < r);
            prop_assert!(check(&inst, &red).unwrap().is_valid());
            for (u, v) in g.edges() {
                if red.color(u) == red.color(v) {
                    prop_assert_eq!(f.color(u), f.color(v));
                }
            }
        }
    }

    #[test]
    fn edge_deletion_keeps_colorings(g in graph(7), m in pattern(), r in pattern()) {
        let inst = WormInstance::new(&g, &m, &r).unwrap();
        let out = solve(&inst, &[Goal::WPlus]).unwrap();
        if let (Some(wp), Some((u, v))) = (out.w_plus, g.edges().next()) {
            let mut h = g.clone();
            h.remove_edge(u, v);
            let hi = WormInstance::new(&h, &m, &r).unwrap();
            let ho = solve(&hi, &[Goal::WPlus]).unwrap();
            prop_assert!(ho.w_plus.is_some_and(|x| x >= wp));
        }
    }

    #[test]
    fn disjoint_unions_compose(a in graph(5), b in graph(5), m in pattern(), r in pattern()) {
        let g = a.disjoint_union(&b).unwrap();
        let goals = [Goal::WMinus, Goal::WPlus];
        let run = |h: &Graph| solve(&WormInstance::new(h, &m, &r).unwrap(), &goals).unwrap();
        let (oa, ob, og) = (run(&a), run(&b), run(&g));
        prop_assert_eq!(og.w_plus, oa.w_plus.zip(ob.w_plus).map(|(x, y)| x + y));
        prop_assert_eq!(og.w_minus, oa.w_minus.zip(ob.w_minus).map(|(x, y)| x.max(y)));
    }

    #[test]
    fn proper_coloring_of_k_m_free_graphs(g in graph(8)) {
        let inst = WormInstance::new(&g, &Pattern::Clique(2), &Pattern::Clique(4)).unwrap();
        let out = solve(&inst, &[Goal::WMinus]).unwrap();
        let chi = chromatic_coloring(&g).iter().max().unwrap() + 1;
        if chi <= 3 {
            prop_assert_eq!(out.w_minus, Some(chi));
        }
    }
}
