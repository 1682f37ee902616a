mod common;

use common::{gnp, read_graphs};
use std::collections::BTreeSet;
use wormlab::bounds::{bound_chain, max_colors_capped, open_neighborhood_hypergraph};
use wormlab::graph::{canonical_form, generate, Family};
use wormlab::verify::{connected_cubic_graphs, probe_conjecture, Conjecture};
use wormlab::{solve, Goal, Graph, Pattern, WormInstance};

fn forms(gs: &[Graph]) -> BTreeSet<String> {
    gs.iter().map(canonical_form).collect()
}

#[test]
fn external_lists_match_naive_generator() {
    for n in [4, 6, 8, 10] {
        let external = read_graphs(&format!("cubic/cubic_{n:02}.g6"));
        let naive = connected_cubic_graphs(n).unwrap();
        assert_eq!(forms(&external), forms(&naive), "order {n}");
        assert_eq!(forms(&external).len(), external.len());
    }
}

#[test]
fn bipartite_lists_are_the_bipartite_members() {
    for n in [4, 6, 8, 10, 12, 14] {
        let all = read_graphs(&format!("cubic/cubic_{n:02}.g6"));
        let bip = read_graphs(&format!("cubic/cubic_bip_{n:02}.g6"));
        let expected: BTreeSet<String> = all
            .iter()
            .filter(|g| g.is_bipartite())
            .map(canonical_form)
            .collect();
        assert_eq!(forms(&bip), expected, "order {n}");
    }
}

#[test]
fn cubic_p4_probe_up_to_ten() {
    let mut text = String::new();
    for n in [4, 6, 8, 10] {
        text.push_str(
            &std::fs::read_to_string(common::data(&format!("cubic/cubic_{n:02}.g6"))).unwrap(),
        );
    }
    let report = probe_conjecture(Conjecture::CubicP4, text.as_bytes(), None).unwrap();
    assert!(
        report.counterexamples.is_empty(),
        "{:?}",
        report.counterexamples
    );
    assert_eq!(report.scanned, 27);
    // K4 has no proper 3-coloring, hence no coloring at all.
    assert_eq!(report.no_coloring, vec!["C~".to_string()]);
    assert_eq!(report.verdict, "no counterexample up to order 10");
}

#[test]
fn cubic_c4_probe_on_prisms_and_ladders() {
    let mut text = String::new();
    for m in [3, 5] {
        text.push_str(&generate(&Family::Prism(m), None).unwrap().to_graph6());
        text.push('\n');
    }
    for n in [8, 12] {
        text.push_str(&generate(&Family::Moebius(n), None).unwrap().to_graph6());
        text.push('\n');
    }
    let report = probe_conjecture(Conjecture::CubicC4, text.as_bytes(), Some(2)).unwrap();
    assert!(report.counterexamples.is_empty());
    assert_eq!(report.equality.len(), 4);
    assert_eq!(report.verdict, "no counterexample up to order 12");
}

#[test]
fn bipartite_cubic_p4_value() {
    for n in [6, 8, 10, 12] {
        for g in read_graphs(&format!("cubic/cubic_bip_{n:02}.g6")) {
            let inst = WormInstance::new(&g, &Pattern::Clique(2), &Pattern::Path(4)).unwrap();
            assert_eq!(
                solve(&inst, &[Goal::WPlus]).unwrap().w_plus,
                Some(n / 2 + 1)
            );
        }
    }
}

#[test]
fn neighborhood_bound_on_small_graphs() {
    let mut graphs = read_graphs("small/all_06.g6");
    graphs.extend((0..30).map(|s| gnp(7 + s as usize % 4, 35, 4000 + s)));
    for g in &graphs {
        for star in [2, 3] {
            let inst = WormInstance::new(g, &Pattern::Clique(2), &Pattern::Star(star)).unwrap();
            let wp = solve(&inst, &[Goal::WPlus]).unwrap().w_plus;
            let bound = max_colors_capped(&open_neighborhood_hypergraph(g), star - 1).unwrap();
            if let Some(wp) = wp {
                assert!(bound.is_some_and(|b| wp <= b), "{}", g.to_graph6());
            }
            if g.is_bipartite() {
                assert_eq!(wp, bound, "{}", g.to_graph6());
            }
            assert!(
                bound_chain(g, &Pattern::Clique(2), &Pattern::Star(star))
                    .unwrap()
                    .consistent
            );
        }
    }
}
