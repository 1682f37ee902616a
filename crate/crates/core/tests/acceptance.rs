//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use common::{brute_spectrum, read_graphs};
use std::collections::BTreeSet;
use std::time::{Duration, Instant};
use wormlab::bounds::bound_chain;
use wormlab::graph::{canonical_form, generate, Family};
use wormlab::pattern::{bicover_max, breakbound_upper, enumerate_copies};
use wormlab::verify::{run_theorem_case, scan_stream, ScanReport, Statistic, TheoremCase};
use wormlab::{solve, Goal, Graph, Pattern, WormInstance};

type Instance = (Graph, Pattern, Pattern);

struct Verdict {
    ok: bool,
    notes: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict {
            ok: true,
            notes: Vec::new(),
        }
    }

    fn require(&mut self, cond: bool, what: impl Into<String>) {
        if !cond {
            self.ok = false;
            self.notes.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }

    fn case(&mut self, id: &str, params: &[u64]) -> TheoremCase {
        let c = run_theorem_case(id, params).unwrap();
        self.require(
            c.passed(),
            format!(
                "{id}{params:?}: expected {:?}, computed {:?} {}",
                c.expected, c.computed, c.detail
            ),
        );
        c
    }
}

fn gen(f: Family) -> Graph {
    generate(&f, None).unwrap()
}

fn scan_cubic(n: usize, r: &Pattern) -> ScanReport {
    let text = std::fs::read_to_string(common::data(&format!("cubic/cubic_{n:02}.g6"))).unwrap();
    scan_stream(
        text.as_bytes(),
        &Pattern::Clique(2),
        r,
        Statistic::WPlus,
        None,
    )
    .unwrap()
}

fn c1(reg: &mut Vec<Instance>) -> Verdict {
    let mut v = Verdict::new();
    let mut cases = 0;
    for r in 3..=5u64 {
        for n in r..=12 {
            for m in [3, 4u64] {
                v.case("T1", &[n, m, r]);
                reg.push((
                    gen(Family::Path(n as usize)),
                    Pattern::Path(m as usize),
                    Pattern::Path(r as usize),
                ));
                cases += 1;
            }
        }
    }
    v.note(format!("{cases} path cases"));
    v
}

fn c2(reg: &mut Vec<Instance>) -> Verdict {
    let mut v = Verdict::new();
    for n in [3u64, 5, 7, 9, 11, 13] {
        let c = v.case("T2", &[n]);
        v.note(format!("C{n}: {:?}", c.computed.unwrap_or(-1)));
        reg.push((
            gen(Family::Cycle(n as usize)),
            Pattern::Clique(2),
            Pattern::Path(4),
        ));
    }
    v
}

fn c3(reg: &mut Vec<Instance>) -> Verdict {
    let mut v = Verdict::new();
    for m in 2..=4u64 {
        for n in m..=4 {
            let c = v.case("T3", &[m, n]);
            v.note(format!("G{m},{n}: {}", c.computed.unwrap_or(-1)));
            reg.push((
                gen(Family::Grid(m as usize, n as usize)),
                Pattern::Cycle(4),
                Pattern::Cycle(4),
            ));
        }
    }
    v
}

fn c4(reg: &mut Vec<Instance>) -> Verdict {
    let mut v = Verdict::new();
    let mut cases = 0;
    let mut transfer = 0;
    for a in 2..=3u64 {
        for b in a..=3 {
            for m in a..=4 {
                for n in m.max(b)..=4 {
                    let c = v.case("T4", &[m, n, a, b]);
                    cases += 1;
                    let t = run_theorem_case("T4", &[m, n, a, b, 1, 1]).unwrap();
                    transfer += (t.computed == c.computed) as usize;
                    reg.push((
                        gen(Family::CompleteBipartite(m as usize, n as usize)),
                        Pattern::Clique(2),
                        Pattern::biclique(a as usize, b as usize).unwrap(),
                    ));
                }
            }
        }
    }
    v.note(format!(
        "{cases} biclique cases; W+ with M = K2 equal in {transfer}/{cases}"
    ));
    v
}

fn c5(reg: &mut Vec<Instance>) -> Verdict {
    let mut v = Verdict::new();
    for m in [2u64, 3] {
        v.case("T5", &[m]);
        reg.push((
            gen(Family::CompleteBipartite(m as usize, m as usize)),
            Pattern::Clique(2),
            Pattern::Star(3),
        ));
    }
    for n in 5..=10u64 {
        for seed in 0..20 {
            v.case("T6", &[n, seed]);
            reg.push((
                generate(&Family::TwoTree(n as usize), Some(seed)).unwrap(),
                Pattern::Clique(2),
                Pattern::Star(3),
            ));
        }
    }
    let c = v.case("T7", &[2]);
    v.note(format!("bracelet(2): {:?}", c.computed));
    reg.push((
        gen(Family::Bracelet(2)),
        Pattern::Clique(2),
        Pattern::Star(3),
    ));
    let mut scanned = 0;
    for n in [4, 6, 8, 10, 12, 14] {
        let report = scan_cubic(n, &Pattern::Star(3));
        v.require(
            report.failures.is_empty(),
            format!("scan failures at order {n}"),
        );
        for rec in &report.records {
            scanned += 1;
            if let Some(x) = rec.value {
                v.require(x <= 2 * n / 3, format!("{} exceeds 2n/3", rec.graph6));
            }
        }
    }
    v.note(format!("{scanned} cubic graphs within 2n/3"));
    v
}

fn c6(reg: &mut Vec<Instance>) -> (Verdict, Verdict) {
    let mut v = Verdict::new();
    let mut minimizers = Vec::new();
    let mut overall = usize::MAX;
    for n in [4, 6, 8, 10, 12] {
        let report = scan_cubic(n, &Pattern::Star(3));
        v.require(
            report.failures.is_empty(),
            format!("scan failures at order {n}"),
        );
        for rec in &report.records {
            reg.push((
                Graph::from_graph6(&rec.graph6).unwrap(),
                Pattern::Clique(2),
                Pattern::Star(3),
            ));
        }
        let o = &report.orders[0];
        v.note(format!("n={n}: {} graphs, min {:?}", o.graphs, o.min));
        if let Some(min) = o.min {
            overall = overall.min(min);
            if min == 3 {
                minimizers.extend(o.minimizers.iter().map(|g| (n, g.clone())));
            }
        }
    }
    v.require(overall == 3, format!("minimum over n <= 12 is {overall}"));
    let orders: BTreeSet<usize> = minimizers.iter().map(|(n, _)| *n).collect();
    let prism = canonical_form(&gen(Family::Prism(3)));
    let at = |k: usize| {
        minimizers
            .iter()
            .filter(|(n, _)| *n == k)
            .collect::<Vec<_>>()
    };
    v.require(
        at(6).len() == 1 && canonical_form(&Graph::from_graph6(&at(6)[0].1).unwrap()) == prism,
        "order 6 extremal graph is not the prism",
    );
    v.require(
        at(10).len() == 1,
        format!("order 10 has {} extremal graphs", at(10).len()),
    );
    v.require(
        orders == BTreeSet::from([6, 10]),
        format!(
            "extremal graphs at orders {orders:?}: {:?}",
            minimizers
                .iter()
                .map(|(n, g)| format!("{n}:{g}"))
                .collect::<Vec<_>>()
        ),
    );

    let mut s = Verdict::new();
    let report = scan_cubic(14, &Pattern::Star(3));
    let o = &report.orders[0];
    s.require(
        o.min == Some(3) && o.minimizers.len() == 1,
        format!("order 14: min {:?}, {} extremal", o.min, o.minimizers.len()),
    );
    if let Some(g6) = o.minimizers.first() {
        let form = canonical_form(&Graph::from_graph6(g6).unwrap());
        let gp: Vec<usize> = (1..=3)
            .filter(|&k| canonical_form(&gen(Family::GeneralizedPetersen(7, k))) == form)
            .collect();
        s.require(
            !gp.is_empty(),
            "order 14 extremal graph is not a generalized Petersen graph",
        );
        s.note(format!(
            "{} graphs; extremal {g6} is GP(7,k) for k in {gp:?}",
            o.graphs
        ));
    }
    (v, s)
}

fn c7(reg: &mut Vec<Instance>) -> Verdict {
    let mut v = Verdict::new();
    for (n, kind) in [(6u64, 0u64), (10, 0), (8, 1), (12, 1)] {
        let c = v.case("T8", &[n, kind]);
        v.note(format!(
            "n={n} {}: {:?}",
            if kind == 0 { "prism" } else { "moebius" },
            c.computed
        ));
        let g = if kind == 0 {
            gen(Family::Prism(n as usize / 2))
        } else {
            gen(Family::Moebius(n as usize))
        };
        reg.push((g, Pattern::Clique(2), Pattern::Cycle(4)));
    }
    v
}

fn c8(reg: &mut Vec<Instance>) -> Verdict {
    let mut v = Verdict::new();
    let mut admitted = 0;
    let mut seed = 0u64;
    while admitted < 20 && seed < 2000 {
        let n = 6 + seed % 5;
        let c = v.case("T9", &[0, n, seed]);
        if c.expected.is_some() {
            admitted += 1;
            reg.push((
                generate(&Family::TriangleWeb(n as usize), Some(seed)).unwrap(),
                Pattern::Clique(2),
                Pattern::Path(4),
            ));
        }
        seed += 1;
    }
    v.require(
        admitted == 20,
        format!("only {admitted} triangle graphs admit a coloring"),
    );
    v.note(format!(
        "{admitted} triangle graphs admitting a coloring out of {seed} seeds"
    ));
    for n in 6..=10u64 {
        for seed in 0..20 {
            v.case("T9", &[1, n, seed]);
            v.case("T9", &[2, n, seed]);
            let g = generate(&Family::MaxOuterplanar(n as usize), Some(seed)).unwrap();
            reg.push((g.clone(), Pattern::Clique(2), Pattern::Cycle(4)));
            reg.push((g, Pattern::Clique(2), Pattern::Star(3)));
        }
    }
    v.note("100 maximal outerplanar graphs, C4 and K1,3");
    v
}

fn c9(reg: &mut Vec<Instance>) -> Verdict {
    let mut v = Verdict::new();
    let mut feasible = 0;
    let monos = [Pattern::Path(3), Pattern::Clique(3), Pattern::Star(3)];
    for i in 0..200u64 {
        let (n, percent, seed) = (4 + i % 5, 25 + 10 * (i % 5), 7000 + i);
        for (code, mono) in monos.iter().enumerate() {
            for r in [3u64, 4] {
                let c = v.case("T12", &[n, percent, seed, code as u64, r]);
                if c.computed.is_some() {
                    feasible += 1;
                    reg.push((
                        generate(&Family::Gnp(n as usize, percent as usize), Some(seed)).unwrap(),
                        mono.clone(),
                        Pattern::Path(r as usize),
                    ));
                }
            }
        }
    }
    v.note(format!(
        "200 graphs x 6 instances, {feasible} with a coloring"
    ));
    v
}

fn c10(reg: &mut Vec<Instance>) -> Verdict {
    let mut v = Verdict::new();
    let pairs = [
        (Pattern::Path(3), Pattern::Path(3)),
        (Pattern::Clique(2), Pattern::Path(4)),
        (Pattern::Clique(2), Pattern::Star(3)),
        (Pattern::Cycle(4), Pattern::Cycle(4)),
    ];
    let mut graphs = Vec::new();
    for n in 1..=6 {
        graphs.extend(read_graphs(&format!("small/all_{n:02}.g6")));
    }
    v.require(
        graphs.iter().filter(|g| g.order() == 6).count() == 156,
        "expected 156 graphs on 6 vertices",
    );
    for g in &graphs {
        for (m, r) in &pairs {
            let inst = WormInstance::new(g, m, r).unwrap();
            let out = solve(
                &inst,
                &[Goal::Exists, Goal::WMinus, Goal::WPlus, Goal::Spectrum],
            )
            .unwrap();
            let brute = brute_spectrum(g, Some(m), Some(r));
            let agree = out.exists == !brute.is_empty()
                && out.w_minus == brute.first().copied()
                && out.w_plus == brute.last().copied()
                && out.spectrum.as_ref() == Some(&brute);
            v.require(agree, format!("{} M={m} R={r}", g.to_graph6()));
            if out.exists {
                reg.push((g.clone(), m.clone(), r.clone()));
            }
        }
    }
    v.note(format!(
        "{} graphs x {} pattern pairs",
        graphs.len(),
        pairs.len()
    ));
    v
}

fn c11(reg: &[Instance]) -> Verdict {
    let mut v = Verdict::new();
    let two = num_rational::Rational64::from_integer(2);
    for m in 2..=4 {
        for n in m..=4 {
            let g = gen(Family::Grid(m, n));
            let fam = enumerate_copies(&g, &Pattern::Cycle(4)).unwrap();
            for s in 1..=7 {
                let beta = bicover_max(&fam, s);
                v.require(
                    beta <= 2 * (s - 1),
                    format!("grid {m}x{n}: beta({s}) = {beta}"),
                );
            }
            let bound = breakbound_upper(&g, &Pattern::Cycle(4), two).unwrap();
            let inst = WormInstance::new(&g, &Pattern::Cycle(4), &Pattern::Cycle(4)).unwrap();
            let wp = solve(&inst, &[Goal::WPlus]).unwrap().w_plus;
            v.require(
                wp == Some(bound as usize),
                format!("grid {m}x{n}: bound {bound}, W+ {wp:?}"),
            );
        }
    }
    let mut chains = 0;
    for (g, m, r) in reg {
        let c = bound_chain(g, m, r).unwrap();
        v.require(
            c.consistent,
            format!("chain fails on {} M={m} R={r}: {c:?}", g.to_graph6()),
        );
        chains += 1;
    }
    v.note(format!("{chains} bound chains checked"));
    v
}

fn c12() -> Verdict {
    let mut v = Verdict::new();
    for code in 0..3u64 {
        let c = v.case("T15", &[code]);
        v.note(format!("code {code}: r+ {:?}, {}", c.computed, c.detail));
    }
    v
}

fn main() {
    let mut reg: Vec<Instance> = Vec::new();
    let mut failed = Vec::new();
    let mut report = |label: &str, budget: Duration, start: Instant, mut v: Verdict| {
        let took = start.elapsed();
        v.require(took <= budget, format!("took {took:?}, budget {budget:?}"));
        let status = if v.ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {label}: {status} ({:.2?}) {}",
            took,
            v.notes.join("; ")
        );
        if !v.ok {
            failed.push(label.to_string());
        }
    };
    let min = |m: u64| Duration::from_secs(60 * m);

    let t = Instant::now();
    report("1", min(1), t, c1(&mut reg));
    let t = Instant::now();
    report("2", min(1), t, c2(&mut reg));
    let t = Instant::now();
    report("3", min(10), t, c3(&mut reg));
    let t = Instant::now();
    report("4", min(2), t, c4(&mut reg));
    let t = Instant::now();
    report("5", min(5), t, c5(&mut reg));
    let t = Instant::now();
    let (required, stretch) = c6(&mut reg);
    report("6", min(30), t, required);
    report("6 (stretch, n = 14)", min(240), t, stretch);
    let t = Instant::now();
    report("7", min(5), t, c7(&mut reg));
    let t = Instant::now();
    report("8", min(5), t, c8(&mut reg));
    let t = Instant::now();
    report("9", min(5), t, c9(&mut reg));
    let t = Instant::now();
    report("10", min(10), t, c10(&mut reg));
    let t = Instant::now();
    report("11", min(5), t, c11(&reg));
    let t = Instant::now();
    report("12", min(1), t, c12());

    if failed.is_empty() {
        println!("acceptance: all criteria pass");
    } else {
        println!("acceptance: failing criteria {}", failed.join(", "));
        std::process::exit(1);
    }
}
