use super::VerifyError;
use crate::graph::Graph;
use crate::pattern::Pattern;
use crate::solver::{solve, Goal, WormInstance};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::io::BufRead;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistic {
    WPlus,
    WMinus,
    /// 1 when a coloring exists, 0 otherwise.
    Exists,
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Statistic::WPlus => "w_plus",
            Statistic::WMinus => "w_minus",
            Statistic::Exists => "exists",
        })
    }
}

impl FromStr for Statistic {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "w_plus" => Ok(Statistic::WPlus),
            "w_minus" => Ok(Statistic::WMinus),
            "exists" => Ok(Statistic::Exists),
            _ => Err(VerifyError::UnknownName {
                kind: "statistic",
                name: s.to_string(),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub bipartite: bool,
    pub connected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub graph6: String,
    pub n: usize,
    pub statistic: Statistic,
    /// `None` when the graph has no coloring.
    pub value: Option<usize>,
    pub flags: Flags,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanFailure {
    /// 1-based line number in the input.
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderSummary {
    pub n: usize,
    pub graphs: usize,
    pub no_coloring: usize,
    pub min: Option<usize>,
    pub max: Option<usize>,
    /// Graphs attaining `min`, in input order.
    pub minimizers: Vec<String>,
    pub maximizers: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub records: Vec<ScanRecord>,
    pub failures: Vec<ScanFailure>,
    pub orders: Vec<OrderSummary>,
}

/// Non-blank lines with their 1-based line numbers.
fn read_records(input: impl BufRead) -> Result<Vec<(usize, String)>, VerifyError> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if !t.is_empty() {
            out.push((i + 1, t.to_string()));
        }
    }
    Ok(out)
}

fn in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, VerifyError> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| VerifyError::Pool(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn evaluate(
    g: &Graph,
    m: &Pattern,
    r: &Pattern,
    stat: Statistic,
) -> Result<Option<usize>, VerifyError> {
    let inst = WormInstance::new(g, m, r)?;
    let goal = match stat {
        Statistic::WPlus => Goal::WPlus,
        Statistic::WMinus => Goal::WMinus,
        Statistic::Exists => Goal::Exists,
    };
    let out = solve(&inst, &[goal])?;
    Ok(match stat {
        Statistic::WPlus => out.w_plus,
        Statistic::WMinus => out.w_minus,
        Statistic::Exists => Some(out.exists as usize),
    })
}

/// Evaluates `statistic` on every record. Records are processed in
/// parallel (`jobs` threads, or the global pool) and reported in input
/// order; undecodable or oversized records become failures.
pub fn scan_stream(
    input: impl BufRead,
    m: &Pattern,
    r: &Pattern,
    statistic: Statistic,
    jobs: Option<usize>,
) -> Result<ScanReport, VerifyError> {
    let lines = read_records(input)?;
    let results: Vec<Result<ScanRecord, ScanFailure>> = in_pool(jobs, || {
        lines
            .par_iter()
            .map(|(line, text)| {
                let fail = |e: VerifyError| ScanFailure {
                    line: *line,
                    message: e.to_string(),
                };
                let g = Graph::from_graph6(text).map_err(|e| fail(e.into()))?;
                let value = evaluate(&g, m, r, statistic).map_err(fail)?;
                Ok(ScanRecord {
                    graph6: text.clone(),
                    n: g.order(),
                    statistic,
                    value,
                    flags: Flags {
                        bipartite: g.is_bipartite(),
                        connected: g.is_connected(),
                    },
                })
            })
            .collect()
    })?;

    let mut records = Vec::new();
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok(rec) => records.push(rec),
            Err(f) => failures.push(f),
        }
    }
    let orders = summarize(&records);
    Ok(ScanReport {
        records,
        failures,
        orders,
    })
}

fn summarize(records: &[ScanRecord]) -> Vec<OrderSummary> {
    let mut by_order: BTreeMap<usize, Vec<&ScanRecord>> = BTreeMap::new();
    for r in records {
        by_order.entry(r.n).or_default().push(r);
    }
    by_order
        .into_iter()
        .map(|(n, recs)| {
            let values: Vec<usize> = recs.iter().filter_map(|r| r.value).collect();
            let min = values.iter().copied().min();
            let max = values.iter().copied().max();
            let attaining = |target: Option<usize>| -> Vec<String> {
                recs.iter()
                    .filter(|r| target.is_some() && r.value == target)
                    .map(|r| r.graph6.clone())
                    .collect()
            };
            OrderSummary {
                n,
                graphs: recs.len(),
                no_coloring: recs.len() - values.len(),
                min,
                max,
                minimizers: attaining(min),
                maximizers: attaining(max),
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Conjecture {
    /// `W+(G; K_2, P_4) <= n/2 + 1` on connected cubic graphs, with equality
    /// exactly for bipartite ones.
    #[serde(rename = "cubic_P4")]
    CubicP4,
    /// `W+(G; K_2, C_4) >= n/2` on connected cubic graphs.
    #[serde(rename = "cubic_C4")]
    CubicC4,
}

impl FromStr for Conjecture {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cubic_P4" => Ok(Conjecture::CubicP4),
            "cubic_C4" => Ok(Conjecture::CubicC4),
            _ => Err(VerifyError::UnknownName {
                kind: "conjecture",
                name: s.to_string(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeFinding {
    pub graph6: String,
    pub n: usize,
    pub value: usize,
    pub bipartite: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub conjecture: Conjecture,
    pub scanned: usize,
    pub orders: Vec<usize>,
    /// Records that did not decode or are not connected cubic graphs.
    pub skipped: Vec<ScanFailure>,
    /// Graphs with no coloring at all; the conjecture says nothing there.
    pub no_coloring: Vec<String>,
    /// Graphs meeting the conjectured bound with equality.
    pub equality: Vec<ProbeFinding>,
    pub counterexamples: Vec<ProbeFinding>,
    pub verdict: String,
}

pub fn probe_conjecture(
    conjecture: Conjecture,
    input: impl BufRead,
    jobs: Option<usize>,
) -> Result<ProbeReport, VerifyError> {
    let r = match conjecture {
        Conjecture::CubicP4 => Pattern::Path(4),
        Conjecture::CubicC4 => Pattern::Cycle(4),
    };
    let lines = read_records(input)?;
    type Row = Result<(String, usize, Option<usize>, bool), ScanFailure>;
    let rows: Vec<Row> = in_pool(jobs, || {
        lines
            .par_iter()
            .map(|(line, text)| {
                let fail = |message: String| ScanFailure {
                    line: *line,
                    message,
                };
                let g = Graph::from_graph6(text).map_err(|e| fail(e.to_string()))?;
                if g.degrees().iter().any(|&d| d != 3) || !g.is_connected() {
                    return Err(fail("not a connected cubic graph".into()));
                }
                let v = evaluate(&g, &Pattern::Clique(2), &r, Statistic::WPlus)
                    .map_err(|e| fail(e.to_string()))?;
                Ok((text.clone(), g.order(), v, g.is_bipartite()))
            })
            .collect()
    })?;

    let mut report = ProbeReport {
        conjecture,
        scanned: 0,
        orders: Vec::new(),
        skipped: Vec::new(),
        no_coloring: Vec::new(),
        equality: Vec::new(),
        counterexamples: Vec::new(),
        verdict: String::new(),
    };
    for row in rows {
        let (graph6, n, value, bipartite) = match row {
            Ok(x) => x,
            Err(f) => {
                report.skipped.push(f);
                continue;
            }
        };
        report.scanned += 1;
        if !report.orders.contains(&n) {
            report.orders.push(n);
        }
        let Some(value) = value else {
            report.no_coloring.push(graph6);
            continue;
        };
        let (bound, violated) = match conjecture {
            Conjecture::CubicP4 => {
                let b = n / 2 + 1;
                (b, value > b || (value == b) != bipartite)
            }
            Conjecture::CubicC4 => (n / 2, value < n / 2),
        };
        let finding = ProbeFinding {
            graph6,
            n,
            value,
            bipartite,
        };
        if violated {
            report.counterexamples.push(finding);
        } else if value == bound {
            report.equality.push(finding);
        }
    }
    report.orders.sort_unstable();
    report.verdict = match (
        report.scanned,
        report.counterexamples.len(),
        report.orders.last(),
    ) {
        (0, ..) => "no records scanned".to_string(),
        (_, 0, Some(top)) => format!("no counterexample up to order {top}"),
        (_, k, _) => format!("{k} counterexample(s) found"),
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn g6(f: Family) -> String {
        generate(&f, None).unwrap().to_graph6()
    }

    #[test]
    fn order_six_cubic_claw() {
        let text = format!(
            "{}\n{}\n",
            g6(Family::Prism(3)),
            g6(Family::CompleteBipartite(3, 3))
        );
        let report = scan_stream(
            text.as_bytes(),
            &Pattern::Clique(2),
            &Pattern::Star(3),
            Statistic::WPlus,
            Some(2),
        )
        .unwrap();
        assert_eq!(report.records.len(), 2);
        assert_eq!(report.orders[0].min, Some(3));
        assert_eq!(report.orders[0].minimizers, vec![g6(Family::Prism(3))]);
        assert_eq!(report.records[1].value, Some(4));
    }

    #[test]
    fn bad_lines_are_reported_with_numbers() {
        let text = format!("{}\n\n!!\n{}\n", g6(Family::Cycle(4)), g6(Family::Path(3)));
        let report = scan_stream(
            text.as_bytes(),
            &Pattern::Clique(2),
            &Pattern::Path(3),
            Statistic::Exists,
            None,
        )
        .unwrap();
        assert_eq!(report.records.len(), 2);
        assert_eq!(report.failures.len(), 1);
        assert_eq!(report.failures[0].line, 3);
    }

    #[test]
    fn probes() {
        let empty = probe_conjecture(Conjecture::CubicP4, "".as_bytes(), None).unwrap();
        assert_eq!(empty.verdict, "no records scanned");
        let text = format!(
            "{}\n{}\n{}\n",
            g6(Family::Prism(3)),
            g6(Family::Moebius(8)),
            g6(Family::Cycle(5))
        );
        let report = probe_conjecture(Conjecture::CubicC4, text.as_bytes(), None).unwrap();
        assert!(report.counterexamples.is_empty());
        assert_eq!(report.equality.len(), 2);
        assert_eq!(report.skipped.len(), 1);
        assert_eq!(report.verdict, "no counterexample up to order 8");
    }
}
