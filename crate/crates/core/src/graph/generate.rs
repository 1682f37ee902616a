//! Generators for the graph families the workbench needs.
//!
//! Vertex labelings are fixed and documented per family so that explicit
//! colorings (prism, Möbius ladder) can be written against them.

use super::{Graph, GraphError};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `P_n`, vertices `0..n` in path order.
    Path(usize),
    /// `C_n`, vertices `0..n` in cyclic order.
    Cycle(usize),
    Complete(usize),
    /// `K_{1,r}`: center 0, leaves `1..=r`.
    Star(usize),
    /// `K_{a,b}`: sides `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
    /// `P_m × P_n`: vertex `(i, j)` is `i * n + j`.
    Grid(usize, usize),
    /// `C_m × K_2`, order `2m`: `u_i = i`, `v_i = m + i`.
    Prism(usize),
    /// Möbius ladder of even order `n`: cycle `0..n` plus chords `i ~ i + n/2`.
    Moebius(usize),
    /// Base graph on `0..k` plus pendant `k + v` attached to each `v`.
    Corona(Box<Family>),
    /// Random 2-tree (seeded).
    TwoTree(usize),
    /// Random triangulated convex polygon (seeded); boundary is `0..n` in order.
    MaxOuterplanar(usize),
    /// `GP(n, k)`: outer `u_i = i`, inner `v_i = n + i`, spokes `u_i ~ v_i`.
    GeneralizedPetersen(usize, usize),
    /// Ring of `t` copies of `K_{3,3} - e` (order `6t`, cubic).
    Bracelet(usize),
    /// Random connected graph in which every vertex lies on a triangle (seeded).
    TriangleWeb(usize),
    /// Erdős–Rényi `G(n, p)` with `p = percent / 100` (seeded).
    Gnp(usize, usize),
}

impl Family {
    /// Builds a family from its name and integer parameters.
    /// `corona` is not accepted here; wrap another family instead.
    pub fn from_name(name: &str, params: &[usize]) -> Result<Family, GraphError> {
        let want = |k: usize| -> Result<(), GraphError> {
            if params.len() == k {
                Ok(())
            } else {
                Err(param_err(
                    name,
                    format!("expected {k} parameter(s), got {}", params.len()),
                ))
            }
        };
        let fam = match name {
            "path" => {
                want(1)?;
                Family::Path(params[0])
            }
            "cycle" => {
                want(1)?;
                Family::Cycle(params[0])
            }
            "complete" => {
                want(1)?;
                Family::Complete(params[0])
            }
            "star" => {
                want(1)?;
                Family::Star(params[0])
            }
            "biclique" | "complete_bipartite" => {
                want(2)?;
                Family::CompleteBipartite(params[0], params[1])
            }
            "grid" => {
                want(2)?;
                Family::Grid(params[0], params[1])
            }
            "prism" => {
                want(1)?;
                Family::Prism(params[0])
            }
            "moebius" => {
                want(1)?;
                Family::Moebius(params[0])
            }
            "two_tree" => {
                want(1)?;
                Family::TwoTree(params[0])
            }
            "max_outerplanar" => {
                want(1)?;
                Family::MaxOuterplanar(params[0])
            }
            "generalized_petersen" => {
                want(2)?;
                Family::GeneralizedPetersen(params[0], params[1])
            }
            "bracelet" => {
                want(1)?;
                Family::Bracelet(params[0])
            }
            "triangle_web" => {
                want(1)?;
                Family::TriangleWeb(params[0])
            }
            "gnp" => {
                want(2)?;
                Family::Gnp(params[0], params[1])
            }
            _ => return Err(param_err(name, "unknown family".into())),
        };
        Ok(fam)
    }

    pub fn is_randomized(&self) -> bool {
        match self {
            Family::TwoTree(_)
            | Family::MaxOuterplanar(_)
            | Family::TriangleWeb(_)
            | Family::Gnp(..) => true,
            Family::Corona(inner) => inner.is_randomized(),
            _ => false,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::Star(_) => "star",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::Grid(..) => "grid",
            Family::Prism(_) => "prism",
            Family::Moebius(_) => "moebius",
            Family::Corona(_) => "corona",
            Family::TwoTree(_) => "two_tree",
            Family::MaxOuterplanar(_) => "max_outerplanar",
            Family::GeneralizedPetersen(..) => "generalized_petersen",
            Family::Bracelet(_) => "bracelet",
            Family::TriangleWeb(_) => "triangle_web",
            Family::Gnp(..) => "gnp",
        }
    }
}

/// `name:params`, with `corona:<inner>` for coronas.
impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<usize> = match self {
            Family::Corona(inner) => return write!(f, "corona:{inner}"),
            Family::Path(a)
            | Family::Cycle(a)
            | Family::Complete(a)
            | Family::Star(a)
            | Family::Prism(a)
            | Family::Moebius(a)
            | Family::TwoTree(a)
            | Family::MaxOuterplanar(a)
            | Family::Bracelet(a)
            | Family::TriangleWeb(a) => vec![*a],
            Family::CompleteBipartite(a, b)
            | Family::Grid(a, b)
            | Family::GeneralizedPetersen(a, b)
            | Family::Gnp(a, b) => vec![*a, *b],
        };
        let joined: Vec<String> = params.iter().map(|p| p.to_string()).collect();
        write!(f, "{}:{}", self.name(), joined.join(","))
    }
}

fn param_err(family: &str, reason: String) -> GraphError {
    GraphError::Parameter {
        family: family.to_string(),
        reason,
    }
}

fn require(cond: bool, family: &str, reason: &str) -> Result<(), GraphError> {
    if cond {
        Ok(())
    } else {
        Err(param_err(family, reason.to_string()))
    }
}

/// Generates a family member. Randomized families need a seed and are
/// reproducible for a given seed; deterministic families ignore it.
pub fn generate(family: &Family, seed: Option<u64>) -> Result<Graph, GraphError> {
    let name = family.name();
    let rng = || -> Result<ChaCha8Rng, GraphError> {
        seed.map(ChaCha8Rng::seed_from_u64)
            .ok_or_else(|| param_err(name, "randomized family requires a seed".into()))
    };
    match *family {
        Family::Path(n) => {
            require(n >= 1, name, "n >= 1")?;
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle(n) => {
            require(n >= 3, name, "n >= 3")?;
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Complete(n) => {
            require(n >= 1, name, "n >= 1")?;
            Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        }
        Family::Star(r) => {
            require(r >= 1, name, "r >= 1")?;
            Graph::from_edges(r + 1, (1..=r).map(|i| (0, i)))
        }
        Family::CompleteBipartite(a, b) => {
            require(a >= 1 && b >= 1, name, "both sides nonempty")?;
            Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
        }
        Family::Grid(m, n) => {
            require(m >= 1 && n >= 1, name, "m, n >= 1")?;
            let mut edges = Vec::new();
            for i in 0..m {
                for j in 0..n {
                    let v = i * n + j;
                    if j + 1 < n {
                        edges.push((v, v + 1));
                    }
                    if i + 1 < m {
                        edges.push((v, v + n));
                    }
                }
            }
            Graph::from_edges(m * n, edges)
        }
        Family::Prism(m) => {
            require(m >= 3, name, "m >= 3")?;
            let mut edges = Vec::new();
            for i in 0..m {
                let j = (i + 1) % m;
                edges.push((i, j));
                edges.push((m + i, m + j));
                edges.push((i, m + i));
            }
            Graph::from_edges(2 * m, edges)
        }
        Family::Moebius(n) => {
            require(n >= 4 && n % 2 == 0, name, "n even and >= 4")?;
            let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            edges.extend((0..n / 2).map(|i| (i, i + n / 2)));
            Graph::from_edges(n, edges)
        }
        Family::Corona(ref inner) => {
            let base = generate(inner, seed)?;
            let k = base.order();
            let mut g = Graph::new(2 * k)?;
            for (u, v) in base.edges() {
                g.add_edge(u, v)?;
            }
            for v in 0..k {
                g.add_edge(v, k + v)?;
            }
            Ok(g)
        }
        Family::TwoTree(n) => {
            require(n >= 2, name, "n >= 2")?;
            let mut rng = rng()?;
            let mut g = Graph::new(n)?;
            g.add_edge(0, 1)?;
            let mut edges = vec![(0, 1)];
            for v in 2..n {
                let (a, b) = edges[rng.gen_range(0..edges.len())];
                g.add_edge(v, a)?;
                g.add_edge(v, b)?;
                edges.push((a, v));
                edges.push((b, v));
            }
            Ok(g)
        }
        Family::MaxOuterplanar(n) => {
            require(n >= 3, name, "n >= 3")?;
            let mut rng = rng()?;
            let mut g = Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?;
            let mut polygon: Vec<usize> = (0..n).collect();
            while polygon.len() > 3 {
                let k = polygon.len();
                let ear = rng.gen_range(0..k);
                let prev = polygon[(ear + k - 1) % k];
                let next = polygon[(ear + 1) % k];
                g.add_edge(prev, next)?;
                polygon.remove(ear);
            }
            Ok(g)
        }
        Family::GeneralizedPetersen(n, k) => {
            require(n >= 3, name, "n >= 3")?;
            require(k >= 1 && 2 * k < n, name, "1 <= k < n/2")?;
            let mut edges = Vec::new();
            for i in 0..n {
                edges.push((i, (i + 1) % n));
                edges.push((i, n + i));
                edges.push((n + i, n + (i + k) % n));
            }
            Graph::from_edges(2 * n, edges)
        }
        Family::Bracelet(t) => {
            require(t >= 2, name, "t >= 2")?;
            // Copy c: a_0..a_2 = 6c..6c+2, b_0..b_2 = 6c+3..6c+5, edge a_0 b_0 removed.
            let mut edges = Vec::new();
            for c in 0..t {
                let base = 6 * c;
                for i in 0..3 {
                    for j in 0..3 {
                        if i != 0 || j != 0 {
                            edges.push((base + i, base + 3 + j));
                        }
                    }
                }
                let next = 6 * ((c + 1) % t);
                edges.push((base, next + 3));
            }
            Graph::from_edges(6 * t, edges)
        }
        Family::TriangleWeb(n) => {
            require(n >= 3, name, "n >= 3")?;
            let mut rng = rng()?;
            let mut g = Graph::new(n)?;
            g.add_edge(0, 1)?;
            g.add_edge(1, 2)?;
            g.add_edge(0, 2)?;
            let mut size = 3;
            while size < n {
                let room = n - size;
                let op = rng.gen_range(0..3usize).min(room - 1);
                match op {
                    0 => {
                        let edges: Vec<(usize, usize)> = g.edges().collect();
                        let &(a, b) = edges.choose(&mut rng).expect("has edges");
                        g.add_edge(size, a)?;
                        g.add_edge(size, b)?;
                        size += 1;
                    }
                    1 => {
                        let w = rng.gen_range(0..size);
                        g.add_edge(size, size + 1)?;
                        g.add_edge(size, w)?;
                        g.add_edge(size + 1, w)?;
                        size += 2;
                    }
                    _ => {
                        let w = rng.gen_range(0..size);
                        g.add_edge(size, size + 1)?;
                        g.add_edge(size + 1, size + 2)?;
                        g.add_edge(size, size + 2)?;
                        g.add_edge(size + rng.gen_range(0..3), w)?;
                        size += 3;
                    }
                }
            }
            let extra = rng.gen_range(0..=n / 3);
            for _ in 0..extra {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u != v {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g)
        }
        Family::Gnp(n, percent) => {
            require(n >= 1, name, "n >= 1")?;
            require(percent <= 100, name, "percent <= 100")?;
            let mut rng = rng()?;
            let mut g = Graph::new(n)?;
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_range(0..100) < percent {
                        g.add_edge(i, j)?;
                    }
                }
            }
            Ok(g)
        }
    }
}
