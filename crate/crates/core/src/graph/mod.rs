//! Simple undirected graphs on at most 128 vertices.
//!
//! Adjacency is a symmetric bit matrix: `adj[u]` holds the neighborhood of
//! `u` as a [`VertexSet`]. Graphs are plain values; every mutating helper
//! takes `&mut self` and preserves the symmetry / no-loop invariants.

mod analyze;
mod canon;
mod generate;
mod graph6;

pub use analyze::{analyze, chromatic_coloring, chromatic_number, clique_number, StructureReport};
pub use canon::{canonical_form, is_isomorphic};
pub use generate::{generate, Family};
pub use graph6::Graph6Error;

use crate::bitset::{VertexSet, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} outside supported range 1..={MAX_VERTICES}")]
    Order(usize),
    #[error("vertex {vertex} out of range for graph of order {n}")]
    Vertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("invalid parameters for {family}: {reason}")]
    Parameter { family: String, reason: String },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::Order(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::prefix(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
        }
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::Vertex {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|s| s.len()).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    /// Subgraph induced by `keep`, relabeled to `0..|keep|` in ascending order.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph, GraphError> {
        let keep = keep.intersection(self.vertices());
        let map: Vec<usize> = keep.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(map.len())?;
        for (i, &v) in map.iter().enumerate() {
            for w in self.adj[v].intersection(keep) {
                g.adj[i].insert(index[w]);
            }
        }
        Ok(g)
    }

    /// `G - v`; fails when `G` has a single vertex.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        self.induced(self.vertices().without(v))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        let mut g = Graph::new(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { n: self.n, adj }
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let comp = self.reach(s, self.vertices());
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            next = next.intersection(within).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertices()) == self.vertices()
    }

    /// Proper 2-coloring as a side mask (vertices of side 1), if one exists.
    /// Vertex 0 of each component lands on side 0.
    pub fn bipartition(&self) -> Option<VertexSet> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.adj[v] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        stack.push(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some((0..self.n).filter(|&v| side[v] == 1).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Smallest-last (degeneracy) ordering: repeatedly strip a vertex of
    /// minimum remaining degree, then reverse. Ties go to the lower index.
    pub fn degeneracy_order(&self) -> Vec<usize> {
        let mut alive = self.vertices();
        let mut removal = Vec::with_capacity(self.n);
        while !alive.is_empty() {
            let v = alive
                .iter()
                .min_by_key(|&v| (self.adj[v].intersection(alive).len(), v))
                .expect("nonempty");
            removal.push(v);
            alive.remove(v);
        }
        removal.reverse();
        removal
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
