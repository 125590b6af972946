//! Finite simple undirected graphs.
//!
//! Vertices are the dense integers `0..n`. Adjacency is kept twice: as one
//! bitset row per vertex (constant-time edge test, word-parallel set
//! operations for the game solver) and as sorted neighbor lists.
//! Self-loops are never stored; a piece "staying put" is modeled by the
//! closed neighborhood, not by the edge relation.

pub(crate) mod io;
mod iso;
mod named;
mod sample;
mod vertex_set;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use named::{named, NamedGraph};
pub use sample::{gnp_sample, gnpn_sample, PFamily};
pub use vertex_set::VertexSet;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("edge probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
    #[error("invalid edge-probability family: {0}")]
    InvalidFamily(String),
    #[error("unknown named graph `{0}`")]
    UnknownName(String),
    #[error("pattern must be connected")]
    PatternDisconnected,
    #[error("pattern has {0} vertices, at most 8 are supported")]
    PatternTooLarge(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Number of 64-bit words needed for a bitset over `n` elements.
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// Immutable finite simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Largest shortest-path distance, or `Infinite` for disconnected graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Self::from_edges(n, std::iter::empty())
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges)
    }

    /// Builds a graph from an edge list. Repeated edges collapse into one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let words = words_for(n);
        let mut rows = vec![0u64; n * words];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            rows[u * words + v / 64] |= 1 << (v % 64);
            rows[v * words + u / 64] |= 1 << (u % 64);
        }
        Ok(Self::from_rows(n, rows))
    }

    /// `rows` must be symmetric with a zero diagonal.
    pub(crate) fn from_rows(n: usize, rows: Vec<u64>) -> Graph {
        let words = words_for(n);
        debug_assert_eq!(rows.len(), n * words);
        let mut adj = Vec::with_capacity(n);
        let mut twice_edges = 0;
        for u in 0..n {
            let row = &rows[u * words..(u + 1) * words];
            let list: Vec<usize> = vertex_set::iter_bits(row).collect();
            twice_edges += list.len();
            adj.push(list);
        }
        Graph {
            n,
            words,
            rows,
            adj,
            edge_count: twice_edges / 2,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Words per bitset row.
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Open-neighborhood bitset row of `v`.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// 𝖭(v): every vertex adjacent to `v`. Never contains `v`.
    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_words(self.n, self.row(v).to_vec()))
    }

    /// 𝖭(v) ∪ {v}: the squares a piece on `v` may occupy after one move.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        let mut set = self.open_neighborhood(v)?;
        set.insert(v);
        Ok(set)
    }

    /// Copy of this graph with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(self.n, self.edges().chain(std::iter::once((u, v))))
    }

    /// Copy of this graph with the edge `{u, v}` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let edges = self
            .edges()
            .filter(|&e| e != (u.min(v), u.max(v)))
            .collect::<Vec<_>>();
        Graph::from_edges(self.n, edges).expect("subgraph of a valid graph")
    }

    pub fn complement(&self) -> Graph {
        let mut rows = vec![0u64; self.n * self.words];
        for u in 0..self.n {
            let dst = &mut rows[u * self.words..(u + 1) * self.words];
            for (i, w) in dst.iter_mut().enumerate() {
                *w = !self.rows[u * self.words + i];
            }
            vertex_set::mask_tail(dst, self.n);
            dst[u / 64] &= !(1 << (u % 64));
        }
        Graph::from_rows(self.n, rows)
    }

    /// Induced subgraph on `vertices`, relabeled to `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(vertices.len(), edges)
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.bfs(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }

    /// Number of connected components of `self` isomorphic to `pattern`.
    pub fn count_tree_components(&self, pattern: &Graph) -> Result<usize, GraphError> {
        if pattern.n > 8 {
            return Err(GraphError::PatternTooLarge(pattern.n));
        }
        if !pattern.is_connected() {
            return Err(GraphError::PatternDisconnected);
        }
        let mut count = 0;
        for comp in self.components() {
            if comp.len() != pattern.n {
                continue;
            }
            let sub = self.induced(&comp)?;
            if iso::isomorphic(&sub, pattern) {
                count += 1;
            }
        }
        Ok(count)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neighborhoods_on_c4() {
        let c4 = named("c4").unwrap();
        assert_eq!(c4.open_neighborhood(0).unwrap().to_vec(), vec![1, 3]);
        assert_eq!(c4.closed_neighborhood(0).unwrap().to_vec(), vec![0, 1, 3]);
        assert!(c4.open_neighborhood(4).is_err());
    }

    #[test]
    fn neighborhoods_on_empty_and_complete() {
        let e = Graph::empty(5).unwrap();
        assert!(e.open_neighborhood(3).unwrap().is_empty());
        assert_eq!(e.closed_neighborhood(3).unwrap().to_vec(), vec![3]);
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.open_neighborhood(2).unwrap().to_vec(), vec![0, 1, 3, 4]);
    }

    #[test]
    fn complement_of_k5_and_c4() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.complement().edge_count(), 0);
        let c4 = named("c4").unwrap();
        let diag: Vec<_> = c4.complement().edges().collect();
        assert_eq!(diag, vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn complement_spans_word_boundaries() {
        let g = Graph::from_edges(130, [(0, 129), (63, 64)]).unwrap();
        let c = g.complement();
        assert_eq!(c.edge_count(), 130 * 129 / 2 - 2);
        assert!(!c.has_edge(0, 129));
        assert!(c.has_edge(0, 128));
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn components_and_diameter() {
        let petersen = named("petersen").unwrap();
        assert!(petersen.is_connected());
        assert_eq!(petersen.diameter(), Diameter::Finite(2));

        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.components().len(), 2);
        assert_eq!(two_edges.diameter(), Diameter::Infinite);

        assert_eq!(named("p4").unwrap().diameter(), Diameter::Finite(3));
    }

    #[test]
    fn tree_component_counts() {
        let g = Graph::from_edges(5, [(3, 4)]).unwrap();
        let point = Graph::empty(1).unwrap();
        assert_eq!(g.count_tree_components(&point).unwrap(), 3);

        let p3 = named("path(3)").unwrap();
        let two_p3 = Graph::from_edges(6, [(0, 1), (1, 2), (3, 5), (5, 4)]).unwrap();
        assert_eq!(two_p3.count_tree_components(&p3).unwrap(), 2);

        let c4 = named("c4").unwrap();
        assert_eq!(c4.count_tree_components(&point).unwrap(), 0);
    }

    #[test]
    fn tree_component_pattern_errors() {
        let g = named("c4").unwrap();
        let big = named("path(9)").unwrap();
        assert_eq!(g.count_tree_components(&big), Err(GraphError::PatternTooLarge(9)));
        let split = Graph::empty(2).unwrap();
        assert_eq!(g.count_tree_components(&split), Err(GraphError::PatternDisconnected));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::empty(0), Err(GraphError::NoVertices));
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }
}
