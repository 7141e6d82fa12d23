//! Simple undirected graphs on densely 0-indexed vertices, plus the
//! structural predicates the verification suite conditions on.

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v} rejected")]
    SelfLoop { v: usize },
    #[error("duplicate edge ({u}, {v}) rejected")]
    DuplicateEdge { u: usize, v: usize },
    #[error("({u}, {v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("graph has no edges")]
    NoEdges,
    #[error("canonical form supports n <= {max}, got n = {n}")]
    TooLargeForCanonical { n: usize, max: usize },
}

/// A simple undirected graph: no loops, no multi-edges, adjacency kept
/// symmetric. The edge list is derived from the adjacency sets, so the two
/// views cannot drift apart; edges always iterate in lexicographic order
/// with u < v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Graph {
        Graph {
            adj: vec![BTreeSet::new(); n],
            m: 0,
        }
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n() })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop { v });
        }
        if self.adj[u].contains(&v) {
            let (u, v) = (u.min(v), u.max(v));
            return Err(GraphError::DuplicateEdge { u, v });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
        debug_assert!(self.degree_sum() == 2 * self.m);
        Ok(())
    }

    /// Deletes an edge, keeping all vertices.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.adj[u].contains(&v) {
            return Err(GraphError::NotAnEdge { u, v });
        }
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
        self.m -= 1;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    /// Degree of `v`. Panics if `v` is out of range.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn degree_sum(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// Edges as (u, v) with u < v, lexicographically ordered.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// True iff every vertex is reachable from vertex 0; the empty graph and
    /// K_1 count as connected so enumeration pipelines need no special case.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == n
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m == self.n() - 1 && self.is_connected()
    }

    /// True iff no two adjacent vertices share a neighbor.
    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .all(|(u, v)| self.adj[u].intersection(&self.adj[v]).next().is_none())
    }

    /// Returns the part sizes (a, b) with a <= b if this graph is a complete
    /// bipartite graph K_{a,b}, i.e. connected, 2-colorable, and carrying
    /// every cross edge. The single vertex reports (0, 1): it is the one
    /// connected graph whose bipartition has an empty side, and treating it
    /// as complete bipartite keeps the equality characterizations total on
    /// n >= 1. The empty graph reports None.
    pub fn is_complete_bipartite(&self) -> Option<(usize, usize)> {
        let n = self.n();
        if n == 0 || !self.is_connected() {
            return None;
        }
        let mut color = vec![u8::MAX; n];
        color[0] = 0;
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    stack.push(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
        let a = color.iter().filter(|&&c| c == 0).count();
        let b = n - a;
        if self.m == a * b {
            Some((a.min(b), a.max(b)))
        } else {
            None
        }
    }

    /// Relabels vertices: vertex v becomes perm[v]. perm must be a
    /// permutation of 0..n.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n());
        let mut g = Graph::new(self.n());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).expect("permutation relabel");
        }
        g
    }
}
