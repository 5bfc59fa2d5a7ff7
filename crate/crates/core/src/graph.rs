//! Simple undirected graphs stored as per-vertex adjacency bitsets.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj, name: None })
    }

    /// Builds a graph from single-word adjacency masks (`n <= 64`). The masks
    /// must already be symmetric and loop-free.
    pub fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        assert!((1..=64).contains(&n));
        let adj: Vec<_> = masks
            .iter()
            .map(|&m| VertexSet::from_mask(n, m))
            .collect();
        debug_assert!((0..n).all(|v| !adj[v].contains(v)
            && adj[v].iter().all(|u| adj[u].contains(v))));
        Graph { n, adj, name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Adjacency as single-word masks, when `n <= 64`.
    pub fn masks(&self) -> Option<Vec<u64>> {
        self.adj.iter().map(VertexSet::as_mask).collect()
    }

    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|v| {
                let mut c = self.adj[v].complement();
                c.remove(v);
                c
            })
            .collect();
        Graph {
            n: self.n,
            adj,
            name: self.name.as_ref().map(|s| format!("complement({s})")),
        }
    }

    /// Vertices reachable from vertex 0.
    fn reach_from_zero(&self) -> VertexSet {
        let mut seen = VertexSet::empty(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for u in self.adj[v].iter() {
                if !seen.contains(u) {
                    seen.insert(u);
                    stack.push(u);
                }
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach_from_zero().len() == self.n
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n && self.is_connected()
    }

    /// The two colour classes of a proper 2-colouring, or `None` when the
    /// graph has an odd cycle. The class containing vertex 0 comes first.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut colour = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for u in self.adj[v].iter() {
                    if colour[u] == u8::MAX {
                        colour[u] = 1 - colour[v];
                        stack.push(u);
                    } else if colour[u] == colour[v] {
                        return None;
                    }
                }
            }
        }
        let a = VertexSet::from_indices(self.n, (0..self.n).filter(|&v| colour[v] == 0));
        let b = a.complement();
        Some((a, b))
    }

    pub fn leaves(&self) -> VertexSet {
        VertexSet::from_indices(self.n, (0..self.n).filter(|&v| self.degree(v) == 1))
    }

    /// Vertices adjacent to at least one leaf. In `P_2` both vertices are
    /// leaves and each supports the other.
    pub fn support_vertices(&self) -> VertexSet {
        let mut s = VertexSet::empty(self.n);
        for leaf in self.leaves().iter() {
            if let Some(v) = self.adj[leaf].first() {
                s.insert(v);
            }
        }
        s
    }

    pub fn display_name(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("graph(n={}, m={})", self.n, self.edge_count()))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}
