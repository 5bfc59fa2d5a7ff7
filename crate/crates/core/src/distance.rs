//! All-pairs hop distances by breadth-first search.

use std::collections::VecDeque;

use crate::error::Result;
use crate::graph::Graph;

/// Hop distances between every pair of vertices of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    diameter: u32,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }
}

/// BFS from every vertex. Fails on disconnected graphs.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    g.require_connected()?;
    let n = g.order();
    let d = match g.masks() {
        Some(masks) => small_bfs(&masks),
        None => queue_bfs(g),
    };
    let diameter = d.iter().copied().max().unwrap_or(0);
    Ok(DistanceMatrix { n, d, diameter })
}

// Frontier expansion on single-word masks.
fn small_bfs(adj: &[u64]) -> Vec<u32> {
    let n = adj.len();
    let mut d = vec![0u32; n * n];
    for s in 0..n {
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        let mut depth = 0;
        while frontier != 0 {
            depth += 1;
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            next &= !seen;
            seen |= next;
            let mut m = next;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                d[s * n + v] = depth;
            }
            frontier = next;
        }
    }
    d
}

fn queue_bfs(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut d = vec![u32::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let dv = row[v];
            for u in g.neighbors(v).iter() {
                if row[u] == u32::MAX {
                    row[u] = dv + 1;
                    queue.push_back(u);
                }
            }
        }
    }
    d
}
