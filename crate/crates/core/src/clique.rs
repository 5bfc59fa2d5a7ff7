//! Exact clique number by branch-and-bound with a greedy colouring bound.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Clique number of `g`.
pub fn omega(g: &Graph) -> usize {
    max_clique(g).len()
}

/// Independence number of `g`, computed as the clique number of the complement.
pub fn alpha(g: &Graph) -> usize {
    omega(&g.complement())
}

/// A maximum clique of `g`.
pub fn max_clique(g: &Graph) -> VertexSet {
    let n = g.order();
    let mut search = Search {
        g,
        best: VertexSet::empty(n),
        current: Vec::new(),
    };
    search.expand(VertexSet::full(n));
    search.best
}

struct Search<'a> {
    g: &'a Graph,
    best: VertexSet,
    current: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, mut cand: VertexSet) {
        let (order, colours) = colour_sort(self.g, &cand);
        for idx in (0..order.len()).rev() {
            if self.current.len() + colours[idx] <= self.best.len() {
                return;
            }
            let v = order[idx];
            self.current.push(v);
            let next = cand.intersection(self.g.neighbors(v));
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = VertexSet::from_indices(self.g.order(), self.current.iter().copied());
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand.remove(v);
        }
    }
}

/// Greedy sequential colouring of the candidates; returns vertices in
/// non-decreasing colour order with their colour numbers (1-based).
fn colour_sort(g: &Graph, cand: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut uncoloured = cand.clone();
    let mut order = Vec::with_capacity(cand.len());
    let mut colours = Vec::with_capacity(cand.len());
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut avail = uncoloured.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            avail = avail.difference(g.neighbors(v));
            uncoloured.remove(v);
            order.push(v);
            colours.push(colour);
        }
    }
    (order, colours)
}
