//! Small-graph corpora: labeled connected graphs, unlabeled free trees and
//! graph6 streams.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::parse_graph6;

/// Largest order for internal labeled enumeration.
pub const CONNECTED_LIMIT: usize = 7;
/// Default largest order for tree enumeration.
pub const TREE_LIMIT: usize = 14;

/// Graph whose edges are the set bits of `mask`, bit `y(y-1)/2 + x` standing
/// for the edge `{x, y}` with `x < y`.
pub fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
    let mut adj = vec![0u64; n];
    let mut bit = 0;
    for y in 1..n {
        for x in 0..y {
            if mask >> bit & 1 == 1 {
                adj[x] |= 1 << y;
                adj[y] |= 1 << x;
            }
            bit += 1;
        }
    }
    Graph::from_masks(&adj)
}

fn mask_connected(n: usize, mask: u64) -> bool {
    let mut adj = [0u64; CONNECTED_LIMIT];
    let mut bit = 0;
    for y in 1..n {
        for x in 0..y {
            if mask >> bit & 1 == 1 {
                adj[x] |= 1 << y;
                adj[y] |= 1 << x;
            }
            bit += 1;
        }
    }
    let full = (1u64 << n) - 1;
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full
}

/// Number of edge masks for labeled graphs of order `n`.
pub fn edge_mask_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Edge masks of the connected labeled graphs in `range`, ascending.
pub fn connected_masks_in(n: usize, range: std::ops::Range<u64>) -> impl Iterator<Item = u64> {
    range.filter(move |&m| mask_connected(n, m))
}

/// Every labeled connected graph on `n` vertices, once each, in order of
/// edge mask.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > CONNECTED_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: CONNECTED_LIMIT,
        });
    }
    Ok(connected_masks_in(n, 0..edge_mask_count(n)).map(move |m| graph_from_edge_mask(n, m)))
}

/// One representative of each unlabeled tree on `n` vertices.
///
/// Successor-based generation of level sequences (Wright, Richmond, Odlyzko
/// and McKay); trees come out in a fixed order.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    enumerate_trees_up_to(n, TREE_LIMIT)
}

pub fn enumerate_trees_up_to(n: usize, limit: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    if n == 1 {
        return Ok(vec![Graph::build(1, &[])?]);
    }
    let mut out = Vec::new();
    let mut layout: Option<Vec<usize>> = Some((0..=n / 2).chain(1..n.div_ceil(2)).collect());
    while let Some(l) = layout {
        let t = next_tree(l);
        match t {
            Some(t) => {
                out.push(layout_to_graph(&t));
                layout = next_rooted_tree(&t, None);
            }
            None => layout = None,
        }
    }
    Ok(out)
}

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let lh = left.iter().copied().max().unwrap_or(0);
    let rh = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rh >= lh;
    if valid && rh == lh && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
        valid = false;
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut new = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&new);
        let h = new_left.iter().copied().max().unwrap_or(0);
        let len = new.len();
        for (j, v) in (1..=h + 1).enumerate() {
            new[len - (h + 1) + j] = v;
        }
    }
    Some(new)
}

fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|(_, &v)| v == 1)
        .nth(1)
        .map(|(i, _)| i)
        .unwrap_or(layout.len());
    let left = layout[1..m].iter().map(|v| v - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= level {
                stack.pop();
            } else {
                edges.push((j, i));
                break;
            }
        }
        stack.push(i);
    }
    Graph::build(layout.len(), &edges).expect("level sequence is a tree")
}

/// Reads one graph6 record per non-empty line.
pub fn graph6_stream<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader.lines().filter_map(|line| match line {
        Err(e) => Some(Err(Error::Graph6(e.to_string()))),
        Ok(l) if l.trim().is_empty() => None,
        Ok(l) => Some(parse_graph6(l.trim())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_connected(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
        assert!(enumerate_connected(8).is_err());
    }

    #[test]
    fn connected_graphs_are_connected_and_distinct() {
        let gs: Vec<_> = enumerate_connected(4).unwrap().collect();
        let set: HashSet<_> = gs.iter().map(|g| g.edges()).collect();
        assert_eq!(set.len(), gs.len());
        assert!(gs.iter().all(|g| g.is_connected()));
    }

    // Oracle: Prüfer sequences give every labeled tree; a centre-rooted AHU
    // string identifies its isomorphism class.
    fn ahu(g: &Graph, root: usize, parent: usize) -> String {
        let mut kids: Vec<String> = g
            .neighbors(root)
            .iter()
            .filter(|&c| c != parent)
            .map(|c| ahu(g, c, root))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }

    fn canonical(g: &Graph) -> String {
        let n = g.order();
        let mut deg = g.degrees();
        let mut alive: Vec<bool> = vec![true; n];
        let mut remaining = n;
        let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
        while remaining > 2 {
            let mut next = Vec::new();
            for &v in &layer {
                alive[v] = false;
                remaining -= 1;
                for u in g.neighbors(v).iter() {
                    if alive[u] {
                        deg[u] -= 1;
                        if deg[u] == 1 {
                            next.push(u);
                        }
                    }
                }
            }
            layer = next;
        }
        let centres: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        centres.iter().map(|&c| ahu(g, c, usize::MAX)).min().unwrap()
    }

    fn prufer_classes(n: usize) -> usize {
        if n <= 2 {
            return 1;
        }
        let mut classes = HashSet::new();
        let total = n.pow(n as u32 - 2);
        for code in 0..total {
            let mut seq = Vec::with_capacity(n - 2);
            let mut c = code;
            for _ in 0..n - 2 {
                seq.push(c % n);
                c /= n;
            }
            let mut degree = vec![1usize; n];
            for &s in &seq {
                degree[s] += 1;
            }
            let mut edges = Vec::new();
            for &s in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push((leaf, s));
                degree[leaf] -= 1;
                degree[s] -= 1;
            }
            let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((last[0], last[1]));
            classes.insert(canonical(&Graph::build(n, &edges).unwrap()));
        }
        classes.len()
    }

    #[test]
    fn tree_counts() {
        let known = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159];
        for (i, &c) in known.iter().enumerate() {
            let n = i + 1;
            let trees = enumerate_trees(n).unwrap();
            assert_eq!(trees.len(), c, "n={n}");
            assert!(trees.iter().all(|t| t.is_tree() && t.order() == n));
            let distinct: HashSet<_> = trees.iter().map(canonical).collect();
            assert_eq!(distinct.len(), c, "n={n}");
        }
        assert!(enumerate_trees(15).is_err());
    }

    #[test]
    fn tree_counts_match_labeled_oracle() {
        for n in 1..=8 {
            assert_eq!(enumerate_trees(n).unwrap().len(), prufer_classes(n), "n={n}");
        }
    }

    #[test]
    fn graph6_stream_skips_blank_lines() {
        let data = "C~\n\nEhEG\n";
        let gs: Vec<_> = graph6_stream(data.as_bytes()).collect::<Result<_>>().unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[1].edge_count(), 6);
        let bad: Vec<_> = graph6_stream("C~\n!!\n".as_bytes()).collect();
        assert!(bad[1].is_err());
    }
}
