//! Resolving sets, metric dimension, doubly resolving sets and `psi`.
//!
//! Vertices `u, v` doubly resolve `{x, y}` when
//! `d(u,x) - d(u,y) != d(v,x) - d(v,y)`; a set doubly resolves a pair when
//! the difference `d(u,x) - d(u,y)` is not constant over its members.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::cover::{pair_index, Budget, Exhausted, PairCover, SEARCH_LIMIT};
use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::equalizer::{check_order, is_distance_equalizer, lex_less, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolvingCertificate {
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_pair: Option<(usize, usize)>,
}

pub fn verify_resolving(g: &Graph, s: &VertexSet) -> Result<ResolvingCertificate> {
    check_order(g, s)?;
    let d = all_pairs_distances(g)?;
    Ok(resolving_with_distances(&d, s))
}

pub fn resolving_with_distances(d: &DistanceMatrix, s: &VertexSet) -> ResolvingCertificate {
    let n = d.order();
    let members = s.to_vec();
    for x in 0..n {
        for y in x + 1..n {
            if !members.iter().any(|&v| d.get(v, x) != d.get(v, y)) {
                return ResolvingCertificate {
                    valid: false,
                    failing_pair: Some((x, y)),
                };
            }
        }
    }
    ResolvingCertificate {
        valid: true,
        failing_pair: None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes: u64,
}

fn require_searchable(g: &Graph) -> Result<DistanceMatrix> {
    if g.order() > SEARCH_LIMIT {
        return Err(Error::TooLarge {
            n: g.order(),
            limit: SEARCH_LIMIT,
        });
    }
    all_pairs_distances(g)
}

/// Metric dimension with the lexicographically least minimum resolving set.
pub fn dim_exact(g: &Graph, budget: u64) -> Result<SearchResult> {
    let d = require_searchable(g)?;
    let n = g.order();
    if n == 1 {
        return Ok(SearchResult {
            value: 0,
            witness: VertexSet::empty(1),
            nodes: 0,
        });
    }
    let pc = PairCover::new(n, |v, x, y| d.get(v, x) != d.get(v, y));
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut budget = Budget::new(budget);
    for k in 1..n {
        match pc.first_cover(k, 0, full, &mut budget) {
            Ok(Some(m)) => {
                return Ok(SearchResult {
                    value: k,
                    witness: VertexSet::from_mask(n, m),
                    nodes: budget.used,
                })
            }
            Ok(None) => {}
            Err(Exhausted) => {
                return Err(Error::BudgetExhausted {
                    budget: budget.limit,
                    lower: k,
                    upper: n - 1,
                })
            }
        }
    }
    unreachable!("n - 1 vertices always resolve")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairResolvers {
    pub x: usize,
    pub y: usize,
    pub u: usize,
    pub v: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoublyResolvingCertificate {
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resolvers: Option<Vec<PairResolvers>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_pair: Option<(usize, usize)>,
}

#[inline]
fn diff(d: &DistanceMatrix, u: usize, x: usize, y: usize) -> i64 {
    d.get(u, x) as i64 - d.get(u, y) as i64
}

/// A pair of members that doubly resolves `{x, y}`, if any.
pub fn doubly_resolvers(d: &DistanceMatrix, members: &[usize], x: usize, y: usize) -> Option<(usize, usize)> {
    let (&u, rest) = members.split_first()?;
    let du = diff(d, u, x, y);
    rest.iter().find(|&&v| diff(d, v, x, y) != du).map(|&v| (u, v))
}

pub fn verify_doubly_resolving(g: &Graph, s: &VertexSet) -> Result<DoublyResolvingCertificate> {
    check_order(g, s)?;
    if s.len() < 2 {
        return Err(Error::InvalidInput(
            "a doubly resolving set needs at least two vertices".into(),
        ));
    }
    let d = all_pairs_distances(g)?;
    Ok(doubly_with_distances(&d, s))
}

pub fn doubly_with_distances(d: &DistanceMatrix, s: &VertexSet) -> DoublyResolvingCertificate {
    let n = d.order();
    let members = s.to_vec();
    let mut resolvers = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            match doubly_resolvers(d, &members, x, y) {
                Some((u, v)) => resolvers.push(PairResolvers { x, y, u, v }),
                None => {
                    return DoublyResolvingCertificate {
                        valid: false,
                        resolvers: None,
                        failing_pair: Some((x, y)),
                    }
                }
            }
        }
    }
    DoublyResolvingCertificate {
        valid: true,
        resolvers: Some(resolvers),
        failing_pair: None,
    }
}

pub fn is_doubly_resolving(d: &DistanceMatrix, s: &VertexSet) -> bool {
    let n = d.order();
    let members = s.to_vec();
    (0..n).all(|x| (x + 1..n).all(|y| doubly_resolvers(d, &members, x, y).is_some()))
}

/// `psi(g)`: the minimum size of a doubly resolving set, with the
/// lexicographically least witness. Requires `n >= 2`.
pub fn psi_exact(g: &Graph, budget: u64) -> Result<SearchResult> {
    let d = require_searchable(g)?;
    let n = g.order();
    if n < 2 {
        return Err(Error::InvalidInput("psi needs at least two vertices".into()));
    }
    let dim = dim_exact(g, budget)?;
    let mut search = PsiSearch::new(&d, Budget::new(budget.saturating_sub(dim.nodes)));
    for k in dim.value.max(2)..=n {
        match search.first(k) {
            Ok(Some(m)) => {
                debug_assert!(k >= dim.value);
                return Ok(SearchResult {
                    value: k,
                    witness: VertexSet::from_mask(n, m),
                    nodes: dim.nodes + search.budget.used,
                });
            }
            Ok(None) => {}
            Err(Exhausted) => {
                return Err(Error::BudgetExhausted {
                    budget,
                    lower: k,
                    upper: n,
                })
            }
        }
    }
    unreachable!("the whole vertex set doubly resolves every pair")
}

/// Include-first depth-first search over vertices in index order. Each pair
/// tracks the difference of the first chosen vertex and whether a later
/// member has differed from it.
struct PsiSearch {
    n: usize,
    npairs: usize,
    // diffs[v * npairs + p]
    diffs: Vec<i32>,
    budget: Budget,
}

const UNSET: i32 = i32::MIN;

impl PsiSearch {
    fn new(d: &DistanceMatrix, budget: Budget) -> Self {
        let n = d.order();
        let npairs = n * (n - 1) / 2;
        let mut diffs = vec![0; n * npairs];
        for v in 0..n {
            for y in 1..n {
                for x in 0..y {
                    diffs[v * npairs + pair_index(x, y)] = diff(d, v, x, y) as i32;
                }
            }
        }
        PsiSearch {
            n,
            npairs,
            diffs,
            budget,
        }
    }

    fn first(&mut self, k: usize) -> Result<Option<u64>, Exhausted> {
        let reference = vec![UNSET; self.npairs];
        let resolved = vec![false; self.npairs];
        let mut best = None;
        self.dfs(0, 0, k, reference, resolved, &mut best)?;
        Ok(best)
    }

    fn dfs(
        &mut self,
        i: usize,
        chosen: u64,
        room: usize,
        reference: Vec<i32>,
        resolved: Vec<bool>,
        best: &mut Option<u64>,
    ) -> Result<bool, Exhausted> {
        if !self.budget.tick() {
            return Err(Exhausted);
        }
        if resolved.iter().all(|&r| r) {
            debug_assert!(best.is_none_or(|b| lex_less(chosen, b)));
            *best = Some(chosen);
            return Ok(true);
        }
        if room == 0 || i == self.n {
            return Ok(false);
        }
        // every open pair must still be resolvable by some later vertex
        for p in 0..self.npairs {
            if resolved[p] {
                continue;
            }
            let r = reference[p];
            let ok = (i..self.n).any(|v| {
                let dv = self.diffs[v * self.npairs + p];
                if r == UNSET {
                    // need two later vertices that differ
                    (v + 1..self.n).any(|w| self.diffs[w * self.npairs + p] != dv)
                } else {
                    dv != r
                }
            });
            if !ok {
                return Ok(false);
            }
        }
        let mut ref2 = reference.clone();
        let mut res2 = resolved.clone();
        for p in 0..self.npairs {
            if res2[p] {
                continue;
            }
            let dv = self.diffs[i * self.npairs + p];
            if ref2[p] == UNSET {
                ref2[p] = dv;
            } else if ref2[p] != dv {
                res2[p] = true;
            }
        }
        if self.dfs(i + 1, chosen | 1 << i, room - 1, ref2, res2, best)? {
            return Ok(true);
        }
        self.dfs(i + 1, chosen, room, reference, resolved, best)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoublyConstruction {
    /// `A + B + C`
    pub set: VertexSet,
    /// The extra vertices `y_x` added for pairs `x` in `B`, `y_x` outside `B`.
    pub extra: VertexSet,
}

/// Builds a doubly resolving set from a resolving set `a` and a
/// distance-equalizer set `b`.
///
/// Pairs inside `b` are doubly resolved by themselves and pairs outside `b`
/// by a resolver from `a` with an equidistant vertex from `b`. For each `x`
/// in `b` at most one `y` outside `b` is left unresolved by `a + b`; those
/// vertices form the extra set `C`.
pub fn doubly_from_eqdim(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<DoublyConstruction> {
    check_order(g, a)?;
    check_order(g, b)?;
    let d = all_pairs_distances(g)?;
    if !resolving_with_distances(&d, a).valid {
        return Err(Error::InvalidInput("first set is not resolving".into()));
    }
    if !is_distance_equalizer(&d, b) {
        return Err(Error::InvalidInput("second set is not a distance-equalizer set".into()));
    }
    let base = a.union(b);
    let members = base.to_vec();
    let mut extra = VertexSet::empty(g.order());
    for x in b.iter() {
        for y in b.complement().iter() {
            if doubly_resolvers(&d, &members, x, y).is_none() {
                extra.insert(y);
            }
        }
    }
    Ok(DoublyConstruction {
        set: base.union(&extra),
        extra,
    })
}

/// `psi` of a tree: its leaves form the unique minimum doubly resolving set.
pub fn tree_psi(t: &Graph) -> Result<(usize, VertexSet)> {
    if t.order() < 2 || !t.is_tree() {
        return Err(Error::NotATree);
    }
    let leaves = t.leaves();
    Ok((leaves.len(), leaves))
}

/// Convenience wrapper with the default budget.
pub fn psi(g: &Graph) -> Result<usize> {
    Ok(psi_exact(g, DEFAULT_BUDGET)?.value)
}
