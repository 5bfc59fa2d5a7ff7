//! Distance-equalizer sets: verification, bounds and exact equidistant
//! dimension.
//!
//! A set `S` is a distance-equalizer set when every two distinct vertices
//! outside `S` have a common equidistant vertex in `S`. The equidistant
//! dimension `eqdim(G)` is the minimum size of such a set.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::clique::{alpha, omega};
use crate::cover::{Budget, Exhausted, PairCover, SEARCH_LIMIT};
use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default node budget for exact searches.
pub const DEFAULT_BUDGET: u64 = 2_000_000_000;

#[inline]
pub fn is_equidistant(w: usize, x: usize, y: usize, d: &DistanceMatrix) -> bool {
    d.get(x, w) == d.get(y, w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub x: usize,
    pub y: usize,
    pub w: usize,
}

/// Verdict for a candidate distance-equalizer set.
///
/// On success `witnesses` lists, for every pair `x < y` outside the set, the
/// smallest equidistant member. On failure `failing_pair` is the
/// lexicographically least pair with no equidistant member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualizerCertificate {
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<PairWitness>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_pair: Option<(usize, usize)>,
}

pub fn verify_distance_equalizer(g: &Graph, s: &VertexSet) -> Result<EqualizerCertificate> {
    check_order(g, s)?;
    let d = all_pairs_distances(g)?;
    Ok(verify_with_distances(&d, s))
}

pub(crate) fn check_order(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.order() != g.order() {
        return Err(Error::OrderMismatch {
            set: s.order(),
            graph: g.order(),
        });
    }
    Ok(())
}

pub fn verify_with_distances(d: &DistanceMatrix, s: &VertexSet) -> EqualizerCertificate {
    let members = s.to_vec();
    let outside = s.complement().to_vec();
    let mut witnesses = Vec::new();
    for (i, &x) in outside.iter().enumerate() {
        for &y in &outside[i + 1..] {
            match members.iter().find(|&&w| is_equidistant(w, x, y, d)) {
                Some(&w) => witnesses.push(PairWitness { x, y, w }),
                None => {
                    return EqualizerCertificate {
                        valid: false,
                        witnesses: None,
                        failing_pair: Some((x, y)),
                    }
                }
            }
        }
    }
    EqualizerCertificate {
        valid: true,
        witnesses: Some(witnesses),
        failing_pair: None,
    }
}

/// Boolean verdict without building the witness map.
pub fn is_distance_equalizer(d: &DistanceMatrix, s: &VertexSet) -> bool {
    let members = s.to_vec();
    let outside = s.complement().to_vec();
    outside.iter().enumerate().all(|(i, &x)| {
        outside[i + 1..]
            .iter()
            .all(|&y| members.iter().any(|&w| is_equidistant(w, x, y, d)))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub name: &'static str,
    pub value: usize,
}

/// Lower and upper bounds on `eqdim` with the rule each comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub lower: Vec<Bound>,
    pub upper: Vec<Bound>,
    pub best_lower: usize,
    pub best_upper: usize,
}

impl BoundsReport {
    pub fn lower_named(&self, name: &str) -> Option<usize> {
        self.lower.iter().find(|b| b.name == name).map(|b| b.value)
    }

    pub fn upper_named(&self, name: &str) -> Option<usize> {
        self.upper.iter().find(|b| b.name == name).map(|b| b.value)
    }

    pub fn is_tight(&self) -> bool {
        self.best_lower == self.best_upper
    }
}

pub const SUPPORT_VERTICES: &str = "support-vertices";
pub const BIPARTITE_PARTITE: &str = "bipartite-partite";
pub const MAX_DEGREE_CHARACTERIZATION: &str = "max-degree-characterization";
pub const N_MINUS_MAX_DEGREE: &str = "n-minus-max-degree";
pub const N_MINUS_CLIQUE: &str = "n-minus-clique-plus-one";
pub const DIAMETER_RATIO: &str = "diameter-ratio";
pub const INDEPENDENCE: &str = "independence-diameter-two";
pub const TRIVIAL: &str = "trivial";

pub fn bounds(g: &Graph) -> Result<BoundsReport> {
    let d = all_pairs_distances(g)?;
    Ok(bounds_with_distances(g, &d))
}

pub fn bounds_with_distances(g: &Graph, d: &DistanceMatrix) -> BoundsReport {
    let n = g.order();
    if n == 1 {
        return BoundsReport {
            lower: vec![],
            upper: vec![Bound { name: TRIVIAL, value: 0 }],
            best_lower: 0,
            best_upper: 0,
        };
    }
    let delta = g.max_degree();
    let mut lower = Vec::new();
    // In P_2 each vertex is both a leaf and a support vertex, so the sets
    // {v} + leaves(v) overlap and the count is not a bound.
    if n >= 3 {
        lower.push(Bound {
            name: SUPPORT_VERTICES,
            value: g.support_vertices().len(),
        });
    }
    if let Some((a, b)) = g.bipartition() {
        lower.push(Bound {
            name: BIPARTITE_PARTITE,
            value: a.len().min(b.len()),
        });
    }
    let characterization = if delta == n - 1 {
        1
    } else if delta == n - 2 {
        2
    } else {
        3
    };
    lower.push(Bound {
        name: MAX_DEGREE_CHARACTERIZATION,
        value: characterization,
    });

    let diam = d.diameter() as usize;
    let mut upper = vec![
        Bound {
            name: N_MINUS_MAX_DEGREE,
            value: n - delta,
        },
        Bound {
            name: N_MINUS_CLIQUE,
            value: n - omega(g) + 1,
        },
        Bound {
            name: DIAMETER_RATIO,
            value: (n * (diam - 1) + 1) / diam,
        },
    ];
    if diam == 2 {
        upper.push(Bound {
            name: INDEPENDENCE,
            value: n - alpha(g) + 1,
        });
    }
    upper.push(Bound {
        name: TRIVIAL,
        value: n - 1,
    });
    let best_lower = lower.iter().map(|b| b.value).max().unwrap_or(0);
    let best_upper = upper.iter().map(|b| b.value).min().unwrap_or(n - 1);
    BoundsReport {
        lower,
        upper,
        best_lower,
        best_upper,
    }
}

/// Exact equidistant dimension with its lexicographically least witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqdimResult {
    pub value: usize,
    pub witness: VertexSet,
    pub bounds: BoundsReport,
    pub nodes: u64,
}

/// Pair covers for the equalizer search: `w` covers `{x, y}` when it is one
/// of them or equidistant from both.
pub fn equalizer_cover(d: &DistanceMatrix) -> PairCover {
    PairCover::new(d.order(), |w, x, y| w == x || w == y || is_equidistant(w, x, y, d))
}

/// Lexicographic order on masks read as sorted member lists.
pub(crate) fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    // the lowest differing vertex belongs to the lex-smaller set
    let low = diff.trailing_zeros();
    a >> low & 1 == 1
}

/// Computes `eqdim(g)` by increasing-size search starting at the best lower
/// bound. For bipartite graphs only supersets of one colour class are
/// explored, since every distance-equalizer set contains a whole class.
pub fn eqdim_exact(g: &Graph, budget: u64) -> Result<EqdimResult> {
    let n = g.order();
    if n > SEARCH_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: SEARCH_LIMIT,
        });
    }
    let d = all_pairs_distances(g)?;
    let bounds = bounds_with_distances(g, &d);
    if n == 1 {
        return Ok(EqdimResult {
            value: 0,
            witness: VertexSet::empty(1),
            bounds,
            nodes: 0,
        });
    }
    let forced_options: Vec<u64> = match g.bipartition() {
        Some((a, b)) => vec![a.as_mask().unwrap(), b.as_mask().unwrap()],
        None => vec![0],
    };
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let pc = equalizer_cover(&d);
    let mut budget = Budget::new(budget);
    for k in bounds.best_lower..n {
        let mut best: Option<u64> = None;
        for &forced in &forced_options {
            match pc.first_cover(k, forced, full, &mut budget) {
                Ok(Some(m)) => {
                    if best.is_none_or(|b| lex_less(m, b)) {
                        best = Some(m);
                    }
                }
                Ok(None) => {}
                Err(Exhausted) => {
                    return Err(Error::BudgetExhausted {
                        budget: budget.limit,
                        lower: k,
                        upper: bounds.best_upper,
                    })
                }
            }
        }
        if let Some(m) = best {
            debug_assert!(k <= bounds.best_upper, "upper bound {} < {k}", bounds.best_upper);
            return Ok(EqdimResult {
                value: k,
                witness: VertexSet::from_mask(n, m),
                bounds,
                nodes: budget.used,
            });
        }
    }
    unreachable!("any n - 1 vertices form a distance-equalizer set")
}
