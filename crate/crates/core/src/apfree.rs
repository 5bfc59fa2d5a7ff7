//! 3-AP-free (Salem–Spencer) sets of integers, the Erdős–Turán function
//! `r(n)`, and their use for distance-equalizer sets of paths.
//!
//! A set of vertices `S` of `P_n` (labels `1..=n`) is a distance-equalizer
//! set exactly when `[n] \ S` is 3-AP-free and all of one parity, and the
//! largest such complement is an odd or even lift of an `r(ceil(n/2))`
//! witness. The same complements describe the diagonal queen placements that
//! dominate an `n x n` board.

use std::sync::RwLock;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Largest `n` for which [`r_exact`] runs.
pub const R_LIMIT: usize = 123;

/// Sorted distinct integers drawn from `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IntSet {
    pub n: usize,
    members: Vec<usize>,
}

impl IntSet {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut m: Vec<usize> = members.into_iter().collect();
        m.sort_unstable();
        m.dedup();
        if let Some(&bad) = m.iter().find(|&&x| x == 0 || x > n) {
            return Err(Error::InvalidInput(format!("{bad} is outside [1, {n}]")));
        }
        Ok(IntSet { n, members: m })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// `[n]` minus this set.
    pub fn complement(&self) -> IntSet {
        IntSet {
            n: self.n,
            members: (1..=self.n).filter(|&x| !self.contains(x)).collect(),
        }
    }

    /// The members as 0-based vertices of `P_n`.
    pub fn to_vertex_set(&self) -> VertexSet {
        VertexSet::from_indices(self.n, self.members.iter().map(|x| x - 1))
    }

    /// Reads 0-based vertices of a graph of order `n` as labels `1..=n`.
    pub fn from_vertex_set(s: &VertexSet) -> IntSet {
        IntSet {
            n: s.order(),
            members: s.iter().map(|v| v + 1).collect(),
        }
    }
}

/// No three distinct members satisfy `a + c = 2b`.
pub fn is_3ap_free(t: &IntSet) -> bool {
    let m = t.members();
    for (i, &a) in m.iter().enumerate() {
        for &c in &m[i + 1..] {
            if (a + c) % 2 == 0 && t.contains((a + c) / 2) {
                return false;
            }
        }
    }
    true
}

/// All members share one parity.
pub fn is_even_sum(t: &IntSet) -> bool {
    t.members().windows(2).all(|w| (w[0] + w[1]) % 2 == 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RnRecord {
    pub n: usize,
    pub r_value: usize,
    /// Lexicographically least 3-AP-free subset of `[n]` of size `r_value`.
    pub witness: IntSet,
}

static R_MEMO: RwLock<Vec<RnRecord>> = RwLock::new(Vec::new());

/// Exact `r(n)` with the lexicographically least maximum witness.
///
/// Values are computed in order `1, 2, ..., n` and memoized for the life of
/// the process. `r(n)` is `r(n-1)` or `r(n-1) + 1`, and a set reaching
/// `r(n-1) + 1` must contain both `1` and `n`, so each step is one bounded
/// search for such a set plus one search for the least witness.
pub fn r_exact(n: usize) -> Result<RnRecord> {
    if n == 0 || n > R_LIMIT {
        return Err(Error::InvalidInput(format!("r(n) needs 1 <= n <= {R_LIMIT}, got {n}")));
    }
    if let Some(rec) = R_MEMO.read().unwrap().get(n - 1) {
        return Ok(rec.clone());
    }
    let mut memo = R_MEMO.write().unwrap();
    while memo.len() < n {
        let m = memo.len() + 1;
        // r_of[L] = r(L) for L < m
        let mut r_of: Vec<usize> = vec![0];
        r_of.extend(memo.iter().map(|rec| rec.r_value));
        let rec = next_record(m, &r_of);
        memo.push(rec);
    }
    Ok(memo[n - 1].clone())
}

/// Records for `1..=limit`.
pub fn r_table(limit: usize) -> Result<Vec<RnRecord>> {
    r_exact(limit)?;
    let memo = R_MEMO.read().unwrap();
    Ok(memo[..limit].to_vec())
}

fn next_record(n: usize, r_of: &[usize]) -> RnRecord {
    let prev = r_of[n - 1];
    let grows = n == 1 || ApSearch::new(n, prev + 1, r_of, true).run().is_some();
    let value = if grows { prev + 1 } else { prev };
    let mask = ApSearch::new(n, value, r_of, false)
        .run()
        .expect("a witness of size r(n) exists");
    let witness = IntSet::new(n, (1..=n).filter(|&x| mask >> x & 1 == 1)).unwrap();
    RnRecord {
        n,
        r_value: value,
        witness,
    }
}

/// Depth-first search over `1..=n` (bit `x` of a `u128` is the integer `x`),
/// trying inclusion before exclusion, so the first hit is lex-least.
struct ApSearch<'a> {
    n: usize,
    target: usize,
    r_of: &'a [usize],
    force_ends: bool,
}

impl<'a> ApSearch<'a> {
    fn new(n: usize, target: usize, r_of: &'a [usize], force_ends: bool) -> Self {
        ApSearch {
            n,
            target,
            r_of,
            force_ends,
        }
    }

    fn run(&self) -> Option<u128> {
        self.dfs(1, 0, 0, 0)
    }

    // Upper bound on how many members fit in a window of `len` integers.
    fn cap(&self, len: usize) -> usize {
        if len < self.n {
            self.r_of[len]
        } else {
            self.r_of[self.n - 1] + 1
        }
    }

    fn dfs(&self, pos: usize, chosen: u128, forbidden: u128, count: usize) -> Option<u128> {
        if count == self.target {
            if self.force_ends && chosen >> self.n & 1 == 0 {
                return None;
            }
            return Some(chosen);
        }
        if pos > self.n {
            return None;
        }
        let len = self.n - pos + 1;
        let window = ((1u128 << len) - 1) << pos;
        let free = (window & !forbidden).count_ones() as usize;
        if count + self.cap(len).min(free) < self.target {
            return None;
        }
        if self.force_ends && forbidden >> self.n & 1 == 1 {
            return None;
        }
        let must_take = self.force_ends && (pos == 1 || pos == self.n);
        if forbidden >> pos & 1 == 0 {
            let mut f = forbidden;
            let mut m = chosen;
            while m != 0 {
                let a = m.trailing_zeros() as usize;
                m &= m - 1;
                let c = 2 * pos - a;
                if c <= self.n {
                    f |= 1u128 << c;
                }
            }
            if let Some(hit) = self.dfs(pos + 1, chosen | 1u128 << pos, f, count + 1) {
                return Some(hit);
            }
        }
        if must_take {
            return None;
        }
        self.dfs(pos + 1, chosen, forbidden, count)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// Odd lift `{2k - 1}` or even lift `{2k}` of a subset of `[ceil(n/2)]`.
pub fn lift(k: &IntSet, parity: Parity, n: usize) -> Result<IntSet> {
    let half = n.div_ceil(2);
    if let Some(&bad) = k.members().iter().find(|&&x| x > half) {
        return Err(Error::InvalidInput(format!("{bad} is outside [1, {half}]")));
    }
    let lifted: Vec<usize> = k
        .members()
        .iter()
        .map(|&x| match parity {
            Parity::Odd => 2 * x - 1,
            Parity::Even => 2 * x,
        })
        .collect();
    if let Some(&bad) = lifted.iter().find(|&&x| x > n) {
        return Err(Error::InvalidInput(format!("lifted member {bad} exceeds {n}")));
    }
    IntSet::new(n, lifted)
}

/// A minimum distance-equalizer set of `P_n`: `[n]` minus the lift of the
/// least `r(ceil(n/2))` witness. The even lift is used unless it would leave
/// `[n]`.
pub fn path_equalizer(n: usize) -> Result<VertexSet> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let rec = r_exact(n.div_ceil(2))?;
    let max = rec.witness.members().last().copied().unwrap_or(0);
    let parity = if 2 * max > n { Parity::Odd } else { Parity::Even };
    let free = lift(&rec.witness, parity, n)?;
    Ok(free.complement().to_vertex_set())
}

/// `eqdim(P_n) = n - r(ceil(n/2))`.
pub fn path_eqdim(n: usize) -> Result<usize> {
    Ok(n - r_exact(n.div_ceil(2))?.r_value)
}

/// Whether queens on the diagonal squares `(k, k)`, `k` in `K`, attack or
/// occupy every square of the `n x n` board.
pub fn is_diagonal_dominating(k: &IntSet, n: usize) -> bool {
    let queens = k.members();
    (1..=n).all(|i| {
        (1..=n).all(|j| {
            queens
                .iter()
                .any(|&q| i == q || j == q || i == j || i + j == 2 * q)
        })
    })
}

/// `diag(n)` and the lexicographically least minimum diagonal dominating set,
/// by direct board simulation over subsets of increasing size.
pub fn diag_brute_force(n: usize) -> IntSet {
    assert!((1..=24).contains(&n), "board search limited to n <= 24");
    for size in 0..=n {
        for mask in crate::cover::lex_k_subsets(n, size) {
            let k = IntSet::new(n, (0..n).filter(|b| mask >> b & 1 == 1).map(|b| b + 1)).unwrap();
            if is_diagonal_dominating(&k, n) {
                return k;
            }
        }
    }
    unreachable!("the full diagonal dominates")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, m: &[usize]) -> IntSet {
        IntSet::new(n, m.iter().copied()).unwrap()
    }

    // Independent oracle: largest 3-AP-free subset of [n] by plain enumeration.
    fn r_brute(n: usize) -> usize {
        (0u32..1 << n)
            .filter(|&m| {
                let s = set(n, &(1..=n).filter(|x| m >> (x - 1) & 1 == 1).collect::<Vec<_>>());
                is_3ap_free(&s)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn ap_free_examples() {
        assert!(!is_3ap_free(&set(3, &[1, 2, 3])));
        assert!(is_3ap_free(&set(5, &[1, 2, 4, 5])));
        assert!(is_3ap_free(&set(5, &[])));
        assert!(is_3ap_free(&set(5, &[4])));
    }

    #[test]
    fn even_sum_examples() {
        assert!(is_even_sum(&set(8, &[2, 4, 8])));
        assert!(!is_even_sum(&set(8, &[1, 2])));
        assert!(is_even_sum(&set(8, &[])));
    }

    #[test]
    fn r_matches_brute_force() {
        for n in 1..=16 {
            assert_eq!(r_exact(n).unwrap().r_value, r_brute(n), "n={n}");
        }
    }

    #[test]
    fn tabulated_values() {
        assert_eq!(r_exact(1).unwrap().r_value, 1);
        assert_eq!(r_exact(4).unwrap().r_value, 3);
        assert_eq!(r_exact(10).unwrap().r_value, 5);
        assert_eq!(r_exact(25).unwrap().r_value, 10);
    }

    #[test]
    fn witnesses_are_least_and_valid() {
        assert_eq!(r_exact(4).unwrap().witness.members(), &[1, 2, 4]);
        for rec in r_table(30).unwrap() {
            assert!(is_3ap_free(&rec.witness));
            assert_eq!(rec.witness.len(), rec.r_value);
        }
        // least witness by enumeration in lex order, small n
        for n in 1..=12 {
            let r = r_brute(n);
            let least = crate::cover::lex_k_subsets(n, r)
                .map(|m| set(n, &(1..=n).filter(|x| m >> (x - 1) & 1 == 1).collect::<Vec<_>>()))
                .find(is_3ap_free)
                .unwrap();
            assert_eq!(r_exact(n).unwrap().witness, least, "n={n}");
        }
    }

    #[test]
    fn r_limits() {
        assert!(r_exact(0).is_err());
        assert!(r_exact(R_LIMIT + 1).is_err());
    }

    #[test]
    fn lifts() {
        let k = set(4, &[1, 2, 4]);
        assert_eq!(lift(&k, Parity::Odd, 8).unwrap().members(), &[1, 3, 7]);
        assert_eq!(lift(&k, Parity::Even, 8).unwrap().members(), &[2, 4, 8]);
        assert!(lift(&k, Parity::Even, 7).is_err());
        let bad = set(3, &[1, 2, 3]);
        for p in [Parity::Odd, Parity::Even] {
            assert!(!is_3ap_free(&lift(&bad, p, 6).unwrap()));
        }
    }

    #[test]
    fn path_equalizer_sizes() {
        assert_eq!(path_equalizer(8).unwrap().len(), 5);
        assert_eq!(path_equalizer(3).unwrap().len(), 1);
        assert_eq!(path_equalizer(50).unwrap().len(), 40);
        assert_eq!(path_equalizer(1).unwrap().len(), 0);
    }

    #[test]
    fn queens() {
        for n in 1..=6 {
            assert!(is_diagonal_dominating(&set(n, &(1..=n).collect::<Vec<_>>()), n));
        }
        assert!(is_diagonal_dominating(&set(8, &[2, 4, 5, 6, 8]), 8));
        // (3, 4) is off row 1, column 1, the main diagonal and i + j = 2
        assert!(!is_diagonal_dominating(&set(4, &[1]), 4));
    }

    #[test]
    fn diag_matches_path_formula() {
        for n in 2..=12 {
            assert_eq!(diag_brute_force(n).len(), path_eqdim(n).unwrap(), "n={n}");
        }
    }
}
