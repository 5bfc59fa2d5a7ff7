//! Lexicographic minimum set-cover search over vertex pairs.
//!
//! Each vertex `w` of a graph with at most [`SEARCH_LIMIT`] vertices owns a
//! bitset over the `n(n-1)/2` unordered pairs (its "cover"). A vertex set is
//! feasible when the union of its covers is every pair. Distance-equalizer
//! sets and resolving sets are both feasibility problems of this shape.
//!
//! The search decides vertices in index order, trying inclusion before
//! exclusion, so the first feasible set it reaches at a given size is the
//! lexicographically least one.

/// Maximum graph order for exact searches (single-word vertex masks).
pub const SEARCH_LIMIT: usize = 64;

#[inline]
pub fn pair_index(x: usize, y: usize) -> usize {
    let (x, y) = if x < y { (x, y) } else { (y, x) };
    y * (y - 1) / 2 + x
}

/// Node-expansion counter shared across the stages of one exact search.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub limit: u64,
    pub used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    #[inline]
    pub fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exhausted;

pub struct PairCover {
    n: usize,
    words: usize,
    cov: Vec<u64>,
    all: Vec<u64>,
}

impl PairCover {
    /// Builds covers from a predicate `covers(w, x, y)` for `x < y`.
    pub fn new(n: usize, covers: impl Fn(usize, usize, usize) -> bool) -> Self {
        assert!(n <= SEARCH_LIMIT);
        let npairs = n * n.saturating_sub(1) / 2;
        let words = npairs.div_ceil(64).max(1);
        let mut cov = vec![0u64; n * words];
        let mut all = vec![0u64; words];
        for y in 1..n {
            for x in 0..y {
                let p = pair_index(x, y);
                all[p / 64] |= 1 << (p % 64);
                for w in 0..n {
                    if covers(w, x, y) {
                        cov[w * words + p / 64] |= 1 << (p % 64);
                    }
                }
            }
        }
        PairCover { n, words, cov, all }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn cover_of(&self, w: usize) -> &[u64] {
        &self.cov[w * self.words..(w + 1) * self.words]
    }

    /// Whether the vertices of `mask` cover every pair.
    pub fn is_cover(&self, mask: u64) -> bool {
        let mut acc = vec![0u64; self.words];
        let mut m = mask;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            for (a, c) in acc.iter_mut().zip(self.cover_of(w)) {
                *a |= c;
            }
        }
        acc.iter().zip(&self.all).all(|(a, b)| a & b == *b)
    }

    /// Lexicographically least cover of size at most `k` that contains
    /// `forced` and uses only vertices of `allowed`.
    ///
    /// Callers establish that no cover smaller than `k` exists under the same
    /// constraints, so any cover reached has exactly `k` members.
    pub fn first_cover(
        &self,
        k: usize,
        forced: u64,
        allowed: u64,
        budget: &mut Budget,
    ) -> Result<Option<u64>, Exhausted> {
        let forced = forced & allowed;
        if forced.count_ones() as usize > k {
            return Ok(None);
        }
        let w = self.words;
        // suffix[i] = union of covers of allowed vertices >= i
        let mut suffix = vec![0u64; (self.n + 1) * w];
        for i in (0..self.n).rev() {
            let (head, tail) = suffix.split_at_mut((i + 1) * w);
            let dst = &mut head[i * w..];
            dst.copy_from_slice(&tail[..w]);
            if allowed >> i & 1 == 1 {
                for (d, c) in dst.iter_mut().zip(self.cover_of(i)) {
                    *d |= c;
                }
            }
        }
        let mut ctx = Dfs {
            pc: self,
            k,
            forced,
            allowed,
            suffix,
            stack: vec![0u64; (self.n + 1) * w],
            uncovered: vec![0u64; w],
            budget,
        };
        ctx.run(0, 0, 0)
    }
}

struct Dfs<'a> {
    pc: &'a PairCover,
    k: usize,
    forced: u64,
    allowed: u64,
    suffix: Vec<u64>,
    // covered-pair sets per depth
    stack: Vec<u64>,
    uncovered: Vec<u64>,
    budget: &'a mut Budget,
}

impl Dfs<'_> {
    fn run(&mut self, i: usize, chosen: u64, count: usize) -> Result<Option<u64>, Exhausted> {
        if !self.budget.tick() {
            return Err(Exhausted);
        }
        let w = self.pc.words;
        let n = self.pc.n;
        let covered = &self.stack[i * w..(i + 1) * w];
        let mut missing = 0usize;
        for ((u, c), a) in self.uncovered.iter_mut().zip(covered).zip(&self.pc.all) {
            *u = a & !c;
            missing += u.count_ones() as usize;
        }
        let rest_forced = if i >= 64 { 0 } else { self.forced >> i << i };
        let room = self.k - count;
        if (rest_forced.count_ones() as usize) > room {
            return Ok(None);
        }
        if missing == 0 {
            return Ok(Some(chosen | rest_forced));
        }
        if i == n || room == 0 {
            return Ok(None);
        }
        let suf = &self.suffix[i * w..(i + 1) * w];
        if self.uncovered.iter().zip(suf).any(|(u, s)| u & !s != 0) {
            return Ok(None);
        }
        // No single remaining vertex covers enough to finish in `room` picks.
        let mut best = 0usize;
        let mut rest = self.allowed >> i << i;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let gain: usize = self
                .uncovered
                .iter()
                .zip(self.pc.cover_of(v))
                .map(|(u, c)| (u & c).count_ones() as usize)
                .sum();
            best = best.max(gain);
        }
        if best * room < missing {
            return Ok(None);
        }

        let allowed_here = self.allowed >> i & 1 == 1;
        let forced_here = self.forced >> i & 1 == 1;
        if allowed_here {
            let (head, tail) = self.stack.split_at_mut((i + 1) * w);
            let src = &head[i * w..];
            for ((d, s), c) in tail[..w].iter_mut().zip(src).zip(self.pc.cover_of(i)) {
                *d = s | c;
            }
            if let Some(found) = self.run(i + 1, chosen | 1 << i, count + 1)? {
                return Ok(Some(found));
            }
        }
        if !forced_here {
            let (head, tail) = self.stack.split_at_mut((i + 1) * w);
            tail[..w].copy_from_slice(&head[i * w..]);
            return self.run(i + 1, chosen, count);
        }
        Ok(None)
    }
}

/// Iterates `k`-subsets of the low `n` bits in lexicographic order of their
/// sorted member lists.
pub fn lex_k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mask = idx.iter().fold(0u64, |m, &i| m | 1 << i);
        // advance
        let mut j = k;
        loop {
            if j == 0 {
                done = true;
                break;
            }
            j -= 1;
            if idx[j] < n - k + j {
                idx[j] += 1;
                for t in j + 1..k {
                    idx[t] = idx[t - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_indices_are_dense() {
        let n = 9;
        let mut seen = vec![false; n * (n - 1) / 2];
        for y in 1..n {
            for x in 0..y {
                let p = pair_index(x, y);
                assert!(!seen[p]);
                seen[p] = true;
                assert_eq!(pair_index(y, x), p);
            }
        }
        assert!(seen.into_iter().all(|b| b));
    }

    #[test]
    fn lex_subsets_order_and_count() {
        let v: Vec<_> = lex_k_subsets(4, 2).collect();
        assert_eq!(v, vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
        assert_eq!(lex_k_subsets(10, 4).count(), 210);
        assert_eq!(lex_k_subsets(3, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(lex_k_subsets(2, 3).count(), 0);
    }

    #[test]
    fn search_agrees_with_enumeration() {
        // cover: w covers pair (x,y) when w divides x + y + 1 (arbitrary)
        let n = 9;
        let pc = PairCover::new(n, |w, x, y| (x + y + 1) % (w + 2) == 0 || w == x || w == y);
        let full = (1u64 << n) - 1;
        for k in 0..=n {
            let brute = lex_k_subsets(n, k).find(|&m| pc.is_cover(m));
            let mut b = Budget::new(u64::MAX);
            let fast = pc.first_cover(k, 0, full, &mut b).unwrap();
            if brute.is_some() {
                assert_eq!(fast, brute, "k={k}");
                break;
            }
            assert_eq!(fast, None);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let pc = PairCover::new(12, |w, x, y| w == x || w == y);
        let mut b = Budget::new(5);
        assert_eq!(pc.first_cover(11, 0, (1 << 12) - 1, &mut b), Err(Exhausted));
    }
}
