//! Named graph families and their canonical vertex numberings.
//!
//! Numbering conventions (all 0-based):
//!
//! * `P_n`, `C_n`: label `i` in `[n]` is vertex `i - 1`.
//! * `K_{n_1,...,n_p}`: parts are consecutive blocks in the given order.
//! * star of order `n`: centre `0`, leaves `1..n`.
//! * bistar `K_2(r,s)`: centre `0` with leaves `1..r`, centre `r` with leaves
//!   `r+1..r+s`.
//! * `J(n,k)`: `k`-subsets of `{0,...,n-1}` in colexicographic order, i.e. by
//!   increasing value of their bitmask.
//! * `H_{a,b}`: `v = 0`, `v_i = i`, `u_i = a + i`.
//! * `G_k`: `v = 0`, `B = 1..=k`, then the binary words `w = 0..2^k` at
//!   `k + 1 + w`. Word `w` is adjacent to `j` in `B` when its `j`-th digit,
//!   read from the most significant end, is `1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    /// Star of order `n`, i.e. `K_{1,n-1}`.
    Star(usize),
    Bistar(usize, usize),
    Johnson(usize, usize),
    HGraph(usize, usize),
    GkGraph(usize),
    Complement(Box<FamilySpec>),
}

/// Largest `k` accepted for `G_k` (order `2^k + k + 1`).
pub const GK_MAX: usize = 16;

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        match self {
            FamilySpec::Path(n) if *n < 1 => bad("path needs n >= 1".into()),
            FamilySpec::Cycle(n) if *n < 3 => bad("cycle needs n >= 3".into()),
            FamilySpec::Complete(n) if *n < 1 => bad("complete graph needs n >= 1".into()),
            FamilySpec::CompleteMultipartite(parts) if parts.is_empty() || parts.contains(&0) => {
                bad("multipartite parts must be non-empty".into())
            }
            FamilySpec::Star(n) if *n < 2 => bad("star needs order >= 2".into()),
            FamilySpec::Bistar(r, s) if *r < 2 || *s < 2 => {
                bad("bistar K_2(r,s) needs r, s >= 2".into())
            }
            FamilySpec::Johnson(n, k) if *k < 1 || *n <= *k => {
                bad(format!("johnson J({n},{k}) needs n > k >= 1"))
            }
            FamilySpec::Johnson(n, _) if *n > 64 => bad("johnson ground set limited to 64".into()),
            FamilySpec::HGraph(a, b) if *a < 1 || *b >= *a => {
                bad(format!("H_{{{a},{b}}} needs a >= 1 and 0 <= b < a"))
            }
            FamilySpec::GkGraph(k) if *k < 1 || *k > GK_MAX => {
                bad(format!("G_k needs 1 <= k <= {GK_MAX}"))
            }
            FamilySpec::Complement(inner) => inner.validate(),
            _ => Ok(()),
        }
    }

    /// Order of the generated graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Star(n) => *n,
            FamilySpec::CompleteMultipartite(parts) => parts.iter().sum(),
            FamilySpec::Bistar(r, s) => r + s,
            FamilySpec::Johnson(n, k) => binomial(*n, *k),
            FamilySpec::HGraph(a, b) => a + b + 1,
            FamilySpec::GkGraph(k) => (1 << k) + k + 1,
            FamilySpec::Complement(inner) => inner.order(),
        }
    }

    /// Conventional mathematical name, e.g. `K_{3,3}` or `J(5,2)`.
    pub fn display_name(&self) -> String {
        let list = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            FamilySpec::Path(n) => format!("P_{n}"),
            FamilySpec::Cycle(n) => format!("C_{n}"),
            FamilySpec::Complete(n) => format!("K_{n}"),
            FamilySpec::CompleteMultipartite(parts) => format!("K_{{{}}}", list(parts)),
            FamilySpec::Star(n) => format!("K_{{1,{}}}", n - 1),
            FamilySpec::Bistar(r, s) => format!("K_2({r},{s})"),
            FamilySpec::Johnson(n, k) => format!("J({n},{k})"),
            FamilySpec::HGraph(a, b) => format!("H_{{{a},{b}}}"),
            FamilySpec::GkGraph(k) => format!("G_{k}"),
            FamilySpec::Complement(inner) => format!("complement({})", inner.display_name()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteMultipartite(parts) => {
                let p: Vec<_> = parts.iter().map(|x| x.to_string()).collect();
                write!(f, "multipartite:{}", p.join(","))
            }
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Bistar(r, s) => write!(f, "bistar:{r},{s}"),
            FamilySpec::Johnson(n, k) => write!(f, "johnson:{n},{k}"),
            FamilySpec::HGraph(a, b) => write!(f, "h:{a},{b}"),
            FamilySpec::GkGraph(k) => write!(f, "gk:{k}"),
            FamilySpec::Complement(inner) => write!(f, "complement:{inner}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
        let kind = kind.to_ascii_lowercase().replace('-', "_");
        if kind == "complement" {
            let inner: FamilySpec = rest.parse()?;
            return Ok(FamilySpec::Complement(Box::new(inner)));
        }
        let nums: Vec<usize> = if rest.is_empty() {
            Vec::new()
        } else {
            rest.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidFamily(format!("bad parameter {t:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        let arity = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidFamily(format!(
                    "{kind} takes {k} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        let spec = match kind.as_str() {
            "path" => {
                arity(1)?;
                FamilySpec::Path(nums[0])
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle(nums[0])
            }
            "complete" => {
                arity(1)?;
                FamilySpec::Complete(nums[0])
            }
            "multipartite" | "complete_multipartite" => FamilySpec::CompleteMultipartite(nums),
            "bipartite" | "complete_bipartite" => {
                arity(2)?;
                FamilySpec::CompleteMultipartite(nums)
            }
            "star" => {
                arity(1)?;
                FamilySpec::Star(nums[0])
            }
            "bistar" => {
                arity(2)?;
                FamilySpec::Bistar(nums[0], nums[1])
            }
            "johnson" => {
                arity(2)?;
                FamilySpec::Johnson(nums[0], nums[1])
            }
            "h" | "h_graph" => {
                arity(2)?;
                FamilySpec::HGraph(nums[0], nums[1])
            }
            "gk" | "gk_graph" => {
                arity(1)?;
                FamilySpec::GkGraph(nums[0])
            }
            _ => return Err(Error::InvalidFamily(format!("unknown family {kind:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `k`-subsets of `{0,...,n-1}` as bitmasks in colexicographic order.
pub fn colex_subsets(n: usize, k: usize) -> Vec<u64> {
    assert!(n <= 64 && k <= n);
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut x: u64 = (1u64 << k) - 1;
    loop {
        if n < 64 && x >> n != 0 {
            break;
        }
        out.push(x);
        // Gosper's hack: next larger integer with the same popcount.
        let c = x & x.wrapping_neg();
        let r = x.wrapping_add(c);
        if r == 0 {
            break;
        }
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

/// Generates the named graph.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.order();
    let g = match spec {
        FamilySpec::Path(n) => Graph::build(*n, &(1..*n).map(|i| (i - 1, i)).collect::<Vec<_>>())?,
        FamilySpec::Cycle(n) => {
            Graph::build(*n, &(0..*n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())?
        }
        FamilySpec::Complete(n) => {
            let mut edges = Vec::new();
            for u in 0..*n {
                edges.extend((u + 1..*n).map(|v| (u, v)));
            }
            Graph::build(*n, &edges)?
        }
        FamilySpec::CompleteMultipartite(parts) => {
            let part_of: Vec<usize> = parts
                .iter()
                .enumerate()
                .flat_map(|(i, &size)| std::iter::repeat_n(i, size))
                .collect();
            let mut edges = Vec::new();
            for u in 0..n {
                edges.extend((u + 1..n).filter(|&v| part_of[u] != part_of[v]).map(|v| (u, v)));
            }
            Graph::build(n, &edges)?
        }
        FamilySpec::Star(n) => Graph::build(*n, &(1..*n).map(|i| (0, i)).collect::<Vec<_>>())?,
        FamilySpec::Bistar(r, s) => {
            let mut edges = vec![(0, *r)];
            edges.extend((1..*r).map(|i| (0, i)));
            edges.extend((r + 1..r + s).map(|i| (*r, i)));
            Graph::build(n, &edges)?
        }
        FamilySpec::Johnson(ground, k) => {
            let verts = colex_subsets(*ground, *k);
            let mut edges = Vec::new();
            for (i, &x) in verts.iter().enumerate() {
                for (j, &y) in verts.iter().enumerate().skip(i + 1) {
                    if (x & y).count_ones() as usize == k - 1 {
                        edges.push((i, j));
                    }
                }
            }
            Graph::build(verts.len(), &edges)?
        }
        FamilySpec::HGraph(a, b) => {
            let mut edges: Vec<_> = (1..=*a).map(|i| (0, i)).collect();
            edges.extend((1..=*b).map(|i| (i, a + i)));
            Graph::build(n, &edges)?
        }
        FamilySpec::GkGraph(k) => {
            let mut edges: Vec<_> = (1..n).map(|x| (0, x)).collect();
            for w in 0..(1usize << k) {
                for j in 1..=*k {
                    if w >> (k - j) & 1 == 1 {
                        edges.push((j, k + 1 + w));
                    }
                }
            }
            Graph::build(n, &edges)?
        }
        FamilySpec::Complement(inner) => generate(inner)?.complement(),
    };
    Ok(g.with_name(spec.display_name()))
}
