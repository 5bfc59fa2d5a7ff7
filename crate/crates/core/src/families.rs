//! Closed-form equidistant dimensions of named families, each returned with
//! an explicit witness set that is checked before it is handed out.

use serde::Serialize;

use crate::apfree::{path_equalizer, r_exact};
use crate::bitset::VertexSet;
use crate::distance::all_pairs_distances;
use crate::equalizer::{eqdim_exact, verify_with_distances};
use crate::error::{Error, Result};
use crate::generators::{colex_subsets, generate, FamilySpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyValue {
    Exact { value: usize },
    UpperBound { value: usize },
    Interval { lower: usize, upper: usize },
}

impl FamilyValue {
    /// Whether `v` is consistent with this value.
    pub fn admits(&self, v: usize) -> bool {
        match *self {
            FamilyValue::Exact { value } => v == value,
            FamilyValue::UpperBound { value } => v <= value,
            FamilyValue::Interval { lower, upper } => lower <= v && v <= upper,
        }
    }

    pub fn exact(&self) -> Option<usize> {
        match *self {
            FamilyValue::Exact { value } => Some(value),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyResult {
    pub spec: String,
    pub graph: String,
    pub n: usize,
    #[serde(flatten)]
    pub value: FamilyValue,
    pub witness: VertexSet,
    pub source: &'static str,
    /// The witness passed distance-equalizer verification.
    pub verified: bool,
}

/// Closed-form `eqdim` for a family instance.
pub fn family_eqdim(spec: &FamilySpec) -> Result<FamilyResult> {
    spec.validate()?;
    let n = spec.order();
    let (value, members, source): (FamilyValue, Vec<usize>, &'static str) = match spec {
        FamilySpec::Complete(1) | FamilySpec::Path(1) => {
            (FamilyValue::Exact { value: 0 }, vec![], "single vertex")
        }
        FamilySpec::Complete(_) => (
            FamilyValue::Exact { value: 1 },
            vec![0],
            "universal vertex: eqdim = 1",
        ),
        FamilySpec::Star(_) => (
            FamilyValue::Exact { value: 1 },
            vec![0],
            "universal vertex: eqdim = 1",
        ),
        FamilySpec::GkGraph(_) => (
            FamilyValue::Exact { value: 1 },
            vec![0],
            "universal vertex: eqdim = 1",
        ),
        FamilySpec::CompleteMultipartite(parts) => multipartite(parts)?,
        FamilySpec::Bistar(r, s) => {
            let (r, s) = (*r, *s);
            // {centre b} + leaves of a has size r; {centre a} + leaves of b has size s
            let w: Vec<usize> = if r <= s {
                std::iter::once(r).chain(1..r).collect()
            } else {
                std::iter::once(0).chain(r + 1..r + s).collect()
            };
            (
                FamilyValue::Exact { value: r.min(s) },
                w,
                "bistar: eqdim(K_2(r,s)) = r, witness the smaller partite set",
            )
        }
        FamilySpec::HGraph(a, b) => (
            FamilyValue::Exact { value: b + 1 },
            std::iter::once(0).chain(a + 1..=a + b).collect(),
            "H_{a,b}: eqdim = b + 1 = n - max degree",
        ),
        FamilySpec::Path(n) => {
            let w = path_equalizer(*n)?;
            (
                FamilyValue::Exact { value: w.len() },
                w.to_vec(),
                "path: eqdim(P_n) = n - r(ceil(n/2))",
            )
        }
        FamilySpec::Cycle(n) => cycle(*n)?,
        FamilySpec::Johnson(ground, k) => {
            let (ground, k) = (*ground, *k);
            if !(ground + 1 == 2 * k || ground == 2 * k + 1 || ground > 2 * k * k) {
                return Err(Error::NoClosedForm(format!(
                    "J({ground},{k}): only n in {{2k-1, 2k+1}} or n > 2k^2 is covered"
                )));
            }
            (
                FamilyValue::UpperBound { value: ground },
                johnson_windows(ground, k),
                "Johnson window family S_i = {i, ..., i+k-1 mod n}: eqdim(J(n,k)) <= n",
            )
        }
        FamilySpec::Complement(_) => {
            return Err(Error::NoClosedForm(spec.display_name()));
        }
    };
    let g = generate(spec)?;
    let witness = VertexSet::from_indices(n, members);
    let d = all_pairs_distances(&g)?;
    let verified = verify_with_distances(&d, &witness).valid;
    Ok(FamilyResult {
        spec: spec.to_string(),
        graph: spec.display_name(),
        n,
        value,
        witness,
        source,
        verified,
    })
}

type Closed = (FamilyValue, Vec<usize>, &'static str);

fn multipartite(parts: &[usize]) -> Result<Closed> {
    let starts: Vec<usize> = parts
        .iter()
        .scan(0, |acc, &p| {
            let s = *acc;
            *acc += p;
            Some(s)
        })
        .collect();
    let smallest = *parts.iter().min().unwrap();
    match parts.len() {
        1 if parts[0] == 1 => Ok((FamilyValue::Exact { value: 0 }, vec![], "single vertex")),
        1 => Err(Error::InvalidFamily("a one-part multipartite graph is edgeless".into())),
        2 => {
            let i = if parts[0] <= parts[1] { 0 } else { 1 };
            Ok((
                FamilyValue::Exact { value: smallest },
                (starts[i]..starts[i] + parts[i]).collect(),
                "complete bipartite: eqdim(K_{r,s}) = r, witness the smaller part",
            ))
        }
        _ => {
            let first_of_size = |sz: usize| parts.iter().position(|&p| p == sz).unwrap();
            let w = match smallest {
                1 => vec![starts[first_of_size(1)]],
                2 => {
                    let i = first_of_size(2);
                    vec![starts[i], starts[i] + 1]
                }
                _ => vec![starts[0], starts[1], starts[2]],
            };
            Ok((
                FamilyValue::Exact {
                    value: smallest.min(3),
                },
                w,
                "complete multipartite: eqdim = min(n_1, 3)",
            ))
        }
    }
}

fn cycle(n: usize) -> Result<Closed> {
    if n.is_multiple_of(2) {
        if !n.is_multiple_of(4) {
            // odd labels 1, 3, ..., n-1
            Ok((
                FamilyValue::Exact { value: n / 2 },
                (0..n).step_by(2).collect(),
                "even cycle, n = 2 mod 4: eqdim = n/2, witness the odd labels",
            ))
        } else {
            let removed: Vec<usize> = (2..=n / 2 + 2).step_by(2).collect();
            Ok((
                FamilyValue::Exact {
                    value: 3 * n / 4 - 1,
                },
                (1..=n)
                    .filter(|l| !removed.contains(l))
                    .map(|l| l - 1)
                    .collect(),
                "cycle, n = 0 mod 4: eqdim = 3n/4 - 1, witness [n] minus {2, 4, ..., n/2 + 2}",
            ))
        }
    } else {
        let half = n.div_ceil(2);
        let upper = n - r_exact((n + 1).div_ceil(4))?.r_value;
        // labels (n+1)/2 < i <= n, plus a minimum equalizer of the path on 1..=(n+1)/2
        let mut w: Vec<usize> = (half..n).collect();
        w.extend(path_equalizer(half)?.iter());
        w.sort_unstable();
        Ok((
            FamilyValue::Interval {
                lower: (n - 1) / 2,
                upper,
            },
            w,
            "odd cycle: (n-1)/2 <= eqdim <= n - r(ceil((n+1)/4)); exact value unknown in closed form",
        ))
    }
}

/// Vertex indices of the windows `{i, ..., i+k-1} mod n` in `J(n,k)`.
pub fn johnson_windows(n: usize, k: usize) -> Vec<usize> {
    let verts = colex_subsets(n, k);
    let mut out: Vec<usize> = (0..n)
        .map(|i| {
            let mask = (0..k).fold(0u64, |m, j| m | 1 << ((i + j) % n));
            verts.binary_search(&mask).expect("window is a k-subset")
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    /// `r(ceil(n/2))`
    pub r_half: usize,
    pub path_formula: usize,
    pub path_search: Option<usize>,
    pub cycle: FamilyValue,
    pub cycle_search: Option<usize>,
    /// Every searched value matches its closed form or lies in its interval.
    pub consistent: bool,
}

/// One row of the path/cycle table. With `search` set, both graphs are also
/// solved exactly and compared to the closed forms.
pub fn table_row(n: usize, search: bool, budget: u64) -> Result<TableRow> {
    let r_half = r_exact(n.div_ceil(2))?.r_value;
    let path = family_eqdim(&FamilySpec::Path(n))?;
    let cyc = family_eqdim(&FamilySpec::Cycle(n))?;
    let (path_search, cycle_search) = if search {
        (
            Some(eqdim_exact(&generate(&FamilySpec::Path(n))?, budget)?.value),
            Some(eqdim_exact(&generate(&FamilySpec::Cycle(n))?, budget)?.value),
        )
    } else {
        (None, None)
    };
    let path_formula = path.value.exact().unwrap();
    let consistent = path.verified
        && cyc.verified
        && path_search.is_none_or(|v| v == path_formula)
        && cycle_search.is_none_or(|v| cyc.value.admits(v));
    Ok(TableRow {
        n,
        r_half,
        path_formula,
        path_search,
        cycle: cyc.value,
        cycle_search,
        consistent,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub rows: Vec<TableRow>,
    pub mismatches: Vec<usize>,
}

/// Cross-checks the path and cycle closed forms against exact search for
/// `3..=n_max`.
pub fn verify_family_table(n_max: usize, budget: u64) -> Result<TableReport> {
    let rows = (3..=n_max)
        .map(|n| table_row(n, true, budget))
        .collect::<Result<Vec<_>>>()?;
    let mismatches = rows.iter().filter(|r| !r.consistent).map(|r| r.n).collect();
    Ok(TableReport { rows, mismatches })
}
