//! Brute-force harnesses for theorems, bounds and open conjectures over
//! small graph corpora.
//!
//! Every corpus is cut into chunks that are evaluated in parallel and merged
//! in chunk order, so reports do not depend on the worker count.

use rayon::prelude::*;
use serde::Serialize;

use crate::apfree::path_eqdim;
use crate::distance::all_pairs_distances;
use crate::enumerate::{connected_masks_in, edge_mask_count, enumerate_trees, graph_from_edge_mask, CONNECTED_LIMIT};
use crate::equalizer::{eqdim_exact, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::generators::{generate, FamilySpec};
use crate::graph::Graph;
use crate::io::{parse_graph6, write_graph6};
use crate::resolving::{dim_exact, psi_exact};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// A theorem checked with no counterexample.
    Holds,
    /// A conjecture with no counterexample on the corpus.
    Open,
    Counterexample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// eqdim(T) <= eqdim(P_n) for trees of order n.
    TreeConjecture,
    /// psi <= dim + eqdim.
    PsiConjecture,
    /// 4 <= eqdim(G) + eqdim(co-G) <= n + 1 and eqdim(co-G) <= delta(G) + 1.
    NordhausGaddum,
    /// The extremal characterizations of eqdim in {1, 2, n-2, n-1}.
    Characterization,
}

impl Claim {
    pub fn id(&self) -> &'static str {
        match self {
            Claim::TreeConjecture => "tree-conjecture",
            Claim::PsiConjecture => "psi-conjecture",
            Claim::NordhausGaddum => "nordhaus-gaddum",
            Claim::Characterization => "characterization",
        }
    }

    /// Whether the claim is proved (so "no counterexample" means "holds").
    fn is_theorem(&self, corpus: &Corpus) -> bool {
        match self {
            Claim::TreeConjecture => false,
            Claim::PsiConjecture => matches!(corpus, Corpus::Trees { .. }),
            Claim::NordhausGaddum | Claim::Characterization => true,
        }
    }

    /// Evaluates the claim on one graph.
    pub fn evaluate(&self, g: &Graph, budget: u64) -> Result<Outcome> {
        let n = g.order();
        match self {
            Claim::TreeConjecture => {
                if !g.is_tree() {
                    return Ok(Outcome::Skipped);
                }
                let e = eqdim_exact(g, budget)?;
                let p = path_eqdim(n)?;
                Ok(if e.value > p {
                    Outcome::Violation(format!(
                        "eqdim(T)={} > eqdim(P_{n})={p}, witness {:?}",
                        e.value,
                        e.witness.to_one_based()
                    ))
                } else if e.value == p {
                    Outcome::Equality(format!("eqdim(T)=eqdim(P_{n})={p}"))
                } else {
                    Outcome::Pass
                })
            }
            Claim::PsiConjecture => {
                if n < 2 {
                    return Ok(Outcome::Skipped);
                }
                let psi = psi_exact(g, budget)?.value;
                let dim = dim_exact(g, budget)?.value;
                let eq = eqdim_exact(g, budget)?.value;
                let msg = format!("psi={psi}, dim={dim}, eqdim={eq}");
                Ok(if psi > dim + eq || psi < dim {
                    Outcome::Violation(msg)
                } else if psi == dim + eq {
                    Outcome::Equality(msg)
                } else {
                    Outcome::Pass
                })
            }
            Claim::NordhausGaddum => {
                let co = g.complement();
                if n < 2 || !g.is_connected() || !co.is_connected() {
                    return Ok(Outcome::Skipped);
                }
                let a = eqdim_exact(g, budget)?.value;
                let b = eqdim_exact(&co, budget)?.value;
                let delta = g.min_degree();
                let msg = format!("eqdim(G)={a}, eqdim(co-G)={b}, delta(G)={delta}");
                Ok(if a + b < 4 || a + b > n + 1 || b > delta + 1 {
                    Outcome::Violation(msg)
                } else if a + b == 4 || a + b == n + 1 {
                    Outcome::Equality(msg)
                } else {
                    Outcome::Pass
                })
            }
            Claim::Characterization => {
                if n < 2 {
                    return Ok(Outcome::Skipped);
                }
                let e = eqdim_exact(g, budget)?.value;
                let delta = g.max_degree();
                let mut bad = Vec::new();
                if (e == 1) != (delta == n - 1) {
                    bad.push("eqdim=1 iff max degree n-1");
                }
                if (e == 2) != (delta == n - 2) {
                    bad.push("eqdim=2 iff max degree n-2");
                }
                if (e == n - 1) != (n == 2) {
                    bad.push("eqdim=n-1 iff P_2");
                }
                if n >= 3 && (e == n - 2) != is_small_path_or_cycle(g) {
                    bad.push("eqdim=n-2 iff P_3..P_6, C_3..C_5");
                }
                if n >= 7 && !(1..=n - 3).contains(&e) {
                    bad.push("1 <= eqdim <= n-3");
                }
                Ok(if bad.is_empty() {
                    Outcome::Pass
                } else {
                    Outcome::Violation(format!("eqdim={e}, max degree={delta}: {}", bad.join("; ")))
                })
            }
        }
    }
}

/// P_3, P_4, P_5, P_6, C_3, C_4 or C_5 (connected graphs only).
fn is_small_path_or_cycle(g: &Graph) -> bool {
    let n = g.order();
    let m = g.edge_count();
    g.is_connected() && g.max_degree() <= 2 && ((m == n - 1 && (3..=6).contains(&n)) || (m == n && (3..=5).contains(&n)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Skipped,
    Pass,
    Equality(String),
    Violation(String),
}

/// Graphs a harness runs over.
#[derive(Clone, Debug)]
pub enum Corpus {
    /// All labeled connected graphs with `n_min <= n <= n_max`.
    Connected { n_min: usize, n_max: usize },
    /// All unlabeled trees with `n_min <= n <= n_max`.
    Trees { n_min: usize, n_max: usize },
    /// An explicit list, typically read from a graph6 stream.
    External(Vec<Graph>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusInfo {
    pub description: String,
    pub class: &'static str,
    pub labeled: bool,
    pub n_min: usize,
    pub n_max: usize,
}

impl Corpus {
    pub fn info(&self) -> CorpusInfo {
        match self {
            Corpus::Connected { n_min, n_max } => CorpusInfo {
                description: format!("labeled connected graphs, {n_min} <= n <= {n_max}"),
                class: "connected",
                labeled: true,
                n_min: *n_min,
                n_max: *n_max,
            },
            Corpus::Trees { n_min, n_max } => CorpusInfo {
                description: format!("unlabeled trees, {n_min} <= n <= {n_max}"),
                class: "trees",
                labeled: false,
                n_min: *n_min,
                n_max: *n_max,
            },
            Corpus::External(gs) => CorpusInfo {
                description: format!("{} graphs from input", gs.len()),
                class: "external",
                labeled: true,
                n_min: gs.iter().map(Graph::order).min().unwrap_or(0),
                n_max: gs.iter().map(Graph::order).max().unwrap_or(0),
            },
        }
    }

    fn chunks(&self) -> Result<Vec<Chunk<'_>>> {
        const MASK_CHUNK: u64 = 1 << 14;
        const LIST_CHUNK: usize = 16;
        let mut out = Vec::new();
        match self {
            Corpus::Connected { n_min, n_max } => {
                if *n_max > CONNECTED_LIMIT {
                    return Err(Error::TooLarge {
                        n: *n_max,
                        limit: CONNECTED_LIMIT,
                    });
                }
                for n in (*n_min).max(1)..=*n_max {
                    let total = edge_mask_count(n);
                    let mut lo = 0;
                    while lo < total {
                        let hi = (lo + MASK_CHUNK).min(total);
                        out.push(Chunk::Masks(n, lo..hi));
                        lo = hi;
                    }
                }
            }
            Corpus::Trees { n_min, n_max } => {
                for n in (*n_min).max(1)..=*n_max {
                    let trees = enumerate_trees(n)?;
                    for c in trees.chunks(LIST_CHUNK) {
                        out.push(Chunk::Owned(c.to_vec()));
                    }
                }
            }
            Corpus::External(gs) => {
                for c in gs.chunks(LIST_CHUNK) {
                    out.push(Chunk::Borrowed(c));
                }
            }
        }
        Ok(out)
    }
}

enum Chunk<'a> {
    Masks(usize, std::ops::Range<u64>),
    Owned(Vec<Graph>),
    Borrowed(&'a [Graph]),
}

impl Chunk<'_> {
    fn for_each(&self, mut f: impl FnMut(&Graph) -> Result<()>) -> Result<()> {
        match self {
            Chunk::Masks(n, r) => {
                for m in connected_masks_in(*n, r.clone()) {
                    f(&graph_from_edge_mask(*n, m))?;
                }
            }
            Chunk::Owned(gs) => gs.iter().try_for_each(f)?,
            Chunk::Borrowed(gs) => gs.iter().try_for_each(f)?,
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub graph6: String,
    pub n: usize,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarnessReport {
    pub claim: String,
    pub corpus: CorpusInfo,
    pub checked: u64,
    pub skipped: u64,
    pub counterexamples: Vec<Finding>,
    pub equality_count: u64,
    /// The first few equality cases in corpus order.
    pub equality_cases: Vec<Finding>,
    pub status: Status,
}

/// Number of equality cases kept verbatim in a report.
pub const EQUALITY_SAMPLE: usize = 25;

#[derive(Clone, Copy, Debug)]
pub struct HarnessConfig {
    /// Worker threads; 0 means the rayon default.
    pub workers: usize,
    pub budget: u64,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            workers: 0,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Default)]
struct Partial {
    checked: u64,
    skipped: u64,
    counterexamples: Vec<Finding>,
    equality_count: u64,
    equality_cases: Vec<Finding>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.counterexamples.extend(other.counterexamples);
        self.equality_count += other.equality_count;
        let room = EQUALITY_SAMPLE - self.equality_cases.len();
        self.equality_cases.extend(other.equality_cases.into_iter().take(room));
        self
    }
}

fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidInput(e.to_string()))?;
    Ok(pool.install(f))
}

/// Runs `claim` over every graph of `corpus`.
pub fn run_harness(claim: Claim, corpus: &Corpus, cfg: &HarnessConfig) -> Result<HarnessReport> {
    let chunks = corpus.chunks()?;
    let budget = cfg.budget;
    let partials: Vec<Result<Partial>> = with_workers(cfg.workers, || {
        chunks
            .par_iter()
            .map(|chunk| {
                let mut p = Partial::default();
                chunk.for_each(|g| {
                    let finding = |details: String| Finding {
                        graph6: write_graph6(g),
                        n: g.order(),
                        details,
                    };
                    match claim.evaluate(g, budget)? {
                        Outcome::Skipped => p.skipped += 1,
                        Outcome::Pass => p.checked += 1,
                        Outcome::Equality(d) => {
                            p.checked += 1;
                            p.equality_count += 1;
                            if p.equality_cases.len() < EQUALITY_SAMPLE {
                                p.equality_cases.push(finding(d));
                            }
                        }
                        Outcome::Violation(d) => {
                            p.checked += 1;
                            p.counterexamples.push(finding(d));
                        }
                    }
                    Ok(())
                })?;
                Ok(p)
            })
            .collect()
    })?;
    let mut total = Partial::default();
    for p in partials {
        total = total.merge(p?);
    }
    let status = if !total.counterexamples.is_empty() {
        Status::Counterexample
    } else if claim.is_theorem(corpus) {
        Status::Holds
    } else {
        Status::Open
    };
    Ok(HarnessReport {
        claim: claim.id().to_string(),
        corpus: corpus.info(),
        checked: total.checked,
        skipped: total.skipped,
        counterexamples: total.counterexamples,
        equality_count: total.equality_count,
        equality_cases: total.equality_cases,
        status,
    })
}

/// Re-runs one reported counterexample from its graph6 string; true when the
/// violation reproduces.
pub fn reverify(claim: Claim, graph6: &str, budget: u64) -> Result<bool> {
    let g = parse_graph6(graph6)?;
    Ok(matches!(claim.evaluate(&g, budget)?, Outcome::Violation(_)))
}

pub fn check_tree_conjecture(n_max: usize, cfg: &HarnessConfig) -> Result<HarnessReport> {
    run_harness(Claim::TreeConjecture, &Corpus::Trees { n_min: 1, n_max }, cfg)
}

pub fn check_psi_conjecture(corpus: &Corpus, cfg: &HarnessConfig) -> Result<HarnessReport> {
    run_harness(Claim::PsiConjecture, corpus, cfg)
}

/// Checks the bounds on graphs whose complement is also connected; other
/// graphs count as skipped.
pub fn check_nordhaus_gaddum(corpus: &Corpus, cfg: &HarnessConfig) -> Result<HarnessReport> {
    run_harness(Claim::NordhausGaddum, corpus, cfg)
}

pub fn check_characterization(n_max: usize, cfg: &HarnessConfig) -> Result<HarnessReport> {
    run_harness(Claim::Characterization, &Corpus::Connected { n_min: 2, n_max }, cfg)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightnessCase {
    pub graph: String,
    pub n: usize,
    pub eqdim: usize,
    pub complement_eqdim: usize,
    pub sum: usize,
    pub expected: usize,
    pub ok: bool,
}

/// C_5 reaches the upper bound n + 1; K_2(2, n-2) reaches the lower bound 4.
pub fn nordhaus_gaddum_tightness(n_max: usize, budget: u64) -> Result<Vec<TightnessCase>> {
    let mut specs = vec![(FamilySpec::Cycle(5), 6)];
    for n in 4..=n_max {
        specs.push((FamilySpec::Bistar(2, n - 2), 4));
    }
    specs
        .into_iter()
        .map(|(spec, expected)| {
            let g = generate(&spec)?;
            let a = eqdim_exact(&g, budget)?.value;
            let b = eqdim_exact(&g.complement(), budget)?.value;
            Ok(TightnessCase {
                graph: spec.display_name(),
                n: g.order(),
                eqdim: a,
                complement_eqdim: b,
                sum: a + b,
                expected,
                ok: a + b == expected,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaRow {
    pub graph: String,
    pub n: usize,
    pub dim: usize,
    pub eqdim: usize,
    pub sum: usize,
    /// `>= 3n/2 - 3` for complete bipartite rows, `<= k + 2` for `G_k`.
    pub bound: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaReport {
    #[serde(flatten)]
    pub report: HarnessReport,
    pub rows: Vec<SigmaRow>,
}

/// Evaluates `dim + eqdim` on `K_{n/2 floor, n/2 ceil}` for `4 <= n <= n_max`
/// and on `G_k` for `1 <= k <= k_max`.
pub fn check_sigma_bounds(n_max: usize, k_max: usize, cfg: &HarnessConfig) -> Result<SigmaReport> {
    let mut jobs: Vec<(FamilySpec, bool)> = (4..=n_max)
        .map(|n| (FamilySpec::CompleteMultipartite(vec![n / 2, n - n / 2]), true))
        .collect();
    jobs.extend((1..=k_max).map(|k| (FamilySpec::GkGraph(k), false)));
    let budget = cfg.budget;
    let rows: Vec<Result<(SigmaRow, String)>> = with_workers(cfg.workers, || {
        jobs.par_iter()
            .map(|(spec, big)| {
                let g = generate(spec)?;
                let n = g.order();
                let dim = dim_exact(&g, budget)?.value;
                let eqdim = eqdim_exact(&g, budget)?.value;
                let sum = dim + eqdim;
                let (bound, ok) = if *big {
                    (format!(">= {}", (3 * n).saturating_sub(6) as f64 / 2.0), 2 * sum + 6 >= 3 * n)
                } else {
                    let FamilySpec::GkGraph(k) = spec else { unreachable!() };
                    (format!("<= {}", k + 2), sum <= k + 2)
                };
                Ok((
                    SigmaRow {
                        graph: spec.display_name(),
                        n,
                        dim,
                        eqdim,
                        sum,
                        bound,
                        ok,
                    },
                    write_graph6(&g),
                ))
            })
            .collect()
    })?;
    let mut out = Vec::new();
    let mut counterexamples = Vec::new();
    for r in rows {
        let (row, g6) = r?;
        if !row.ok {
            counterexamples.push(Finding {
                graph6: g6,
                n: row.n,
                details: format!("{}: dim+eqdim={} violates {}", row.graph, row.sum, row.bound),
            });
        }
        out.push(row);
    }
    let status = if counterexamples.is_empty() {
        Status::Holds
    } else {
        Status::Counterexample
    };
    Ok(SigmaReport {
        report: HarnessReport {
            claim: "sigma-bounds".into(),
            corpus: CorpusInfo {
                description: format!("K_{{n/2,n/2}} for 4 <= n <= {n_max}; G_k for 1 <= k <= {k_max}"),
                class: "families",
                labeled: true,
                n_min: 4.min(n_max),
                n_max: out.iter().map(|r| r.n).max().unwrap_or(0),
            },
            checked: out.len() as u64,
            skipped: 0,
            counterexamples,
            equality_count: 0,
            equality_cases: Vec::new(),
            status,
        },
        rows: out,
    })
}

/// Checks that the distance matrix of every corpus graph is a metric.
pub fn check_triangle_inequality(corpus: &Corpus) -> Result<u64> {
    let mut bad = 0;
    for chunk in corpus.chunks()? {
        chunk.for_each(|g| {
            let d = all_pairs_distances(g)?;
            let n = g.order();
            for u in 0..n {
                for v in 0..n {
                    for w in 0..n {
                        if d.get(u, v) > d.get(u, w) + d.get(w, v) {
                            bad += 1;
                        }
                    }
                }
            }
            Ok(())
        })?;
    }
    Ok(bad)
}
