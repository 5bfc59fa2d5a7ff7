use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use eqdim::apfree::{is_diagonal_dominating, path_equalizer, r_table, IntSet};
use eqdim::bitset::VertexSet;
use eqdim::conjectures::{
    check_characterization, check_nordhaus_gaddum, check_psi_conjecture, check_sigma_bounds, check_tree_conjecture,
    nordhaus_gaddum_tightness, Corpus, HarnessConfig, HarnessReport, Status,
};
use eqdim::distance::all_pairs_distances;
use eqdim::enumerate::graph6_stream;
use eqdim::equalizer::{eqdim_exact, DEFAULT_BUDGET};
use eqdim::families::{family_eqdim, table_row, FamilyResult, FamilyValue, TableRow};
use eqdim::generators::{generate, FamilySpec};
use eqdim::graph::Graph;
use eqdim::io::parse_edge_list;
use eqdim::report::{bounds_report, compute_report, verify_report, GraphReport};
use eqdim::resolving::{dim_exact, doubly_from_eqdim, doubly_with_distances, psi_exact, verify_doubly_resolving};

/// Exact equidistant dimension of graphs.
#[derive(Parser)]
#[command(name = "eqdim", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format (each subcommand has its own default).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Node-expansion limit for exact searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Human,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Family spec such as `path:8`, `multipartite:2,3,3` or `johnson:5,2`.
    #[arg(long)]
    family: Option<FamilySpec>,
    /// graph6 file, one graph per line; `-` reads standard input.
    #[arg(long)]
    graph6: Option<String>,
    /// Edge list file: `u v` per line (0-based), optional `n m` header.
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Args)]
struct SetArg {
    /// Vertex set, 1-based, comma separated.
    #[arg(long, value_delimiter = ',')]
    set: Vec<usize>,
    /// Use the complement of `--set`.
    #[arg(long)]
    complement: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact eqdim with bounds and a witness.
    Compute {
        #[command(flatten)]
        src: Source,
    },
    /// Check whether a set is a distance-equalizer set.
    Verify {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        set: SetArg,
    },
    /// Lower and upper bounds on eqdim.
    Bounds {
        #[command(flatten)]
        src: Source,
    },
    /// Closed-form eqdim of a family instance, with a verified witness.
    Family {
        #[arg(long)]
        family: FamilySpec,
    },
    /// eqdim of paths and cycles for n = 3..=n-max.
    Table {
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        /// Extra orders appended after n-max.
        #[arg(long, value_delimiter = ',')]
        extra: Vec<usize>,
        /// Also solve each graph exactly and compare.
        #[arg(long)]
        search: bool,
    },
    /// r(n), the largest 3-AP-free subset of [n], for n = 1..=n-max.
    RTable {
        #[arg(long, default_value_t = 25)]
        n_max: usize,
    },
    /// Minimum diagonal dominating queen sets for n = 1..=n-max.
    Queens {
        #[arg(long, default_value_t = 14)]
        n_max: usize,
    },
    /// Doubly resolving sets: psi, dim, eqdim and the combined construction,
    /// or verification of `--set`.
    Doubly {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        set: SetArg,
    },
    /// Run a brute-force harness over a small-graph corpus.
    Conjecture {
        #[arg(value_enum)]
        claim: ClaimArg,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        /// Corpus class for generated corpora.
        #[arg(long, value_enum, default_value_t = Class::Connected)]
        class: Class,
        /// Read the corpus as a graph6 stream instead (`-` for stdin).
        #[arg(long)]
        graph6: Option<String>,
        /// Largest k for the G_k rows of `sigma`.
        #[arg(long, default_value_t = 3)]
        k_max: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClaimArg {
    Trees,
    Psi,
    NordhausGaddum,
    Characterization,
    Sigma,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Connected,
    Trees,
}

enum Failure {
    Input(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.workers > 0 {
        // ignore the error if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build_global();
    }
    let mut out = String::new();
    let res = run(&cli, &mut out);
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    let _ = lock.write_all(out.as_bytes());
    let _ = lock.flush();
    match res {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, out: &mut String) -> Outcome {
    let cfg = HarnessConfig {
        workers: cli.workers,
        budget: cli.budget,
    };
    match &cli.cmd {
        Cmd::Compute { src } => {
            let fmt = cli.format.unwrap_or(Format::Json);
            for g in load(src)? {
                let r = compute_report(&g, cli.budget)?;
                graph_report(out, fmt, &r);
            }
            Ok(true)
        }
        Cmd::Bounds { src } => {
            let fmt = cli.format.unwrap_or(Format::Json);
            for g in load(src)? {
                graph_report(out, fmt, &bounds_report(&g)?);
            }
            Ok(true)
        }
        Cmd::Verify { src, set } => {
            let fmt = cli.format.unwrap_or(Format::Json);
            let mut all = true;
            for g in load(src)? {
                let s = parse_set(&g, set)?;
                let (r, _) = verify_report(&g, &s)?;
                all &= r.valid == Some(true);
                graph_report(out, fmt, &r);
            }
            Ok(all)
        }
        Cmd::Family { family } => {
            let r = family_eqdim(family)?;
            family_out(out, cli.format.unwrap_or(Format::Json), &r);
            Ok(r.verified)
        }
        Cmd::Table { n_max, extra, search } => {
            let mut ns: Vec<usize> = (3..=*n_max).collect();
            ns.extend(extra.iter().copied().filter(|&n| n >= 3));
            let rows = ns
                .iter()
                .map(|&n| table_row(n, *search, cli.budget))
                .collect::<Result<Vec<_>, _>>()?;
            table_out(out, cli.format.unwrap_or(Format::Tsv), &rows);
            Ok(rows.iter().all(|r| r.consistent))
        }
        Cmd::RTable { n_max } => {
            let rows = r_table(*n_max)?;
            match cli.format.unwrap_or(Format::Tsv) {
                Format::Json => json_line(out, &rows),
                Format::Tsv => {
                    out.push_str("n\tr\twitness\n");
                    for r in &rows {
                        let _ = writeln!(out, "{}\t{}\t{}", r.n, r.r_value, join(r.witness.members()));
                    }
                }
                Format::Human => {
                    for r in &rows {
                        let _ = writeln!(out, "r({}) = {}  {{{}}}", r.n, r.r_value, join(r.witness.members()));
                    }
                }
            }
            Ok(true)
        }
        Cmd::Queens { n_max } => queens(out, cli.format.unwrap_or(Format::Tsv), *n_max),
        Cmd::Doubly { src, set } => {
            let fmt = cli.format.unwrap_or(Format::Json);
            let mut all = true;
            for g in load(src)? {
                all &= doubly(out, fmt, &g, set, cli.budget)?;
            }
            Ok(all)
        }
        Cmd::Conjecture {
            claim,
            n_max,
            n_min,
            class,
            graph6,
            k_max,
        } => {
            let fmt = cli.format.unwrap_or(Format::Json);
            let corpus = match graph6 {
                Some(path) => Corpus::External(read_graph6(path)?),
                None => match class {
                    Class::Connected => Corpus::Connected {
                        n_min: *n_min,
                        n_max: *n_max,
                    },
                    Class::Trees => Corpus::Trees {
                        n_min: *n_min,
                        n_max: *n_max,
                    },
                },
            };
            let report = match claim {
                ClaimArg::Trees => match graph6 {
                    Some(_) => eqdim::conjectures::run_harness(eqdim::conjectures::Claim::TreeConjecture, &corpus, &cfg)?,
                    None => check_tree_conjecture(*n_max, &cfg)?,
                },
                ClaimArg::Psi => check_psi_conjecture(&corpus, &cfg)?,
                ClaimArg::NordhausGaddum => {
                    let r = check_nordhaus_gaddum(&corpus, &cfg)?;
                    let tight = nordhaus_gaddum_tightness((*n_max).max(4), cli.budget)?;
                    let ok = tight.iter().all(|t| t.ok);
                    match fmt {
                        Format::Json => {
                            #[derive(Serialize)]
                            struct Ng<'a> {
                                #[serde(flatten)]
                                report: &'a HarnessReport,
                                tightness: &'a [eqdim::conjectures::TightnessCase],
                            }
                            json_line(out, &Ng { report: &r, tightness: &tight });
                        }
                        _ => {
                            harness_out(out, fmt, &r);
                            for t in &tight {
                                let _ = writeln!(
                                    out,
                                    "tightness\t{}\t{}+{}={}\texpected {}\t{}",
                                    t.graph,
                                    t.eqdim,
                                    t.complement_eqdim,
                                    t.sum,
                                    t.expected,
                                    if t.ok { "ok" } else { "FAILED" }
                                );
                            }
                        }
                    }
                    return Ok(ok && r.status != Status::Counterexample);
                }
                ClaimArg::Characterization => match graph6 {
                    Some(_) => eqdim::conjectures::run_harness(eqdim::conjectures::Claim::Characterization, &corpus, &cfg)?,
                    None => check_characterization(*n_max, &cfg)?,
                },
                ClaimArg::Sigma => {
                    let r = check_sigma_bounds(*n_max, *k_max, &cfg)?;
                    match fmt {
                        Format::Json => json_line(out, &r),
                        _ => {
                            harness_out(out, fmt, &r.report);
                            for row in &r.rows {
                                let _ = writeln!(
                                    out,
                                    "{}\tn={}\tdim={}\teqdim={}\tsum={}\t{}\t{}",
                                    row.graph,
                                    row.n,
                                    row.dim,
                                    row.eqdim,
                                    row.sum,
                                    row.bound,
                                    if row.ok { "ok" } else { "FAILED" }
                                );
                            }
                        }
                    }
                    return Ok(r.report.status != Status::Counterexample);
                }
            };
            harness_out(out, fmt, &report);
            Ok(report.status != Status::Counterexample)
        }
    }
}

fn load(src: &Source) -> Result<Vec<Graph>, Failure> {
    if let Some(spec) = &src.family {
        return Ok(vec![generate(spec)?]);
    }
    if let Some(path) = &src.graph6 {
        let gs = read_graph6(path)?;
        if gs.is_empty() {
            return Err(Failure::Input("no graphs in graph6 input".into()));
        }
        return Ok(gs);
    }
    if let Some(path) = &src.edges {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        return Ok(vec![parse_edge_list(&text)?]);
    }
    Err(Failure::Input("no input graph".into()))
}

fn read_graph6(path: &str) -> Result<Vec<Graph>, Failure> {
    let gs = if path == "-" {
        graph6_stream(io::stdin().lock()).collect::<Result<Vec<_>, _>>()?
    } else {
        let f = File::open(path).map_err(|e| format!("{path}: {e}"))?;
        graph6_stream(BufReader::new(f)).collect::<Result<Vec<_>, _>>()?
    };
    Ok(gs)
}

fn parse_set(g: &Graph, arg: &SetArg) -> Result<VertexSet, Failure> {
    let n = g.order();
    let mut s = VertexSet::empty(n);
    for &v in &arg.set {
        if v == 0 || v > n {
            return Err(Failure::Input(format!("vertex {v} outside 1..={n}")));
        }
        s.insert(v - 1);
    }
    Ok(if arg.complement { s.complement() } else { s })
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn json_line<T: Serialize>(out: &mut String, v: &T) {
    out.push_str(&serde_json::to_string(v).expect("serializable"));
    out.push('\n');
}

fn graph_report(out: &mut String, fmt: Format, r: &GraphReport) {
    match fmt {
        Format::Json => json_line(out, r),
        Format::Tsv => {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.graph,
                r.n,
                r.eqdim.map_or("-".into(), |v| v.to_string()),
                r.valid.map_or("-".into(), |v| v.to_string()),
                r.best_lower,
                r.best_upper,
                join(&r.witness_1based)
            );
        }
        Format::Human => {
            let _ = writeln!(out, "{} (n = {})", r.graph, r.n);
            if let Some(v) = r.eqdim {
                let _ = writeln!(out, "eqdim = {v}");
                let _ = writeln!(out, "witness = {{{}}}", join(&r.witness_1based));
            }
            if let Some(v) = r.valid {
                let _ = writeln!(out, "{{{}}} is {}a distance-equalizer set", join(&r.witness_1based), if v { "" } else { "not " });
                if let Some((x, y)) = r.failing_pair_1based {
                    let _ = writeln!(out, "no member is equidistant from {x} and {y}");
                }
            }
            let _ = writeln!(out, "bounds: {} <= eqdim <= {}", r.best_lower, r.best_upper);
            for (k, v) in &r.lower {
                let _ = writeln!(out, "  lower {k}: {v}");
            }
            for (k, v) in &r.upper {
                let _ = writeln!(out, "  upper {k}: {v}");
            }
        }
    }
}

fn value_text(v: &FamilyValue) -> String {
    match *v {
        FamilyValue::Exact { value } => value.to_string(),
        FamilyValue::UpperBound { value } => format!("<={value}"),
        FamilyValue::Interval { lower, upper } => format!("{lower}..{upper}"),
    }
}

fn family_out(out: &mut String, fmt: Format, r: &FamilyResult) {
    let one_based = r.witness.to_one_based();
    match fmt {
        Format::Json => {
            #[derive(Serialize)]
            struct F<'a> {
                #[serde(flatten)]
                r: &'a FamilyResult,
                witness_1based: &'a [usize],
            }
            json_line(out, &F { r, witness_1based: &one_based });
        }
        Format::Tsv => {
            let _ = writeln!(out, "{}\t{}\t{}\t{}\t{}", r.graph, r.n, value_text(&r.value), r.verified, join(&one_based));
        }
        Format::Human => {
            let _ = writeln!(out, "{} (n = {}): eqdim {}", r.graph, r.n, value_text(&r.value));
            let _ = writeln!(out, "witness = {{{}}} ({})", join(&one_based), if r.verified { "verified" } else { "NOT verified" });
            let _ = writeln!(out, "source: {}", r.source);
        }
    }
}

fn table_out(out: &mut String, fmt: Format, rows: &[TableRow]) {
    match fmt {
        Format::Json => json_line(out, &rows),
        Format::Tsv | Format::Human => {
            out.push_str("n\tr(ceil(n/2))\teqdim(P_n)\teqdim(C_n)");
            let search = rows.iter().any(|r| r.path_search.is_some());
            if search {
                out.push_str("\tsearch(P_n)\tsearch(C_n)\tconsistent");
            }
            out.push('\n');
            for r in rows {
                let _ = write!(out, "{}\t{}\t{}\t{}", r.n, r.r_half, r.path_formula, value_text(&r.cycle));
                if search {
                    let opt = |v: Option<usize>| v.map_or("-".into(), |v| v.to_string());
                    let _ = write!(out, "\t{}\t{}\t{}", opt(r.path_search), opt(r.cycle_search), r.consistent);
                }
                out.push('\n');
            }
        }
    }
}

fn queens(out: &mut String, fmt: Format, n_max: usize) -> Outcome {
    #[derive(Serialize)]
    struct Row {
        n: usize,
        diag: usize,
        queens: Vec<usize>,
        dominating: bool,
    }
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let q = if n == 1 {
            IntSet::new(1, [1])?
        } else {
            IntSet::from_vertex_set(&path_equalizer(n)?)
        };
        rows.push(Row {
            n,
            diag: q.len(),
            dominating: is_diagonal_dominating(&q, n),
            queens: q.members().to_vec(),
        });
    }
    match fmt {
        Format::Json => json_line(out, &rows),
        Format::Tsv => {
            out.push_str("n\tdiag\tqueens\tdominating\n");
            for r in &rows {
                let _ = writeln!(out, "{}\t{}\t{}\t{}", r.n, r.diag, join(&r.queens), r.dominating);
            }
        }
        Format::Human => {
            for r in &rows {
                let _ = writeln!(out, "diag({}) = {}  queens on ({{{}}})", r.n, r.diag, join(&r.queens));
            }
        }
    }
    Ok(rows.iter().all(|r| r.dominating))
}

fn doubly(out: &mut String, fmt: Format, g: &Graph, set: &SetArg, budget: u64) -> Outcome {
    if !set.set.is_empty() || set.complement {
        let s = parse_set(g, set)?;
        let cert = verify_doubly_resolving(g, &s)?;
        #[derive(Serialize)]
        struct V<'a> {
            graph: String,
            n: usize,
            set: Vec<usize>,
            set_1based: Vec<usize>,
            #[serde(flatten)]
            cert: &'a eqdim::resolving::DoublyResolvingCertificate,
        }
        let v = V {
            graph: g.display_name(),
            n: g.order(),
            set: s.to_vec(),
            set_1based: s.to_one_based(),
            cert: &cert,
        };
        match fmt {
            Format::Json => json_line(out, &v),
            _ => {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{{{}}}\t{}",
                    v.graph,
                    v.n,
                    join(&v.set_1based),
                    if cert.valid { "doubly resolving" } else { "not doubly resolving" }
                );
            }
        }
        return Ok(cert.valid);
    }

    #[derive(Serialize)]
    struct D {
        graph: String,
        n: usize,
        dim: usize,
        eqdim: usize,
        psi: usize,
        dim_witness_1based: Vec<usize>,
        eqdim_witness_1based: Vec<usize>,
        psi_witness_1based: Vec<usize>,
        construction_1based: Vec<usize>,
        construction_extra_1based: Vec<usize>,
        construction_valid: bool,
        psi_le_dim_plus_eqdim: bool,
    }
    let dim = dim_exact(g, budget)?;
    let eq = eqdim_exact(g, budget)?;
    let psi = psi_exact(g, budget)?;
    let built = doubly_from_eqdim(g, &dim.witness, &eq.witness)?;
    let d = all_pairs_distances(g)?;
    let valid = built.set.len() >= 2 && doubly_with_distances(&d, &built.set).valid;
    let r = D {
        graph: g.display_name(),
        n: g.order(),
        dim: dim.value,
        eqdim: eq.value,
        psi: psi.value,
        dim_witness_1based: dim.witness.to_one_based(),
        eqdim_witness_1based: eq.witness.to_one_based(),
        psi_witness_1based: psi.witness.to_one_based(),
        construction_1based: built.set.to_one_based(),
        construction_extra_1based: built.extra.to_one_based(),
        construction_valid: valid,
        psi_le_dim_plus_eqdim: psi.value <= dim.value + eq.value,
    };
    match fmt {
        Format::Json => json_line(out, &r),
        Format::Tsv => {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.graph,
                r.n,
                r.dim,
                r.eqdim,
                r.psi,
                join(&r.construction_1based),
                r.construction_valid
            );
        }
        Format::Human => {
            let _ = writeln!(out, "{} (n = {})", r.graph, r.n);
            let _ = writeln!(out, "dim = {}  {{{}}}", r.dim, join(&r.dim_witness_1based));
            let _ = writeln!(out, "eqdim = {}  {{{}}}", r.eqdim, join(&r.eqdim_witness_1based));
            let _ = writeln!(out, "psi = {}  {{{}}}", r.psi, join(&r.psi_witness_1based));
            let _ = writeln!(
                out,
                "construction {{{}}} ({} vertices, {})",
                join(&r.construction_1based),
                r.construction_1based.len(),
                if r.construction_valid { "doubly resolving" } else { "NOT doubly resolving" }
            );
        }
    }
    Ok(valid)
}

fn harness_out(out: &mut String, fmt: Format, r: &HarnessReport) {
    let status = match r.status {
        Status::Holds => "holds",
        Status::Open => "open (no counterexample on corpus)",
        Status::Counterexample => "counterexample",
    };
    match fmt {
        Format::Json => json_line(out, r),
        Format::Tsv => {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}",
                r.claim,
                r.corpus.description,
                r.checked,
                r.counterexamples.len(),
                r.equality_count,
                status
            );
            for c in &r.counterexamples {
                let _ = writeln!(out, "counterexample\t{}\t{}", c.graph6, c.details);
            }
        }
        Format::Human => {
            let _ = writeln!(out, "{}: {}", r.claim, status);
            let _ = writeln!(out, "corpus: {} ({} checked, {} skipped)", r.corpus.description, r.checked, r.skipped);
            let _ = writeln!(out, "equality cases: {}", r.equality_count);
            for c in &r.counterexamples {
                let _ = writeln!(out, "counterexample {} : {}", c.graph6, c.details);
            }
        }
    }
}
