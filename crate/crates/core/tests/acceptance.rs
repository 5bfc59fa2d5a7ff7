//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use eqdim::apfree::{diag_brute_force, is_3ap_free, is_even_sum, path_eqdim, r_exact, IntSet};
use eqdim::bitset::VertexSet;
use eqdim::conjectures::{
    check_characterization, check_nordhaus_gaddum, check_psi_conjecture, check_tree_conjecture,
    nordhaus_gaddum_tightness, Corpus, HarnessConfig, Status,
};
use eqdim::cover::lex_k_subsets;
use eqdim::distance::all_pairs_distances;
use eqdim::enumerate::{enumerate_connected, enumerate_trees};
use eqdim::equalizer::{bounds, eqdim_exact, is_distance_equalizer, verify_distance_equalizer, BIPARTITE_PARTITE, DEFAULT_BUDGET};
use eqdim::families::{family_eqdim, johnson_windows, FamilyValue};
use eqdim::generators::{generate, FamilySpec};
use eqdim::graph::Graph;
use eqdim::resolving::{
    dim_exact, doubly_from_eqdim, doubly_with_distances, psi_exact, resolving_with_distances, tree_psi,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fam(spec: FamilySpec) -> Graph {
    generate(&spec).unwrap()
}

fn exact(spec: FamilySpec) -> usize {
    eqdim_exact(&fam(spec), DEFAULT_BUDGET).unwrap().value
}

const TABLE_N: [usize; 19] = [3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 50];
const TABLE_R: [usize; 19] = [2, 2, 2, 2, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 10];
const TABLE_PATH: [usize; 19] = [1, 2, 3, 4, 4, 5, 5, 6, 7, 8, 9, 10, 11, 12, 12, 13, 14, 15, 40];
const TABLE_CYCLE: [usize; 19] = [1, 2, 3, 3, 4, 5, 5, 5, 7, 8, 9, 7, 11, 11, 12, 9, 13, 14, 25];

fn criterion_1() -> Check {
    for (i, &n) in TABLE_N.iter().enumerate() {
        let r = r_exact(n.div_ceil(2)).unwrap();
        ensure(r.r_value == TABLE_R[i], || format!("r(ceil({n}/2)) = {}", r.r_value))?;
        let res = family_eqdim(&FamilySpec::Path(n)).unwrap();
        ensure(res.value == FamilyValue::Exact { value: TABLE_PATH[i] }, || format!("P_{n}: {:?}", res.value))?;
        ensure(n - r.r_value == TABLE_PATH[i], || format!("P_{n}: formula"))?;
        let cert = verify_distance_equalizer(&fam(FamilySpec::Path(n)), &res.witness).unwrap();
        ensure(cert.valid && res.witness.len() == TABLE_PATH[i], || format!("P_{n}: witness"))?;
        if n <= 16 {
            let s = exact(FamilySpec::Path(n));
            ensure(s == TABLE_PATH[i], || format!("P_{n}: search gives {s}"))?;
        }
    }
    Ok("paths n = 3..20, 50 match; search agrees for n <= 16".into())
}

fn criterion_2() -> Check {
    for (i, &n) in TABLE_N.iter().enumerate() {
        let g = fam(FamilySpec::Cycle(n));
        let res = family_eqdim(&FamilySpec::Cycle(n)).unwrap();
        if n % 2 == 0 {
            ensure(res.value == FamilyValue::Exact { value: TABLE_CYCLE[i] }, || format!("C_{n}: {:?}", res.value))?;
            let cert = verify_distance_equalizer(&g, &res.witness).unwrap();
            ensure(cert.valid && res.witness.len() == TABLE_CYCLE[i], || format!("C_{n}: witness"))?;
            let lower = bounds(&g).unwrap().lower_named(BIPARTITE_PARTITE).unwrap();
            if n % 4 == 2 {
                // the witness size meets the colour-class bound, so it is exact
                ensure(lower == TABLE_CYCLE[i], || format!("C_{n}: bipartite bound {lower}"))?;
            } else {
                let s = exact(FamilySpec::Cycle(n));
                ensure(s == TABLE_CYCLE[i], || format!("C_{n}: search gives {s}"))?;
            }
        } else {
            let s = exact(FamilySpec::Cycle(n));
            ensure(s == TABLE_CYCLE[i], || format!("C_{n}: search gives {s}, printed {}", TABLE_CYCLE[i]))?;
            let FamilyValue::Interval { lower, upper } = res.value else {
                return Err(format!("C_{n}: expected an interval"));
            };
            let r = r_exact((n + 1).div_ceil(4)).unwrap().r_value;
            ensure(lower == (n - 1) / 2 && upper == n - r, || format!("C_{n}: interval"))?;
            ensure(lower <= s && s <= upper, || format!("C_{n}: {s} outside [{lower}, {upper}]"))?;
            ensure(verify_distance_equalizer(&g, &res.witness).unwrap().valid, || format!("C_{n}: witness"))?;
        }
    }
    Ok("even cycles closed form (C_50 = 25), odd cycles n <= 19 by search".into())
}

fn criterion_3() -> Check {
    let mut specs = Vec::new();
    for n in 1..=10 {
        specs.push(FamilySpec::Complete(n));
    }
    for r in 1..=6 {
        for s in r..=6 {
            specs.push(FamilySpec::CompleteMultipartite(vec![r, s]));
        }
    }
    for r in 3..=6 {
        for s in r..=6 {
            specs.push(FamilySpec::Bistar(r, s));
        }
    }
    for p in 3..=4 {
        let mut parts = vec![1; p];
        loop {
            specs.push(FamilySpec::CompleteMultipartite(parts.clone()));
            // next non-decreasing sequence over 1..=4
            let Some(j) = (0..p).rev().find(|&j| parts[j] < 4) else { break };
            let v = parts[j] + 1;
            for x in &mut parts[j..] {
                *x = v;
            }
        }
    }
    for spec in &specs {
        let res = family_eqdim(spec).unwrap();
        let v = res.value.exact().ok_or_else(|| format!("{spec}: not exact"))?;
        let s = exact(spec.clone());
        ensure(v == s && res.verified, || format!("{spec}: formula {v}, search {s}"))?;
    }
    Ok(format!("{} family instances agree with search", specs.len()))
}

fn criterion_4() -> Check {
    let r = check_characterization(7, &HarnessConfig::default()).unwrap();
    ensure(r.counterexamples.is_empty(), || format!("{:?}", &r.counterexamples[..r.counterexamples.len().min(3)]))?;
    ensure(r.status == Status::Holds, || "status".into())?;
    Ok(format!("{} labeled connected graphs, 2 <= n <= 7", r.checked))
}

fn criterion_5() -> Check {
    let mut subsets = 0u64;
    for n in 1..=14usize {
        let g = fam(FamilySpec::Path(n));
        let d = all_pairs_distances(&g).unwrap();
        for mask in 0u64..1 << n {
            let s = VertexSet::from_mask(n, mask);
            let comp = IntSet::from_vertex_set(&s.complement());
            let lhs = is_distance_equalizer(&d, &s);
            let rhs = is_3ap_free(&comp) && is_even_sum(&comp);
            ensure(lhs == rhs, || format!("P_{n}, S = {:?}", s.to_one_based()))?;
            subsets += 1;
        }
    }
    for n in 2..=14 {
        let q = diag_brute_force(n);
        let p = path_eqdim(n).unwrap();
        ensure(q.len() == p, || format!("diag({n}) = {} but eqdim(P_{n}) = {p}", q.len()))?;
    }
    Ok(format!("{subsets} subsets; diag(n) = eqdim(P_n) for 2 <= n <= 14"))
}

fn criterion_6() -> Check {
    for (n, k) in [(3, 2), (5, 2), (5, 3), (7, 3), (9, 4), (19, 3)] {
        let g = fam(FamilySpec::Johnson(n, k));
        let w = johnson_windows(n, k);
        ensure(w.len() == n, || format!("J({n},{k}): {} windows", w.len()))?;
        let s = VertexSet::from_indices(g.order(), w);
        ensure(verify_distance_equalizer(&g, &s).unwrap().valid, || format!("J({n},{k}) windows fail"))?;
        let res = family_eqdim(&FamilySpec::Johnson(n, k)).unwrap();
        ensure(res.verified && res.value == FamilyValue::UpperBound { value: n }, || format!("J({n},{k}) family"))?;
    }
    Ok("window families verify for all six Johnson graphs".into())
}

fn random_set(rng: &mut ChaCha8Rng, n: usize) -> VertexSet {
    let p: f64 = rng.gen_range(0.2..0.9);
    VertexSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(p)))
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pairs = 0u64;
    for n in 2..=6 {
        for g in enumerate_connected(n).unwrap() {
            let d = all_pairs_distances(&g).unwrap();
            for _ in 0..50 {
                let a = loop {
                    let a = random_set(&mut rng, n);
                    if resolving_with_distances(&d, &a).valid {
                        break a;
                    }
                };
                let b = loop {
                    let b = random_set(&mut rng, n);
                    if is_distance_equalizer(&d, &b) {
                        break b;
                    }
                };
                let out = doubly_from_eqdim(&g, &a, &b).unwrap();
                ensure(out.set.len() >= 2 && doubly_with_distances(&d, &out.set).valid, || {
                    format!("{g:?}: A = {:?}, B = {:?}", a.to_vec(), b.to_vec())
                })?;
                ensure(out.set.len() <= a.len() + 2 * b.len(), || format!("{g:?}: size"))?;
                ensure(out.extra.len() <= b.len(), || format!("{g:?}: |C| > |B|"))?;
                pairs += 1;
            }
        }
    }
    let mut trees = 0;
    for n in 2..=10 {
        for t in enumerate_trees(n).unwrap() {
            let (leaves, witness) = tree_psi(&t).unwrap();
            let psi = psi_exact(&t, DEFAULT_BUDGET).unwrap();
            let dim = dim_exact(&t, DEFAULT_BUDGET).unwrap().value;
            let eq = eqdim_exact(&t, DEFAULT_BUDGET).unwrap().value;
            ensure(psi.value == leaves && psi.witness == witness, || format!("{t:?}: psi"))?;
            ensure(leaves <= dim + eq, || format!("{t:?}: psi > dim + eqdim"))?;
            trees += 1;
        }
    }
    Ok(format!("{pairs} constructions verified; tree theorem on {trees} trees"))
}

fn criterion_8() -> Check {
    let cfg = HarnessConfig::default();
    let mut failures = Vec::new();
    let trees = check_tree_conjecture(12, &cfg).unwrap();
    if !trees.counterexamples.is_empty() {
        let c: Vec<String> = trees.counterexamples.iter().map(|c| format!("{} ({})", c.graph6, c.details)).collect();
        failures.push(format!("trees conjecture n <= 12: {}", c.join(", ")));
    }
    let psi = check_psi_conjecture(&Corpus::Connected { n_min: 2, n_max: 6 }, &cfg).unwrap();
    if !psi.counterexamples.is_empty() || psi.status != Status::Open {
        failures.push(format!("psi conjecture: {} counterexamples", psi.counterexamples.len()));
    }
    let ng = check_nordhaus_gaddum(&Corpus::Connected { n_min: 2, n_max: 6 }, &cfg).unwrap();
    if !ng.counterexamples.is_empty() || ng.status != Status::Holds {
        failures.push(format!("Nordhaus-Gaddum: {} counterexamples", ng.counterexamples.len()));
    }
    let tight = nordhaus_gaddum_tightness(6, DEFAULT_BUDGET).unwrap();
    if !(tight[0].graph == "C_5" && tight[0].sum == 6 && tight.iter().all(|t| t.ok)) {
        failures.push("tightness witnesses".into());
    }
    let summary = format!(
        "trees {} checked; psi {} checked ({} equality); NG {} doubly connected; tightness {} cases",
        trees.checked,
        psi.checked,
        psi.equality_count,
        ng.checked,
        tight.len()
    );
    if failures.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{}; {summary}", failures.join("; ")))
    }
}

fn brute_eqdim(d: &eqdim::distance::DistanceMatrix) -> (usize, u64) {
    let n = d.order();
    for k in 0..=n {
        if let Some(m) = lex_k_subsets(n, k).find(|&m| is_distance_equalizer(d, &VertexSet::from_mask(n, m))) {
            return (k, m);
        }
    }
    unreachable!()
}

fn criterion_9() -> Check {
    // monotonicity
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut trials = 0;
    while trials < 10_000 {
        let n = rng.gen_range(2..=9);
        let m = n * (n - 1) / 2;
        let mask: u64 = rng.gen::<u64>() & ((1u64 << m) - 1);
        let g = eqdim::enumerate::graph_from_edge_mask(n, mask);
        if !g.is_connected() {
            continue;
        }
        let d = all_pairs_distances(&g).unwrap();
        let s = random_set(&mut rng, n);
        if !is_distance_equalizer(&d, &s) {
            continue;
        }
        let sup = s.union(&random_set(&mut rng, n));
        ensure(is_distance_equalizer(&d, &sup), || format!("{g:?}: {:?} valid, {:?} not", s.to_vec(), sup.to_vec()))?;
        trials += 1;
    }
    // pruned search against plain enumeration
    let mut graphs = 0;
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            let d = all_pairs_distances(&g).unwrap();
            let (k, m) = brute_eqdim(&d);
            let r = eqdim_exact(&g, DEFAULT_BUDGET).unwrap();
            ensure(r.value == k && r.witness == VertexSet::from_mask(n, m), || {
                format!("{g:?}: search {} {:?}, oracle {k} {:?}", r.value, r.witness.to_vec(), VertexSet::from_mask(n, m).to_vec())
            })?;
            graphs += 1;
        }
    }
    // worker independence
    let corpus = Corpus::Connected { n_min: 2, n_max: 6 };
    let one = check_psi_conjecture(&corpus, &HarnessConfig { workers: 1, budget: DEFAULT_BUDGET }).unwrap();
    let many = check_psi_conjecture(&corpus, &HarnessConfig { workers: 8, budget: DEFAULT_BUDGET }).unwrap();
    let (a, b) = (serde_json::to_string(&one).unwrap(), serde_json::to_string(&many).unwrap());
    ensure(a == b, || "reports differ between 1 and 8 workers".into())?;
    Ok(format!("{trials} superset trials; {graphs} graphs match the oracle; reports byte-identical"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("path values", criterion_1),
        ("cycle values", criterion_2),
        ("family formulas", criterion_3),
        ("extremal characterizations", criterion_4),
        ("path correspondence and queens", criterion_5),
        ("Johnson construction", criterion_6),
        ("doubly resolving construction", criterion_7),
        ("conjecture harnesses", criterion_8),
        ("property suites", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(msg) => println!("criterion {}: PASS  {name} ({secs:.1}s): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.1}s): {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
