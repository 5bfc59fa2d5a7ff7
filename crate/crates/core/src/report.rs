//! The shared JSON report for computations and verifications on one graph.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::equalizer::{bounds_with_distances, eqdim_exact, verify_with_distances, BoundsReport, EqualizerCertificate};
use crate::distance::all_pairs_distances;
use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub graph: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eqdim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
    pub lower: BTreeMap<&'static str, usize>,
    pub upper: BTreeMap<&'static str, usize>,
    pub best_lower: usize,
    pub best_upper: usize,
    pub witness: Vec<usize>,
    pub witness_1based: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_pair: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_pair_1based: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes: Option<u64>,
}

impl GraphReport {
    fn base(g: &Graph, bounds: &BoundsReport, witness: &VertexSet) -> Self {
        GraphReport {
            graph: g.display_name(),
            n: g.order(),
            eqdim: None,
            valid: None,
            lower: bounds.lower.iter().map(|b| (b.name, b.value)).collect(),
            upper: bounds.upper.iter().map(|b| (b.name, b.value)).collect(),
            best_lower: bounds.best_lower,
            best_upper: bounds.best_upper,
            witness: witness.to_vec(),
            witness_1based: witness.to_one_based(),
            failing_pair: None,
            failing_pair_1based: None,
            nodes: None,
        }
    }
}

/// Exact `eqdim` with bounds and witness.
pub fn compute_report(g: &Graph, budget: u64) -> Result<GraphReport> {
    let r = eqdim_exact(g, budget)?;
    let mut out = GraphReport::base(g, &r.bounds, &r.witness);
    out.eqdim = Some(r.value);
    out.nodes = Some(r.nodes);
    Ok(out)
}

/// Bounds only.
pub fn bounds_report(g: &Graph) -> Result<GraphReport> {
    let d = all_pairs_distances(g)?;
    let b = bounds_with_distances(g, &d);
    Ok(GraphReport::base(g, &b, &VertexSet::empty(g.order())))
}

/// Verification of a candidate set, with the certificate alongside.
pub fn verify_report(g: &Graph, s: &VertexSet) -> Result<(GraphReport, EqualizerCertificate)> {
    crate::equalizer::check_order(g, s)?;
    let d = all_pairs_distances(g)?;
    let b = bounds_with_distances(g, &d);
    let cert = verify_with_distances(&d, s);
    let mut out = GraphReport::base(g, &b, s);
    out.valid = Some(cert.valid);
    out.failing_pair = cert.failing_pair;
    out.failing_pair_1based = cert.failing_pair.map(|(x, y)| (x + 1, y + 1));
    Ok((out, cert))
}
