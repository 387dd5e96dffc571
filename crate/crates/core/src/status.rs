//! Vertex status: summed distances to every other vertex, plus the derived
//! minimum/maximum/total figures, the median set and the self-median test.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::graph::{IvfGraph, VertexId};
use crate::metrics::{distance_map, MetricsError};
use crate::scalar::Scalar;

/// (sum of mu-distances, sum of nu-distances) from one vertex to the rest.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StatusPair {
    pub s_mu: Scalar,
    pub s_nu: Scalar,
}

impl fmt::Display for StatusPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.s_mu, self.s_nu)
    }
}

/// Every status figure of a graph in one pass.
///
/// `minimum` and `maximum` are componentwise over the per-vertex pairs, so
/// neither needs to be attained by a single vertex. The median holds the
/// vertices matching `minimum` in both components and can therefore be
/// empty; `mu_minimizers` and `nu_minimizers` are the per-component
/// attainment sets, which are never empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StatusSummary {
    pub per_vertex: BTreeMap<VertexId, StatusPair>,
    pub minimum: StatusPair,
    pub maximum: StatusPair,
    pub total: StatusPair,
    pub median: BTreeSet<VertexId>,
    pub mu_minimizers: BTreeSet<VertexId>,
    pub nu_minimizers: BTreeSet<VertexId>,
    pub self_median: bool,
}

/// The status of one vertex of a valid, connected graph with at least two
/// vertices.
pub fn status(g: &IvfGraph, v: &VertexId, cap: usize) -> Result<StatusPair, MetricsError> {
    let summary = status_summary(g, cap)?;
    summary
        .per_vertex
        .get(v)
        .copied()
        .ok_or_else(|| MetricsError::UnknownVertex(v.clone()))
}

/// All status figures of a valid, connected graph with at least two
/// vertices.
pub fn status_summary(g: &IvfGraph, cap: usize) -> Result<StatusSummary, MetricsError> {
    if g.vertex_count() < 2 {
        let report = g.validate();
        if !report.is_valid() {
            return Err(MetricsError::InvalidGraph(report));
        }
        return Err(MetricsError::TooFewVertices);
    }
    let map = distance_map(g, cap)?;

    let mut per_vertex: BTreeMap<VertexId, StatusPair> = map
        .vertices()
        .iter()
        .map(|v| {
            (
                v.clone(),
                StatusPair {
                    s_mu: Scalar::ZERO,
                    s_nu: Scalar::ZERO,
                },
            )
        })
        .collect();
    for (pair, d) in map.pairs() {
        for endpoint in [pair.first(), pair.second()] {
            let entry = per_vertex.get_mut(endpoint).expect("map covers vertices");
            entry.s_mu += d.d_mu;
            entry.s_nu += d.d_nu;
        }
    }

    let first = *per_vertex.values().next().expect("two or more vertices");
    let mut minimum = first;
    let mut maximum = first;
    let mut total = StatusPair {
        s_mu: Scalar::ZERO,
        s_nu: Scalar::ZERO,
    };
    for s in per_vertex.values() {
        minimum.s_mu = minimum.s_mu.min(s.s_mu);
        minimum.s_nu = minimum.s_nu.min(s.s_nu);
        maximum.s_mu = maximum.s_mu.max(s.s_mu);
        maximum.s_nu = maximum.s_nu.max(s.s_nu);
        total.s_mu += s.s_mu;
        total.s_nu += s.s_nu;
    }

    let mut median = BTreeSet::new();
    let mut mu_minimizers = BTreeSet::new();
    let mut nu_minimizers = BTreeSet::new();
    for (v, s) in &per_vertex {
        if s.s_mu == minimum.s_mu {
            mu_minimizers.insert(v.clone());
        }
        if s.s_nu == minimum.s_nu {
            nu_minimizers.insert(v.clone());
        }
        if *s == minimum {
            median.insert(v.clone());
        }
    }

    Ok(StatusSummary {
        per_vertex,
        minimum,
        maximum,
        total,
        median,
        mu_minimizers,
        nu_minimizers,
        self_median: minimum == maximum,
    })
}
