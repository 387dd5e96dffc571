//! Plain-text report rendering. Every function is deterministic: tables
//! follow the lexicographic vertex order and all numbers print at four
//! decimal places.

use std::fmt::Write as _;

use ivfg::antipodal::{AntipodalClause, AntipodalResult};
use ivfg::metrics::{distance_map, MetricsError};
use ivfg::status::StatusSummary;
use ivfg::{IvfGraph, VertexId};

/// Distance matrix, eccentricity table, radius and diameter.
pub fn report(g: &IvfGraph, cap: usize) -> Result<String, MetricsError> {
    if g.vertex_count() < 2 {
        return Err(MetricsError::TooFewVertices);
    }
    let map = distance_map(g, cap)?;
    let mut out = String::new();
    for (pair, d) in map.pairs() {
        writeln!(out, "delta({},{}) = {d}", pair.first(), pair.second()).expect("string write");
    }
    for v in map.vertices() {
        let e = map.eccentricity(v).expect("two or more vertices");
        writeln!(out, "ecc({v}) = {e}").expect("string write");
    }
    writeln!(
        out,
        "radius = {}",
        map.radius().expect("two or more vertices")
    )
    .expect("string write");
    writeln!(
        out,
        "diameter = {}",
        map.diameter().expect("two or more vertices")
    )
    .expect("string write");
    Ok(out)
}

fn vertex_set(set: &std::collections::BTreeSet<VertexId>) -> String {
    let mut out = String::from("{");
    for (i, v) in set.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(v.as_str());
    }
    out.push('}');
    out
}

/// Status table, the extreme and total figures, median sets and the
/// self-median verdict.
pub fn status(summary: &StatusSummary) -> String {
    let mut out = String::new();
    for (v, s) in &summary.per_vertex {
        writeln!(out, "status({v}) = {s}").expect("string write");
    }
    writeln!(out, "minimum = {}", summary.minimum).expect("string write");
    writeln!(out, "maximum = {}", summary.maximum).expect("string write");
    writeln!(out, "total = {}", summary.total).expect("string write");
    writeln!(out, "median = {}", vertex_set(&summary.median)).expect("string write");
    writeln!(
        out,
        "mu-minimizers = {}",
        vertex_set(&summary.mu_minimizers)
    )
    .expect("string write");
    writeln!(
        out,
        "nu-minimizers = {}",
        vertex_set(&summary.nu_minimizers)
    )
    .expect("string write");
    writeln!(
        out,
        "self-median: {}",
        if summary.self_median { "yes" } else { "no" }
    )
    .expect("string write");
    out
}

/// The diameter used by the antipodal construction and each selected pair
/// with the clause that weighted it.
pub fn antipodal_info(result: &AntipodalResult) -> String {
    let mut out = String::new();
    writeln!(out, "diameter = {}", result.diameter_used).expect("string write");
    for tagged in &result.pairs {
        let clause = match tagged.clause {
            AntipodalClause::Neighbors => "neighbors",
            AntipodalClause::NonNeighbors => "non-neighbors",
        };
        writeln!(out, "antipodal {} ({clause})", tagged.pair).expect("string write");
    }
    out
}
