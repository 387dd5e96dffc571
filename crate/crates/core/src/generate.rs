//! Constructors for the standard graph families used in tests and by the
//! command-line `gen` subcommand. Vertices are named `v1 .. vn`.

use crate::graph::{GraphError, IvfGraph, VertexId};
use crate::interval::MembershipInterval;

fn vertex(i: usize) -> VertexId {
    VertexId::new(format!("v{i}")).expect("generated id is well-formed")
}

fn check_weight(role: &str, weight: MembershipInterval) -> Result<(), GraphError> {
    if !weight.is_well_formed() {
        return Err(GraphError::BadParams(format!(
            "{role} interval {weight} is not well-formed"
        )));
    }
    Ok(())
}

fn check_edge(edge: MembershipInterval, bound: MembershipInterval) -> Result<(), GraphError> {
    if edge.mu > bound.mu || edge.nu > bound.nu {
        return Err(GraphError::BadParams(format!(
            "edge interval {edge} exceeds the endpoint minimum {bound}"
        )));
    }
    if edge.nu.is_zero() {
        return Err(GraphError::BadParams(
            "edge interval has nu = 0; such a pair is not an edge".into(),
        ));
    }
    Ok(())
}

/// The complete graph on `n` vertices where every vertex carries `weight`;
/// every edge then carries `weight` as well.
pub fn complete_constant(n: usize, weight: MembershipInterval) -> Result<IvfGraph, GraphError> {
    if n == 0 {
        return Err(GraphError::BadParams("need at least one vertex".into()));
    }
    check_weight("vertex", weight)?;
    if n > 1 {
        check_edge(weight, weight)?;
    }
    let mut g = IvfGraph::new();
    for i in 1..=n {
        g.add_vertex(vertex(i), weight);
    }
    for i in 1..=n {
        for j in i + 1..=n {
            g.add_edge(vertex(i), vertex(j), weight);
        }
    }
    Ok(g)
}

/// An even cycle `v1 - v2 - .. - vn - v1` with a constant vertex interval
/// whose edge weights alternate `first, second, first, ..` around the cycle;
/// the closing edge `vn-v1` gets `second`.
pub fn even_cycle_alternating(
    n: usize,
    vertex_weight: MembershipInterval,
    first: MembershipInterval,
    second: MembershipInterval,
) -> Result<IvfGraph, GraphError> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(GraphError::BadParams(format!(
            "cycle length must be even and at least 4, got {n}"
        )));
    }
    check_weight("vertex", vertex_weight)?;
    check_weight("first edge", first)?;
    check_weight("second edge", second)?;
    check_edge(first, vertex_weight)?;
    check_edge(second, vertex_weight)?;
    let mut g = IvfGraph::new();
    for i in 1..=n {
        g.add_vertex(vertex(i), vertex_weight);
    }
    for i in 1..=n {
        let j = if i == n { 1 } else { i + 1 };
        let weight = if i % 2 == 1 { first } else { second };
        g.add_edge(vertex(i), vertex(j), weight);
    }
    Ok(g)
}

/// A path `v1 - v2 - .. - vn` with a constant vertex interval and one weight
/// per edge; `edge_weights` must have length `n - 1`.
pub fn path(
    n: usize,
    vertex_weight: MembershipInterval,
    edge_weights: &[MembershipInterval],
) -> Result<IvfGraph, GraphError> {
    if n == 0 {
        return Err(GraphError::BadParams("need at least one vertex".into()));
    }
    if edge_weights.len() != n - 1 {
        return Err(GraphError::BadParams(format!(
            "a path on {n} vertices needs {} edge weights, got {}",
            n - 1,
            edge_weights.len()
        )));
    }
    check_weight("vertex", vertex_weight)?;
    for weight in edge_weights {
        check_weight("edge", *weight)?;
        check_edge(*weight, vertex_weight)?;
    }
    let mut g = IvfGraph::new();
    for i in 1..=n {
        g.add_vertex(vertex(i), vertex_weight);
    }
    for (i, weight) in edge_weights.iter().enumerate() {
        g.add_edge(vertex(i + 1), vertex(i + 2), *weight);
    }
    Ok(g)
}
