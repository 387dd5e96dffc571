//! Antipodal graph construction: two vertices are joined exactly when their
//! distance pair equals the graph's diameter in both components.

use crate::graph::{IvfGraph, VertexPair};
use crate::metrics::{distance_map, DistancePair, MetricsError};

/// Which rule weighted an antipodal edge: original edge weight for pairs
/// adjacent in the input, endpoint minimum otherwise.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AntipodalClause {
    Neighbors,
    NonNeighbors,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AntipodalPair {
    pub pair: VertexPair,
    pub clause: AntipodalClause,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AntipodalResult {
    /// The constructed graph: input vertices and intervals, antipodal edges.
    pub graph: IvfGraph,
    /// The diameter every antipodal pair attains in both components.
    pub diameter_used: DistancePair,
    /// The antipodal pairs in order, tagged with the clause that weighted
    /// each edge.
    pub pairs: Vec<AntipodalPair>,
}

/// Builds the antipodal graph of a valid, connected graph with at least two
/// vertices. Both weight clauses are bounded by the endpoint minima, so the
/// output is always a valid graph.
pub fn antipodal_graph(g: &IvfGraph, cap: usize) -> Result<AntipodalResult, MetricsError> {
    if g.vertex_count() < 2 {
        let report = g.validate();
        if !report.is_valid() {
            return Err(MetricsError::InvalidGraph(report));
        }
        return Err(MetricsError::TooFewVertices);
    }
    let map = distance_map(g, cap)?;
    let diameter_used = map.diameter().expect("two or more vertices");

    let mut graph = IvfGraph::new();
    for (id, weight) in g.vertices() {
        graph.add_vertex(id.clone(), *weight);
    }
    let mut pairs = Vec::new();
    for (pair, d) in map.pairs() {
        if d != diameter_used {
            continue;
        }
        let (x, y) = (pair.first(), pair.second());
        let (weight, clause) = match g.edge_weight(x, y) {
            Some(weight) => (weight, AntipodalClause::Neighbors),
            None => {
                let x_weight = g.vertex_weight(x).expect("pair comes from g");
                let y_weight = g.vertex_weight(y).expect("pair comes from g");
                (
                    x_weight.componentwise_min(&y_weight),
                    AntipodalClause::NonNeighbors,
                )
            }
        };
        if !weight.is_zero() {
            graph.add_edge(x.clone(), y.clone(), weight);
        }
        pairs.push(AntipodalPair {
            pair: pair.clone(),
            clause,
        });
    }
    Ok(AntipodalResult {
        graph,
        diameter_used,
        pairs,
    })
}

/// True when `a` has exactly `g`'s vertex set with identical intervals.
/// Edges are not compared: the antipodal construction can join pairs that
/// are not adjacent in `g`.
pub fn is_spanning_subgraph_of(a: &IvfGraph, g: &IvfGraph) -> bool {
    a.vertex_count() == g.vertex_count()
        && a.vertices()
            .zip(g.vertices())
            .all(|((a_id, a_weight), (g_id, g_weight))| a_id == g_id && a_weight == g_weight)
}
