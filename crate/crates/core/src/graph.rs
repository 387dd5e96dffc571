//! The interval-valued fuzzy graph data model.
//!
//! An [`IvfGraph`] is a *candidate* structure: it can hold states that break
//! the model's invariants (inverted intervals, dangling edges, self-loops) so
//! that [`IvfGraph::validate`] can report every violation instead of refusing
//! to represent the input. Operations that require a valid graph say so and
//! return [`GraphError::InvalidGraph`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::interval::MembershipInterval;
use crate::scalar::Scalar;

/// A vertex label: a non-empty token without whitespace.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(id: impl Into<String>) -> Result<VertexId, InvalidVertexId> {
        let id = id.into();
        if id.is_empty() || id.chars().any(char::is_whitespace) {
            return Err(InvalidVertexId(id));
        }
        Ok(VertexId(id))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid vertex id `{0}`: must be non-empty and contain no whitespace")]
pub struct InvalidVertexId(String);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexId({})", self.0)
    }
}

impl FromStr for VertexId {
    type Err = InvalidVertexId;

    fn from_str(s: &str) -> Result<VertexId, InvalidVertexId> {
        VertexId::new(s)
    }
}

/// An unordered pair of vertex ids, stored with the endpoints sorted so that
/// `VertexPair::new(a, b) == VertexPair::new(b, a)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPair {
    first: VertexId,
    second: VertexId,
}

impl VertexPair {
    pub fn new(x: VertexId, y: VertexId) -> VertexPair {
        if x <= y {
            VertexPair {
                first: x,
                second: y,
            }
        } else {
            VertexPair {
                first: y,
                second: x,
            }
        }
    }

    pub fn first(&self) -> &VertexId {
        &self.first
    }

    pub fn second(&self) -> &VertexId {
        &self.second
    }

    /// Both endpoints are the same vertex. Representable so that validation
    /// can report it; never legal in a valid graph.
    pub fn is_loop(&self) -> bool {
        self.first == self.second
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.first == *v || self.second == *v
    }

    /// The endpoint other than `v`, if `v` is one of the two.
    pub fn other(&self, v: &VertexId) -> Option<&VertexId> {
        if self.first == *v {
            Some(&self.second)
        } else if self.second == *v {
            Some(&self.first)
        } else {
            None
        }
    }
}

impl fmt::Display for VertexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.first, self.second)
    }
}

impl fmt::Debug for VertexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexPair({self})")
    }
}

/// An undirected graph whose vertices and edges carry membership intervals.
///
/// Valid graphs satisfy, for every edge `xy`:
/// `mu(xy) <= min(mu(x), mu(y))` and `nu(xy) <= min(nu(x), nu(y))`,
/// every interval is well-formed, and every stored edge has `nu > 0`
/// (a pair whose weight would be `[0, 0]` is simply not an edge).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IvfGraph {
    vertices: BTreeMap<VertexId, MembershipInterval>,
    edges: BTreeMap<VertexPair, MembershipInterval>,
}

impl IvfGraph {
    pub fn new() -> IvfGraph {
        IvfGraph::default()
    }

    /// Inserts or replaces a vertex, returning the previous interval if any.
    pub fn add_vertex(
        &mut self,
        id: VertexId,
        weight: MembershipInterval,
    ) -> Option<MembershipInterval> {
        self.vertices.insert(id, weight)
    }

    /// Inserts or replaces an undirected edge, returning the previous
    /// interval if any. No checks: validation is a separate step.
    pub fn add_edge(
        &mut self,
        x: VertexId,
        y: VertexId,
        weight: MembershipInterval,
    ) -> Option<MembershipInterval> {
        self.edges.insert(VertexPair::new(x, y), weight)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertices in id order.
    pub fn vertices(&self) -> impl Iterator<Item = (&VertexId, &MembershipInterval)> {
        self.vertices.iter()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = &VertexId> {
        self.vertices.keys()
    }

    /// Edges in pair order.
    pub fn edges(&self) -> impl Iterator<Item = (&VertexPair, &MembershipInterval)> {
        self.edges.iter()
    }

    pub fn has_vertex(&self, id: &VertexId) -> bool {
        self.vertices.contains_key(id)
    }

    pub fn vertex_weight(&self, id: &VertexId) -> Option<MembershipInterval> {
        self.vertices.get(id).copied()
    }

    pub fn edge_weight(&self, x: &VertexId, y: &VertexId) -> Option<MembershipInterval> {
        self.edges
            .get(&VertexPair::new(x.clone(), y.clone()))
            .copied()
    }

    pub fn has_edge(&self, x: &VertexId, y: &VertexId) -> bool {
        self.edge_weight(x, y).is_some()
    }

    /// Neighbors of `v` with the joining edge weight, in id order.
    pub fn neighbors<'g>(
        &'g self,
        v: &'g VertexId,
    ) -> impl Iterator<Item = (&'g VertexId, MembershipInterval)> + 'g {
        self.edges
            .iter()
            .filter_map(move |(pair, weight)| pair.other(v).map(|u| (u, *weight)))
    }

    /// Checks every model invariant and reports each violation found.
    /// An empty report means the graph is a valid interval-valued fuzzy graph.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (id, weight) in &self.vertices {
            if weight.mu > weight.nu {
                violations.push(Violation::VertexIntervalInverted {
                    vertex: id.clone(),
                    interval: *weight,
                });
            }
            if weight.mu > Scalar::ONE || weight.nu > Scalar::ONE {
                violations.push(Violation::VertexIntervalOutOfRange {
                    vertex: id.clone(),
                    interval: *weight,
                });
            }
        }
        for (pair, weight) in &self.edges {
            if weight.mu > weight.nu {
                violations.push(Violation::EdgeIntervalInverted {
                    edge: pair.clone(),
                    interval: *weight,
                });
            }
            if weight.mu > Scalar::ONE || weight.nu > Scalar::ONE {
                violations.push(Violation::EdgeIntervalOutOfRange {
                    edge: pair.clone(),
                    interval: *weight,
                });
            }
            if pair.is_loop() {
                violations.push(Violation::SelfLoop { edge: pair.clone() });
                continue;
            }
            let endpoints = [pair.first(), pair.second()];
            let mut dangling = false;
            for endpoint in endpoints {
                if !self.vertices.contains_key(endpoint) {
                    violations.push(Violation::UnknownEndpoint {
                        edge: pair.clone(),
                        endpoint: endpoint.clone(),
                    });
                    dangling = true;
                }
            }
            if dangling {
                continue;
            }
            let bound =
                self.vertices[pair.first()].componentwise_min(&self.vertices[pair.second()]);
            if weight.mu > bound.mu {
                violations.push(Violation::EdgeMuExceedsBound {
                    edge: pair.clone(),
                    edge_mu: weight.mu,
                    bound: bound.mu,
                });
            }
            if weight.nu > bound.nu {
                violations.push(Violation::EdgeNuExceedsBound {
                    edge: pair.clone(),
                    edge_nu: weight.nu,
                    bound: bound.nu,
                });
            }
            if weight.nu.is_zero() {
                violations.push(Violation::ZeroNuEdge { edge: pair.clone() });
            }
        }
        ValidationReport { violations }
    }

    fn require_valid(&self) -> Result<(), GraphError> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(GraphError::InvalidGraph(report))
        }
    }

    /// The complement: same vertices; for every vertex pair the new weight is
    /// `min(vertex weights) - edge weight`, componentwise, where a missing
    /// edge counts as `[0, 0]`. Pairs whose computed weight is exactly
    /// `[0, 0]` are not stored, which makes the complement an involution on
    /// the stored representation.
    ///
    /// The subtraction is defined whenever the edge-bound inequalities hold,
    /// so only violations that break them (or break the structure itself)
    /// are rejected here. This keeps the complement applicable to its own
    /// output: complementing can invert an interval or zero out `nu`, and
    /// `complement(complement(g))` must still restore `g` exactly.
    pub fn complement(&self) -> Result<IvfGraph, GraphError> {
        let report = self.validate();
        let blocking: Vec<Violation> = report
            .violations()
            .iter()
            .filter(|violation| violation.blocks_complement())
            .cloned()
            .collect();
        if !blocking.is_empty() {
            return Err(GraphError::InvalidGraph(ValidationReport {
                violations: blocking,
            }));
        }

        let mut complement = IvfGraph::new();
        for (id, weight) in &self.vertices {
            complement.add_vertex(id.clone(), *weight);
        }
        let ids: Vec<&VertexId> = self.vertices.keys().collect();
        for (i, x) in ids.iter().enumerate() {
            for y in &ids[i + 1..] {
                let bound = self.vertices[*x].componentwise_min(&self.vertices[*y]);
                let present = self.edge_weight(x, y).unwrap_or(MembershipInterval::ZERO);
                let weight = MembershipInterval::new(bound.mu - present.mu, bound.nu - present.nu);
                if !weight.is_zero() {
                    complement.add_edge((*x).clone(), (*y).clone(), weight);
                }
            }
        }
        Ok(complement)
    }

    /// True when every vertex pair is an edge whose weight equals the
    /// componentwise minimum of its endpoint intervals.
    pub fn is_complete(&self) -> Result<bool, GraphError> {
        self.require_valid()?;
        let ids: Vec<&VertexId> = self.vertices.keys().collect();
        for (i, x) in ids.iter().enumerate() {
            for y in &ids[i + 1..] {
                let bound = self.vertices[*x].componentwise_min(&self.vertices[*y]);
                match self.edge_weight(x, y) {
                    Some(weight) if weight == bound => {}
                    _ => return Ok(false),
                }
            }
        }
        Ok(true)
    }

    /// True when every vertex of `self` appears in `host` with an identical
    /// interval and every edge of `self` appears in `host` with an identical
    /// weight.
    pub fn is_subgraph_of(&self, host: &IvfGraph) -> Result<bool, GraphError> {
        self.require_valid()?;
        host.require_valid()?;
        for (id, weight) in &self.vertices {
            if host.vertex_weight(id) != Some(*weight) {
                return Ok(false);
            }
        }
        for (pair, weight) in &self.edges {
            if host.edges.get(pair) != Some(weight) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Everything [`IvfGraph::validate`] found wrong with a candidate graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for (i, violation) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{violation}")?;
        }
        Ok(())
    }
}

/// One broken invariant, pointing at the offending vertex or edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    VertexIntervalInverted {
        vertex: VertexId,
        interval: MembershipInterval,
    },
    VertexIntervalOutOfRange {
        vertex: VertexId,
        interval: MembershipInterval,
    },
    EdgeIntervalInverted {
        edge: VertexPair,
        interval: MembershipInterval,
    },
    EdgeIntervalOutOfRange {
        edge: VertexPair,
        interval: MembershipInterval,
    },
    SelfLoop {
        edge: VertexPair,
    },
    UnknownEndpoint {
        edge: VertexPair,
        endpoint: VertexId,
    },
    EdgeMuExceedsBound {
        edge: VertexPair,
        edge_mu: Scalar,
        bound: Scalar,
    },
    EdgeNuExceedsBound {
        edge: VertexPair,
        edge_nu: Scalar,
        bound: Scalar,
    },
    ZeroNuEdge {
        edge: VertexPair,
    },
}

impl Violation {
    /// Whether this violation makes the complement arithmetic itself
    /// undefined. Inverted intervals and zero-`nu` edges do not: the
    /// complement of a valid graph can produce them, and taking the
    /// complement again must restore the original.
    fn blocks_complement(&self) -> bool {
        !matches!(
            self,
            Violation::VertexIntervalInverted { .. }
                | Violation::EdgeIntervalInverted { .. }
                | Violation::ZeroNuEdge { .. }
        )
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexIntervalInverted { vertex, interval } => {
                write!(
                    f,
                    "vertex {vertex}: mu {} > nu {}",
                    interval.mu, interval.nu
                )
            }
            Violation::VertexIntervalOutOfRange { vertex, interval } => {
                write!(f, "vertex {vertex}: interval {interval} leaves [0, 1]")
            }
            Violation::EdgeIntervalInverted { edge, interval } => {
                write!(f, "edge {edge}: mu {} > nu {}", interval.mu, interval.nu)
            }
            Violation::EdgeIntervalOutOfRange { edge, interval } => {
                write!(f, "edge {edge}: interval {interval} leaves [0, 1]")
            }
            Violation::SelfLoop { edge } => write!(f, "edge {edge}: self-loop"),
            Violation::UnknownEndpoint { edge, endpoint } => {
                write!(f, "edge {edge}: endpoint {endpoint} is not a vertex")
            }
            Violation::EdgeMuExceedsBound {
                edge,
                edge_mu,
                bound,
            } => {
                write!(f, "edge {edge}: mu {edge_mu} > endpoint minimum {bound}")
            }
            Violation::EdgeNuExceedsBound {
                edge,
                edge_nu,
                bound,
            } => {
                write!(f, "edge {edge}: nu {edge_nu} > endpoint minimum {bound}")
            }
            Violation::ZeroNuEdge { edge } => {
                write!(f, "edge {edge}: stored edge has nu = 0")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid graph:\n{0}")]
    InvalidGraph(ValidationReport),
    #[error("bad parameters: {0}")]
    BadParams(String),
}
