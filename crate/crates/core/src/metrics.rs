//! Path and distance machinery.
//!
//! The two distance components come from different optimization problems:
//! `d_mu` is the smallest mu-length over simple paths (a shortest-path
//! computation, since the weights are non-negative) while `d_nu` is the
//! largest nu-length over simple paths (longest-path flavored, so it is
//! computed by exhaustive enumeration behind a vertex cap).

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};
use std::fmt;

use thiserror::Error;

use crate::graph::{IvfGraph, ValidationReport, VertexId, VertexPair};
use crate::index::GraphIndex;
use crate::scalar::Scalar;

/// Vertex-count cap for the exhaustive enumerations; callers can raise it
/// explicitly, which buys exponentially more work.
pub const DEFAULT_VERTEX_CAP: usize = 12;

/// A simple path: distinct vertices, consecutive pairs joined by edges of
/// the host graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Path {
    vertices: Vec<VertexId>,
}

impl Path {
    /// Wraps a vertex sequence after checking it is a path in `g`.
    pub fn new(g: &IvfGraph, vertices: Vec<VertexId>) -> Result<Path, MetricsError> {
        check_path(g, &vertices)?;
        Ok(Path { vertices })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn endpoints(&self) -> (&VertexId, &VertexId) {
        (
            self.vertices.first().expect("paths are non-empty"),
            self.vertices.last().expect("paths are non-empty"),
        )
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// (mu-length, nu-length) of a path: the componentwise sum of its edge
/// weights.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LengthPair {
    pub l_mu: Scalar,
    pub l_nu: Scalar,
}

impl fmt::Display for LengthPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.l_mu, self.l_nu)
    }
}

/// (delta_mu, delta_nu) between two vertices. The components are extremes
/// of different paths, so neither ordering nor a triangle inequality for
/// `d_nu` is implied.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DistancePair {
    pub d_mu: Scalar,
    pub d_nu: Scalar,
}

impl fmt::Display for DistancePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.d_mu, self.d_nu)
    }
}

/// Componentwise maximum distance from a vertex to every other vertex.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EccentricityPair {
    pub e_mu: Scalar,
    pub e_nu: Scalar,
}

impl fmt::Display for EccentricityPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.e_mu, self.e_nu)
    }
}

/// Componentwise maximum over simple paths of the weakest edge weight along
/// each path; `(0, 0)` when no path joins the endpoints.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StrengthPair {
    pub s_mu: Scalar,
    pub s_nu: Scalar,
}

impl fmt::Display for StrengthPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.s_mu, self.s_nu)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricsError {
    #[error("invalid graph:\n{0}")]
    InvalidGraph(ValidationReport),
    #[error("not a path: {reason}")]
    NotAPath { reason: String },
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("endpoints must differ, got {0} twice")]
    IdenticalEndpoints(VertexId),
    #[error("no path joins the requested vertices")]
    Disconnected,
    #[error("graph has {vertices} vertices, over the enumeration cap of {cap}")]
    TooLarge { vertices: usize, cap: usize },
    #[error("need at least two vertices")]
    TooFewVertices,
}

fn check_valid(g: &IvfGraph) -> Result<(), MetricsError> {
    let report = g.validate();
    if report.is_valid() {
        Ok(())
    } else {
        Err(MetricsError::InvalidGraph(report))
    }
}

fn check_cap(g: &IvfGraph, cap: usize) -> Result<(), MetricsError> {
    let vertices = g.vertex_count();
    if vertices > cap {
        return Err(MetricsError::TooLarge { vertices, cap });
    }
    Ok(())
}

fn check_endpoints(g: &IvfGraph, u: &VertexId, v: &VertexId) -> Result<(), MetricsError> {
    for id in [u, v] {
        if !g.has_vertex(id) {
            return Err(MetricsError::UnknownVertex(id.clone()));
        }
    }
    if u == v {
        return Err(MetricsError::IdenticalEndpoints(u.clone()));
    }
    Ok(())
}

fn check_path(g: &IvfGraph, vertices: &[VertexId]) -> Result<(), MetricsError> {
    if vertices.is_empty() {
        return Err(MetricsError::NotAPath {
            reason: "empty vertex sequence".into(),
        });
    }
    for v in vertices {
        if !g.has_vertex(v) {
            return Err(MetricsError::UnknownVertex(v.clone()));
        }
    }
    for (i, v) in vertices.iter().enumerate() {
        if vertices[..i].contains(v) {
            return Err(MetricsError::NotAPath {
                reason: format!("vertex {v} repeats"),
            });
        }
    }
    for pair in vertices.windows(2) {
        if !g.has_edge(&pair[0], &pair[1]) {
            return Err(MetricsError::NotAPath {
                reason: format!("{}-{} is not an edge", pair[0], pair[1]),
            });
        }
    }
    Ok(())
}

/// Componentwise sum of the edge weights along `vertices`, checked to be a
/// path in `g` first. A single-vertex path has length `(0, 0)`.
pub fn path_length(g: &IvfGraph, vertices: &[VertexId]) -> Result<LengthPair, MetricsError> {
    check_path(g, vertices)?;
    let mut l_mu = Scalar::ZERO;
    let mut l_nu = Scalar::ZERO;
    for pair in vertices.windows(2) {
        let weight = g
            .edge_weight(&pair[0], &pair[1])
            .expect("checked to be an edge");
        l_mu += weight.mu;
        l_nu += weight.nu;
    }
    Ok(LengthPair { l_mu, l_nu })
}

/// Every simple `u`-`v` path exactly once, ordered lexicographically by the
/// vertex-id sequence. Exponential in the worst case, hence the cap.
pub fn enumerate_simple_paths(
    g: &IvfGraph,
    u: &VertexId,
    v: &VertexId,
    cap: usize,
) -> Result<Vec<Path>, MetricsError> {
    check_endpoints(g, u, v)?;
    check_cap(g, cap)?;
    let index = GraphIndex::new(g);
    let source = index.position(u).expect("endpoint checked");
    let target = index.position(v).expect("endpoint checked");

    // Neighbors are expanded in id order and a u-v path is never a prefix
    // of another (both end at their first visit of v), so emission order is
    // lexicographic.
    let mut paths = Vec::new();
    let mut trail = vec![source];
    let mut visited = vec![false; index.len()];
    visited[source] = true;
    enumerate_from(&index, target, &mut trail, &mut visited, &mut |trail| {
        paths.push(Path {
            vertices: trail.iter().map(|&i| index.id(i).clone()).collect(),
        });
    });
    Ok(paths)
}

fn enumerate_from(
    index: &GraphIndex,
    target: usize,
    trail: &mut Vec<usize>,
    visited: &mut Vec<bool>,
    emit: &mut impl FnMut(&[usize]),
) {
    let at = *trail.last().expect("trail starts at the source");
    if at == target {
        emit(trail);
        return;
    }
    for &(next, _) in index.neighbors(at) {
        if visited[next] {
            continue;
        }
        visited[next] = true;
        trail.push(next);
        enumerate_from(index, target, trail, visited, emit);
        trail.pop();
        visited[next] = false;
    }
}

/// Smallest mu-sum from `source` to every reachable vertex. Non-negative
/// weights make the unrestricted shortest walk simple, so this agrees with
/// the min over simple paths.
fn mu_shortest_from(index: &GraphIndex, source: usize) -> Vec<Option<Scalar>> {
    let mut best: Vec<Option<Scalar>> = vec![None; index.len()];
    let mut heap = BinaryHeap::new();
    best[source] = Some(Scalar::ZERO);
    heap.push(Reverse((Scalar::ZERO, source)));
    while let Some(Reverse((cost, at))) = heap.pop() {
        if best[at] != Some(cost) {
            continue;
        }
        for &(next, weight) in index.neighbors(at) {
            let candidate = cost + weight.mu;
            if best[next].is_none_or(|known| candidate < known) {
                best[next] = Some(candidate);
                heap.push(Reverse((candidate, next)));
            }
        }
    }
    best
}

/// Largest nu-sum over simple paths from `source` to every vertex, by
/// exhaustive depth-first search. Every prefix of a simple path is a simple
/// path, so one traversal updates all targets.
fn nu_longest_from(index: &GraphIndex, source: usize) -> Vec<Option<Scalar>> {
    let mut best: Vec<Option<Scalar>> = vec![None; index.len()];
    let mut visited = vec![false; index.len()];
    visited[source] = true;
    nu_walk(index, source, Scalar::ZERO, &mut visited, &mut best);
    best
}

fn nu_walk(
    index: &GraphIndex,
    at: usize,
    sum: Scalar,
    visited: &mut Vec<bool>,
    best: &mut Vec<Option<Scalar>>,
) {
    for &(next, weight) in index.neighbors(at) {
        if visited[next] {
            continue;
        }
        let reached = sum + weight.nu;
        if best[next].is_none_or(|known| reached > known) {
            best[next] = Some(reached);
        }
        visited[next] = true;
        nu_walk(index, next, reached, visited, best);
        visited[next] = false;
    }
}

/// True when every vertex pair is joined by a path. Vacuously true for
/// zero or one vertex.
pub fn is_connected(g: &IvfGraph) -> Result<bool, MetricsError> {
    check_valid(g)?;
    let index = GraphIndex::new(g);
    if index.len() <= 1 {
        return Ok(true);
    }
    let mut seen = vec![false; index.len()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(at) = stack.pop() {
        for &(next, _) in index.neighbors(at) {
            if !seen[next] {
                seen[next] = true;
                count += 1;
                stack.push(next);
            }
        }
    }
    Ok(count == index.len())
}

/// The distance pair between two vertices: min mu-length and max nu-length
/// over simple paths.
pub fn distance(
    g: &IvfGraph,
    u: &VertexId,
    v: &VertexId,
    cap: usize,
) -> Result<DistancePair, MetricsError> {
    check_valid(g)?;
    check_endpoints(g, u, v)?;
    check_cap(g, cap)?;
    let index = GraphIndex::new(g);
    let source = index.position(u).expect("endpoint checked");
    let target = index.position(v).expect("endpoint checked");
    let d_mu = mu_shortest_from(&index, source)[target];
    let d_nu = nu_longest_from(&index, source)[target];
    match (d_mu, d_nu) {
        (Some(d_mu), Some(d_nu)) => Ok(DistancePair { d_mu, d_nu }),
        _ => Err(MetricsError::Disconnected),
    }
}

/// All pairwise distances of a connected graph, computed once and reused by
/// eccentricity, radius, diameter, antipodal and status queries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DistanceMap {
    vertices: Vec<VertexId>,
    pairs: BTreeMap<VertexPair, DistancePair>,
}

impl DistanceMap {
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&VertexPair, DistancePair)> {
        self.pairs.iter().map(|(pair, d)| (pair, *d))
    }

    pub fn get(&self, u: &VertexId, v: &VertexId) -> Option<DistancePair> {
        self.pairs
            .get(&VertexPair::new(u.clone(), v.clone()))
            .copied()
    }

    /// Componentwise max distance from `v`; None when `v` is unknown or has
    /// no peers.
    pub fn eccentricity(&self, v: &VertexId) -> Option<EccentricityPair> {
        if !self.vertices.contains(v) {
            return None;
        }
        let mut result: Option<EccentricityPair> = None;
        for u in &self.vertices {
            if u == v {
                continue;
            }
            let d = self.get(u, v).expect("map covers all pairs");
            let entry = result.get_or_insert(EccentricityPair {
                e_mu: d.d_mu,
                e_nu: d.d_nu,
            });
            entry.e_mu = entry.e_mu.max(d.d_mu);
            entry.e_nu = entry.e_nu.max(d.d_nu);
        }
        result
    }

    /// Componentwise min of the eccentricities; None below two vertices.
    pub fn radius(&self) -> Option<DistancePair> {
        self.fold_eccentricities(Scalar::min)
    }

    /// Componentwise max of the eccentricities; None below two vertices.
    pub fn diameter(&self) -> Option<DistancePair> {
        self.fold_eccentricities(Scalar::max)
    }

    fn fold_eccentricities(&self, pick: fn(Scalar, Scalar) -> Scalar) -> Option<DistancePair> {
        let mut result: Option<DistancePair> = None;
        for v in &self.vertices {
            let e = self.eccentricity(v)?;
            match &mut result {
                None => {
                    result = Some(DistancePair {
                        d_mu: e.e_mu,
                        d_nu: e.e_nu,
                    })
                }
                Some(r) => {
                    r.d_mu = pick(r.d_mu, e.e_mu);
                    r.d_nu = pick(r.d_nu, e.e_nu);
                }
            }
        }
        result
    }
}

/// Computes the full distance map. The graph must be valid, connected and
/// within the cap.
pub fn distance_map(g: &IvfGraph, cap: usize) -> Result<DistanceMap, MetricsError> {
    check_valid(g)?;
    check_cap(g, cap)?;
    let index = GraphIndex::new(g);
    let n = index.len();
    let vertices: Vec<VertexId> = (0..n).map(|i| index.id(i).clone()).collect();
    let mut pairs = BTreeMap::new();
    for source in 0..n {
        let mu = mu_shortest_from(&index, source);
        let nu = nu_longest_from(&index, source);
        for target in source + 1..n {
            let (Some(d_mu), Some(d_nu)) = (mu[target], nu[target]) else {
                return Err(MetricsError::Disconnected);
            };
            pairs.insert(
                VertexPair::new(vertices[source].clone(), vertices[target].clone()),
                DistancePair { d_mu, d_nu },
            );
        }
    }
    Ok(DistanceMap { vertices, pairs })
}

/// Componentwise max distance from `v` to every other vertex.
pub fn eccentricity(
    g: &IvfGraph,
    v: &VertexId,
    cap: usize,
) -> Result<EccentricityPair, MetricsError> {
    if !g.has_vertex(v) {
        check_valid(g)?;
        return Err(MetricsError::UnknownVertex(v.clone()));
    }
    if g.vertex_count() < 2 {
        check_valid(g)?;
        return Err(MetricsError::TooFewVertices);
    }
    let map = distance_map(g, cap)?;
    Ok(map.eccentricity(v).expect("two or more vertices"))
}

/// Componentwise min of all eccentricities.
pub fn radius(g: &IvfGraph, cap: usize) -> Result<DistancePair, MetricsError> {
    spread(g, cap, DistanceMap::radius)
}

/// Componentwise max of all eccentricities.
pub fn diameter(g: &IvfGraph, cap: usize) -> Result<DistancePair, MetricsError> {
    spread(g, cap, DistanceMap::diameter)
}

fn spread(
    g: &IvfGraph,
    cap: usize,
    pick: fn(&DistanceMap) -> Option<DistancePair>,
) -> Result<DistancePair, MetricsError> {
    if g.vertex_count() < 2 {
        check_valid(g)?;
        return Err(MetricsError::TooFewVertices);
    }
    let map = distance_map(g, cap)?;
    Ok(pick(&map).expect("two or more vertices"))
}

/// Componentwise max over simple `u`-`v` paths of each path's weakest edge
/// weight; `(0, 0)` when no path exists.
pub fn strength_of_connectedness(
    g: &IvfGraph,
    u: &VertexId,
    v: &VertexId,
    cap: usize,
) -> Result<StrengthPair, MetricsError> {
    check_valid(g)?;
    let paths = enumerate_simple_paths(g, u, v, cap)?;
    let mut s_mu = Scalar::ZERO;
    let mut s_nu = Scalar::ZERO;
    for path in &paths {
        let mut weakest_mu = Scalar::ONE;
        let mut weakest_nu = Scalar::ONE;
        for pair in path.vertices().windows(2) {
            let weight = g
                .edge_weight(&pair[0], &pair[1])
                .expect("enumerated paths follow edges");
            weakest_mu = weakest_mu.min(weight.mu);
            weakest_nu = weakest_nu.min(weight.nu);
        }
        s_mu = s_mu.max(weakest_mu);
        s_nu = s_nu.max(weakest_nu);
    }
    Ok(StrengthPair { s_mu, s_nu })
}
