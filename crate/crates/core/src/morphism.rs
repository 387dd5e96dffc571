//! Morphism decision procedures between two graphs.
//!
//! Three kinds are supported: homomorphisms (any total map, memberships
//! weakly increase), isomorphisms (bijection, memberships equal), and
//! co-weak isomorphisms (bijection, vertex memberships weakly increase,
//! edge memberships equal). All three are decided by exhaustive pruned
//! backtracking, which is exact but factorial, hence the vertex cap.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{IvfGraph, ValidationReport, VertexId, VertexPair};
use crate::interval::MembershipInterval;

/// Vertex-count cap for morphism searches; factorial (bijective kinds) or
/// exponential (homomorphism) beyond it.
pub const DEFAULT_MORPHISM_CAP: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MorphismKind {
    Homomorphism,
    Isomorphism,
    CoWeak,
}

impl MorphismKind {
    pub fn is_bijective(self) -> bool {
        !matches!(self, MorphismKind::Homomorphism)
    }
}

impl fmt::Display for MorphismKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MorphismKind::Homomorphism => "homomorphism",
            MorphismKind::Isomorphism => "isomorphism",
            MorphismKind::CoWeak => "co-weak isomorphism",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown morphism kind `{0}`; expected hom, iso or co-weak")]
pub struct ParseMorphismKindError(String);

impl std::str::FromStr for MorphismKind {
    type Err = ParseMorphismKindError;

    fn from_str(s: &str) -> Result<MorphismKind, ParseMorphismKindError> {
        match s {
            "hom" | "homomorphism" => Ok(MorphismKind::Homomorphism),
            "iso" | "isomorphism" => Ok(MorphismKind::Isomorphism),
            "co-weak" | "coweak" => Ok(MorphismKind::CoWeak),
            other => Err(ParseMorphismKindError(other.to_string())),
        }
    }
}

/// A candidate vertex map between two graphs, tagged with the kind whose
/// constraints it claims to satisfy.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexMap {
    pub kind: MorphismKind,
    pub mapping: BTreeMap<VertexId, VertexId>,
}

impl VertexMap {
    pub fn get(&self, v: &VertexId) -> Option<&VertexId> {
        self.mapping.get(v)
    }
}

impl fmt::Display for VertexMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (from, to)) in self.mapping.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{from} -> {to}")?;
        }
        Ok(())
    }
}

/// One broken morphism constraint found by [`verify_map`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MorphismViolation {
    UnmappedVertex {
        vertex: VertexId,
    },
    UnknownSource {
        vertex: VertexId,
    },
    UnknownTarget {
        from: VertexId,
        to: VertexId,
    },
    NotABijection {
        detail: String,
    },
    VertexWeightNotLe {
        vertex: VertexId,
        found: MembershipInterval,
        target: MembershipInterval,
    },
    VertexWeightNotEqual {
        vertex: VertexId,
        found: MembershipInterval,
        target: MembershipInterval,
    },
    EdgeWeightNotLe {
        edge: VertexPair,
        found: MembershipInterval,
        target: MembershipInterval,
    },
    EdgeWeightNotEqual {
        edge: VertexPair,
        found: MembershipInterval,
        target: MembershipInterval,
    },
}

impl fmt::Display for MorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismViolation::UnmappedVertex { vertex } => {
                write!(f, "vertex {vertex} has no image")
            }
            MorphismViolation::UnknownSource { vertex } => {
                write!(f, "map source {vertex} is not a vertex of the first graph")
            }
            MorphismViolation::UnknownTarget { from, to } => {
                write!(f, "{from} maps to {to}, not a vertex of the second graph")
            }
            MorphismViolation::NotABijection { detail } => {
                write!(f, "not a bijection: {detail}")
            }
            MorphismViolation::VertexWeightNotLe {
                vertex,
                found,
                target,
            } => {
                write!(
                    f,
                    "vertex {vertex}: interval {found} not <= image interval {target}"
                )
            }
            MorphismViolation::VertexWeightNotEqual {
                vertex,
                found,
                target,
            } => {
                write!(
                    f,
                    "vertex {vertex}: interval {found} != image interval {target}"
                )
            }
            MorphismViolation::EdgeWeightNotLe {
                edge,
                found,
                target,
            } => {
                write!(
                    f,
                    "edge {edge}: weight {found} not <= image weight {target}"
                )
            }
            MorphismViolation::EdgeWeightNotEqual {
                edge,
                found,
                target,
            } => {
                write!(f, "edge {edge}: weight {found} != image weight {target}")
            }
        }
    }
}

/// Everything [`verify_map`] found wrong with a candidate map.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MorphismReport {
    violations: Vec<MorphismViolation>,
}

impl MorphismReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[MorphismViolation] {
        &self.violations
    }
}

impl fmt::Display for MorphismReport {
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

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("invalid {side} graph:\n{report}")]
    InvalidGraph {
        side: &'static str,
        report: ValidationReport,
    },
    #[error("graphs have {vertices} vertices, over the search cap of {cap}")]
    TooLarge { vertices: usize, cap: usize },
}

fn check_inputs(g1: &IvfGraph, g2: &IvfGraph, cap: usize) -> Result<(), MorphismError> {
    for (side, g) in [("first", g1), ("second", g2)] {
        let report = g.validate();
        if !report.is_valid() {
            return Err(MorphismError::InvalidGraph { side, report });
        }
    }
    let vertices = g1.vertex_count().max(g2.vertex_count());
    if vertices > cap {
        return Err(MorphismError::TooLarge { vertices, cap });
    }
    Ok(())
}

fn le(a: MembershipInterval, b: MembershipInterval) -> bool {
    a.mu <= b.mu && a.nu <= b.nu
}

/// Indexed form of one graph for the backtracking loop: ids in sorted
/// order, so candidate assignments are explored lexicographically.
struct Indexed {
    ids: Vec<VertexId>,
    weights: Vec<MembershipInterval>,
    adjacency: Vec<Vec<Option<MembershipInterval>>>,
    degrees: Vec<usize>,
}

impl Indexed {
    fn new(g: &IvfGraph) -> Indexed {
        let ids: Vec<VertexId> = g.vertex_ids().cloned().collect();
        let weights: Vec<MembershipInterval> = g.vertices().map(|(_, w)| *w).collect();
        let position: BTreeMap<&VertexId, usize> =
            ids.iter().enumerate().map(|(i, id)| (id, i)).collect();
        let n = ids.len();
        let mut adjacency = vec![vec![None; n]; n];
        for (pair, weight) in g.edges() {
            let (x, y) = (position[pair.first()], position[pair.second()]);
            adjacency[x][y] = Some(*weight);
            adjacency[y][x] = Some(*weight);
        }
        let degrees = adjacency
            .iter()
            .map(|row| row.iter().flatten().count())
            .collect();
        Indexed {
            ids,
            weights,
            adjacency,
            degrees,
        }
    }
}

/// Whether assigning `j` (in g2) to `i` (in g1) is consistent with the
/// already-assigned prefix `assigned[..i]`.
fn consistent(
    kind: MorphismKind,
    left: &Indexed,
    right: &Indexed,
    assigned: &[usize],
    i: usize,
    j: usize,
) -> bool {
    let vertex_ok = match kind {
        MorphismKind::Isomorphism => left.weights[i] == right.weights[j],
        MorphismKind::Homomorphism | MorphismKind::CoWeak => le(left.weights[i], right.weights[j]),
    };
    if !vertex_ok {
        return false;
    }
    match kind {
        MorphismKind::Isomorphism => {
            if left.degrees[i] != right.degrees[j] {
                return false;
            }
        }
        MorphismKind::CoWeak => {
            if left.degrees[i] > right.degrees[j] {
                return false;
            }
        }
        MorphismKind::Homomorphism => {}
    }
    for (k, &jk) in assigned.iter().enumerate().take(i) {
        let e1 = left.adjacency[i][k];
        let e2 = right.adjacency[j][jk];
        let edge_ok = match kind {
            // Equality over all pairs, absent edges included: a bijection
            // satisfying this leaves no unmatched edge on either side.
            MorphismKind::Isomorphism => e1 == e2,
            // Equality over the first graph's edges only; extra edges in
            // the second graph are permitted.
            MorphismKind::CoWeak => match e1 {
                Some(w1) => e2 == Some(w1),
                None => true,
            },
            // Weak increase over the first graph's edges. A stored edge has
            // nu > 0, so a missing image edge can never satisfy it.
            MorphismKind::Homomorphism => match e1 {
                Some(w1) => le(w1, e2.unwrap_or(MembershipInterval::ZERO)),
                None => true,
            },
        };
        if !edge_ok {
            return false;
        }
    }
    true
}

fn sorted_weights(values: impl Iterator<Item = MembershipInterval>) -> Vec<(u64, u64)> {
    let mut v: Vec<(u64, u64)> = values
        .map(|w| (w.mu.ten_thousandths(), w.nu.ten_thousandths()))
        .collect();
    v.sort_unstable();
    v
}

/// Searches for a morphism of the requested kind, exploring images in
/// lexicographic vertex-id order and returning the first witness, or `None`
/// when the exhaustive search finds nothing.
pub fn find_morphism(
    g1: &IvfGraph,
    g2: &IvfGraph,
    kind: MorphismKind,
    cap: usize,
) -> Result<Option<VertexMap>, MorphismError> {
    check_inputs(g1, g2, cap)?;
    if kind.is_bijective() {
        if g1.vertex_count() != g2.vertex_count() {
            return Ok(None);
        }
        if kind == MorphismKind::Isomorphism {
            // Necessary conditions of weight-preserving bijections, cheap
            // to refute before the factorial search.
            if g1.edge_count() != g2.edge_count()
                || sorted_weights(g1.vertices().map(|(_, w)| *w))
                    != sorted_weights(g2.vertices().map(|(_, w)| *w))
                || sorted_weights(g1.edges().map(|(_, w)| *w))
                    != sorted_weights(g2.edges().map(|(_, w)| *w))
            {
                return Ok(None);
            }
        }
    }

    let left = Indexed::new(g1);
    let right = Indexed::new(g2);
    let mut assigned: Vec<usize> = Vec::with_capacity(left.ids.len());
    let mut used = vec![false; right.ids.len()];
    let found = assign(kind, &left, &right, &mut assigned, &mut used);
    Ok(found.then(|| VertexMap {
        kind,
        mapping: assigned
            .iter()
            .enumerate()
            .map(|(i, &j)| (left.ids[i].clone(), right.ids[j].clone()))
            .collect(),
    }))
}

fn assign(
    kind: MorphismKind,
    left: &Indexed,
    right: &Indexed,
    assigned: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let i = assigned.len();
    if i == left.ids.len() {
        return true;
    }
    for j in 0..right.ids.len() {
        if kind.is_bijective() && used[j] {
            continue;
        }
        if !consistent(kind, left, right, assigned, i, j) {
            continue;
        }
        assigned.push(j);
        used[j] = true;
        if assign(kind, left, right, assigned, used) {
            return true;
        }
        used[j] = false;
        assigned.pop();
    }
    false
}

/// Checks a candidate map against the constraints of its kind and lists
/// every violation. An empty report means the map is a witness.
pub fn verify_map(g1: &IvfGraph, g2: &IvfGraph, m: &VertexMap) -> MorphismReport {
    let mut violations = Vec::new();

    for v in m.mapping.keys() {
        if !g1.has_vertex(v) {
            violations.push(MorphismViolation::UnknownSource { vertex: v.clone() });
        }
    }
    for v in g1.vertex_ids() {
        if !m.mapping.contains_key(v) {
            violations.push(MorphismViolation::UnmappedVertex { vertex: v.clone() });
        }
    }
    for (from, to) in &m.mapping {
        if !g2.has_vertex(to) {
            violations.push(MorphismViolation::UnknownTarget {
                from: from.clone(),
                to: to.clone(),
            });
        }
    }
    if !violations.is_empty() {
        return MorphismReport { violations };
    }

    if m.kind.is_bijective() {
        let mut images: BTreeMap<&VertexId, &VertexId> = BTreeMap::new();
        for (from, to) in &m.mapping {
            if let Some(previous) = images.insert(to, from) {
                violations.push(MorphismViolation::NotABijection {
                    detail: format!("{previous} and {from} both map to {to}"),
                });
            }
        }
        if m.mapping.len() != g2.vertex_count() {
            violations.push(MorphismViolation::NotABijection {
                detail: format!(
                    "{} vertices mapped onto {}",
                    m.mapping.len(),
                    g2.vertex_count()
                ),
            });
        }
    }

    for (v, weight) in g1.vertices() {
        let image = &m.mapping[v];
        let target = g2.vertex_weight(image).expect("targets checked");
        match m.kind {
            MorphismKind::Isomorphism => {
                if *weight != target {
                    violations.push(MorphismViolation::VertexWeightNotEqual {
                        vertex: v.clone(),
                        found: *weight,
                        target,
                    });
                }
            }
            MorphismKind::Homomorphism | MorphismKind::CoWeak => {
                if !le(*weight, target) {
                    violations.push(MorphismViolation::VertexWeightNotLe {
                        vertex: v.clone(),
                        found: *weight,
                        target,
                    });
                }
            }
        }
    }

    match m.kind {
        MorphismKind::Isomorphism => {
            // Equality over every vertex pair; with a bijection this also
            // rules out edges of g2 missed by the image.
            let ids: Vec<&VertexId> = g1.vertex_ids().collect();
            for (a, x) in ids.iter().enumerate() {
                for y in &ids[a + 1..] {
                    let found = g1.edge_weight(x, y).unwrap_or(MembershipInterval::ZERO);
                    let target = g2
                        .edge_weight(&m.mapping[*x], &m.mapping[*y])
                        .unwrap_or(MembershipInterval::ZERO);
                    if found != target {
                        violations.push(MorphismViolation::EdgeWeightNotEqual {
                            edge: VertexPair::new((*x).clone(), (*y).clone()),
                            found,
                            target,
                        });
                    }
                }
            }
        }
        MorphismKind::CoWeak => {
            for (pair, weight) in g1.edges() {
                let target = g2
                    .edge_weight(&m.mapping[pair.first()], &m.mapping[pair.second()])
                    .unwrap_or(MembershipInterval::ZERO);
                if *weight != target {
                    violations.push(MorphismViolation::EdgeWeightNotEqual {
                        edge: pair.clone(),
                        found: *weight,
                        target,
                    });
                }
            }
        }
        MorphismKind::Homomorphism => {
            for (pair, weight) in g1.edges() {
                let target = g2
                    .edge_weight(&m.mapping[pair.first()], &m.mapping[pair.second()])
                    .unwrap_or(MembershipInterval::ZERO);
                if !le(*weight, target) {
                    violations.push(MorphismViolation::EdgeWeightNotLe {
                        edge: pair.clone(),
                        found: *weight,
                        target,
                    });
                }
            }
        }
    }

    MorphismReport { violations }
}

/// Inverts a bijective map; `None` for homomorphism-kind or non-injective
/// maps.
pub fn invert(m: &VertexMap) -> Option<VertexMap> {
    if !m.kind.is_bijective() {
        return None;
    }
    let mut mapping = BTreeMap::new();
    for (from, to) in &m.mapping {
        if mapping.insert(to.clone(), from.clone()).is_some() {
            return None;
        }
    }
    Some(VertexMap {
        kind: m.kind,
        mapping,
    })
}
