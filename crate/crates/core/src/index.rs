//! Dense adjacency view over an [`IvfGraph`] for the traversal algorithms.
//! Vertices are numbered by id order so that neighbor iteration, and
//! therefore every search in this crate, is deterministic.

use std::collections::BTreeMap;

use crate::graph::{IvfGraph, VertexId};
use crate::interval::MembershipInterval;

pub(crate) struct GraphIndex {
    ids: Vec<VertexId>,
    positions: BTreeMap<VertexId, usize>,
    adjacency: Vec<Vec<(usize, MembershipInterval)>>,
}

impl GraphIndex {
    /// Builds the view. Edges that would break a traversal (loops, unknown
    /// endpoints) are skipped; callers validate before algorithms run, so
    /// this only matters for validation itself.
    pub(crate) fn new(g: &IvfGraph) -> GraphIndex {
        let ids: Vec<VertexId> = g.vertex_ids().cloned().collect();
        let positions: BTreeMap<VertexId, usize> = ids
            .iter()
            .enumerate()
            .map(|(i, id)| (id.clone(), i))
            .collect();
        let mut adjacency = vec![Vec::new(); ids.len()];
        for (pair, weight) in g.edges() {
            if pair.is_loop() {
                continue;
            }
            let (Some(&x), Some(&y)) = (positions.get(pair.first()), positions.get(pair.second()))
            else {
                continue;
            };
            adjacency[x].push((y, *weight));
            adjacency[y].push((x, *weight));
        }
        for row in &mut adjacency {
            row.sort_by_key(|(neighbor, _)| *neighbor);
        }
        GraphIndex {
            ids,
            positions,
            adjacency,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.ids.len()
    }

    pub(crate) fn id(&self, i: usize) -> &VertexId {
        &self.ids[i]
    }

    pub(crate) fn position(&self, id: &VertexId) -> Option<usize> {
        self.positions.get(id).copied()
    }

    /// Neighbors of `i` in ascending position order.
    pub(crate) fn neighbors(&self, i: usize) -> &[(usize, MembershipInterval)] {
        &self.adjacency[i]
    }
}
