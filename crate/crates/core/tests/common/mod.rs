//! Shared generators for the randomized suites. Weights are drawn on a
//! tenths grid, which the fixed-point scalars represent exactly, and every
//! generator takes an explicit seeded RNG so failures replay.

#![allow(dead_code)]

use std::collections::BTreeMap;

use ivfg::metrics::{self, DistancePair};
use ivfg::{IvfGraph, MembershipInterval, Scalar, VertexId};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn tenths(k: u64) -> Scalar {
    Scalar::from_ten_thousandths(k * 1000)
}

pub fn vid(s: &str) -> VertexId {
    VertexId::new(s).unwrap()
}

/// A vertex interval with nu >= 0.2, leaving room for a positive edge
/// weight below it.
pub fn random_vertex_interval(rng: &mut ChaCha8Rng) -> MembershipInterval {
    let nu = rng.gen_range(2..=10u64);
    let mu = rng.gen_range(0..=nu);
    MembershipInterval::new(tenths(mu), tenths(nu))
}

/// A legal edge weight under `bound`: nu positive, both components at most
/// the bound, well-formed.
pub fn random_edge_weight(rng: &mut ChaCha8Rng, bound: MembershipInterval) -> MembershipInterval {
    let bound_nu = bound.nu.ten_thousandths() / 1000;
    let bound_mu = bound.mu.ten_thousandths() / 1000;
    assert!(bound_nu >= 1, "bound leaves no room for an edge");
    let nu = rng.gen_range(1..=bound_nu);
    let mu = rng.gen_range(0..=bound_mu.min(nu));
    MembershipInterval::new(tenths(mu), tenths(nu))
}

fn vertex_name(i: usize) -> VertexId {
    vid(&format!("v{i}"))
}

fn add_random_edge(rng: &mut ChaCha8Rng, g: &mut IvfGraph, x: &VertexId, y: &VertexId) {
    let bound = g
        .vertex_weight(x)
        .unwrap()
        .componentwise_min(&g.vertex_weight(y).unwrap());
    let weight = random_edge_weight(rng, bound);
    g.add_edge(x.clone(), y.clone(), weight);
}

/// A valid graph on `n` vertices; edges appear independently, so the result
/// may be disconnected.
pub fn random_valid_graph(rng: &mut ChaCha8Rng, n: usize) -> IvfGraph {
    let mut g = IvfGraph::new();
    for i in 1..=n {
        g.add_vertex(vertex_name(i), random_vertex_interval(rng));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.gen_bool(0.4) {
                add_random_edge(rng, &mut g, &vertex_name(i), &vertex_name(j));
            }
        }
    }
    debug_assert!(g.validate().is_valid());
    g
}

/// A valid connected graph on `n` vertices: a random spanning tree plus
/// independent extra edges.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize) -> IvfGraph {
    let mut g = IvfGraph::new();
    for i in 1..=n {
        g.add_vertex(vertex_name(i), random_vertex_interval(rng));
    }
    for i in 2..=n {
        let parent = rng.gen_range(1..i);
        add_random_edge(rng, &mut g, &vertex_name(i), &vertex_name(parent));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            if !g.has_edge(&vertex_name(i), &vertex_name(j)) && rng.gen_bool(0.3) {
                add_random_edge(rng, &mut g, &vertex_name(i), &vertex_name(j));
            }
        }
    }
    debug_assert!(g.validate().is_valid());
    g
}

/// A complete graph with random vertex intervals: every pair is an edge at
/// exactly the componentwise minimum of its endpoints.
pub fn random_complete_graph(rng: &mut ChaCha8Rng, n: usize) -> IvfGraph {
    let mut g = IvfGraph::new();
    for i in 1..=n {
        g.add_vertex(vertex_name(i), random_vertex_interval(rng));
    }
    let ids: Vec<VertexId> = g.vertex_ids().cloned().collect();
    for (a, x) in ids.iter().enumerate() {
        for y in &ids[a + 1..] {
            let bound = g
                .vertex_weight(x)
                .unwrap()
                .componentwise_min(&g.vertex_weight(y).unwrap());
            g.add_edge(x.clone(), y.clone(), bound);
        }
    }
    debug_assert!(g.is_complete().unwrap());
    g
}

/// A pair of complete graphs joined by a co-weak isomorphism (the identity):
/// the second graph raises a maximal vertex interval per component, which
/// preserves every pairwise minimum and therefore every edge weight.
pub fn scaled_complete_pair(rng: &mut ChaCha8Rng, n: usize) -> (IvfGraph, IvfGraph) {
    let g1 = random_complete_graph(rng, n);
    let ids: Vec<VertexId> = g1.vertex_ids().cloned().collect();
    let weight = |id: &VertexId| g1.vertex_weight(id).unwrap();

    let mut raised: BTreeMap<VertexId, MembershipInterval> =
        ids.iter().map(|id| (id.clone(), weight(id))).collect();
    let nu_argmax = ids
        .iter()
        .max_by_key(|id| (weight(id).nu, std::cmp::Reverse((*id).clone())))
        .unwrap()
        .clone();
    let nu_floor = weight(&nu_argmax).nu.ten_thousandths() / 1000;
    raised.get_mut(&nu_argmax).unwrap().nu = tenths(rng.gen_range(nu_floor..=10));

    let mu_argmax = ids
        .iter()
        .max_by_key(|id| (weight(id).mu, std::cmp::Reverse((*id).clone())))
        .unwrap()
        .clone();
    let mu_floor = weight(&mu_argmax).mu.ten_thousandths() / 1000;
    let mu_ceiling = raised[&mu_argmax].nu.ten_thousandths() / 1000;
    raised.get_mut(&mu_argmax).unwrap().mu = tenths(rng.gen_range(mu_floor..=mu_ceiling));

    let mut g2 = IvfGraph::new();
    for (id, interval) in raised {
        g2.add_vertex(id, interval);
    }
    for (pair, w) in g1.edges() {
        g2.add_edge(pair.first().clone(), pair.second().clone(), *w);
    }
    debug_assert!(g2.is_complete().unwrap());
    (g1, g2)
}

/// Distance by brute force: enumerate every simple path and take the
/// extremes of the path lengths. Independent of the production distance
/// code, which it cross-checks.
pub fn oracle_distance(g: &IvfGraph, u: &VertexId, v: &VertexId) -> Option<DistancePair> {
    let paths = metrics::enumerate_simple_paths(g, u, v, g.vertex_count()).unwrap();
    let mut best: Option<DistancePair> = None;
    for path in &paths {
        let length = metrics::path_length(g, path.vertices()).unwrap();
        let entry = best.get_or_insert(DistancePair {
            d_mu: length.l_mu,
            d_nu: length.l_nu,
        });
        entry.d_mu = entry.d_mu.min(length.l_mu);
        entry.d_nu = entry.d_nu.max(length.l_nu);
    }
    best
}

/// Renames every vertex by a random permutation onto fresh names, keeping
/// all weights. Returns the renamed graph and the old-to-new map.
pub fn relabel(rng: &mut ChaCha8Rng, g: &IvfGraph) -> (IvfGraph, BTreeMap<VertexId, VertexId>) {
    let old: Vec<VertexId> = g.vertex_ids().cloned().collect();
    let mut new: Vec<VertexId> = (1..=old.len()).map(|i| vid(&format!("w{i}"))).collect();
    new.shuffle(rng);
    let map: BTreeMap<VertexId, VertexId> = old.iter().cloned().zip(new).collect();

    let mut renamed = IvfGraph::new();
    for (id, weight) in g.vertices() {
        renamed.add_vertex(map[id].clone(), *weight);
    }
    for (pair, weight) in g.edges() {
        renamed.add_edge(
            map[pair.first()].clone(),
            map[pair.second()].clone(),
            *weight,
        );
    }
    (renamed, map)
}
