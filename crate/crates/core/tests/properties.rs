//! Randomized property suite: structural laws that must hold on every
//! generated graph, with fixed seeds so failures replay.

mod common;

use std::collections::BTreeSet;

use common::*;
use ivfg::antipodal::{antipodal_graph, is_spanning_subgraph_of, AntipodalClause};
use ivfg::generate;
use ivfg::metrics::{self, DEFAULT_VERTEX_CAP};
use ivfg::morphism::{find_morphism, invert, verify_map, MorphismKind, VertexMap};
use ivfg::status::status_summary;
use ivfg::{IvfGraph, MembershipInterval, Scalar, VertexId};
use proptest::prelude::*;
use rand::Rng;

const CAP: usize = DEFAULT_VERTEX_CAP;

#[test]
fn distances_are_symmetric() {
    let mut rng = seeded(101);
    for round in 0..40 {
        let n = rng.gen_range(2..=7);
        let g = random_connected_graph(&mut rng, n);
        let ids: Vec<VertexId> = g.vertex_ids().cloned().collect();
        for (a, u) in ids.iter().enumerate() {
            for v in &ids[a + 1..] {
                let forward = metrics::distance(&g, u, v, CAP).unwrap();
                let backward = metrics::distance(&g, v, u, CAP).unwrap();
                assert_eq!(forward, backward, "round {round}, pair {u}-{v}");
            }
        }
    }
}

#[test]
fn distance_matches_the_enumeration_oracle() {
    let mut rng = seeded(102);
    for round in 0..30 {
        let n = rng.gen_range(2..=6);
        let g = random_connected_graph(&mut rng, n);
        let ids: Vec<VertexId> = g.vertex_ids().cloned().collect();
        for (a, u) in ids.iter().enumerate() {
            for v in &ids[a + 1..] {
                let fast = metrics::distance(&g, u, v, CAP).unwrap();
                let slow = oracle_distance(&g, u, v).expect("connected");
                assert_eq!(fast, slow, "round {round}, pair {u}-{v}");
            }
        }
    }
}

#[test]
fn mu_distance_satisfies_the_triangle_inequality() {
    let mut rng = seeded(103);
    for round in 0..40 {
        let n = rng.gen_range(3..=7);
        let g = random_connected_graph(&mut rng, n);
        let map = metrics::distance_map(&g, CAP).unwrap();
        let ids: Vec<VertexId> = g.vertex_ids().cloned().collect();
        for u in &ids {
            for v in &ids {
                for w in &ids {
                    if u == v || v == w || u == w {
                        continue;
                    }
                    let uw = map.get(u, w).unwrap().d_mu;
                    let uv = map.get(u, v).unwrap().d_mu;
                    let vw = map.get(v, w).unwrap().d_mu;
                    assert!(uw <= uv + vw, "round {round}: {u},{v},{w}");
                }
            }
        }
    }
}

#[test]
fn radius_is_at_most_the_diameter() {
    let mut rng = seeded(104);
    for _ in 0..60 {
        let n = rng.gen_range(2..=8);
        let g = random_connected_graph(&mut rng, n);
        let r = metrics::radius(&g, CAP).unwrap();
        let d = metrics::diameter(&g, CAP).unwrap();
        assert!(r.d_mu <= d.d_mu && r.d_nu <= d.d_nu);
    }
}

#[test]
fn complete_constant_graphs_have_one_distance_value() {
    let mut rng = seeded(105);
    for n in 2..=6 {
        for _ in 0..10 {
            let weight = random_vertex_interval(&mut rng);
            let g = generate::complete_constant(n, weight).unwrap();
            let map = metrics::distance_map(&g, CAP).unwrap();
            let values: BTreeSet<(u64, u64)> = map
                .pairs()
                .map(|(_, d)| (d.d_mu.ten_thousandths(), d.d_nu.ten_thousandths()))
                .collect();
            assert_eq!(values.len(), 1, "n = {n}, weight = {weight}");
        }
    }
}

#[test]
fn strength_never_decreases_when_an_edge_is_added() {
    let mut rng = seeded(106);
    for round in 0..40 {
        let n = rng.gen_range(3..=6);
        let g = random_valid_graph(&mut rng, n);
        let ids: Vec<VertexId> = g.vertex_ids().cloned().collect();
        let missing: Vec<(VertexId, VertexId)> = ids
            .iter()
            .enumerate()
            .flat_map(|(a, x)| ids[a + 1..].iter().map(move |y| (x.clone(), y.clone())))
            .filter(|(x, y)| !g.has_edge(x, y))
            .collect();
        let Some((x, y)) = missing.first() else {
            continue;
        };
        let bound = g
            .vertex_weight(x)
            .unwrap()
            .componentwise_min(&g.vertex_weight(y).unwrap());
        let mut extended = g.clone();
        extended.add_edge(x.clone(), y.clone(), random_edge_weight(&mut rng, bound));
        assert!(extended.validate().is_valid());

        for (a, u) in ids.iter().enumerate() {
            for v in &ids[a + 1..] {
                let before = metrics::strength_of_connectedness(&g, u, v, CAP).unwrap();
                let after = metrics::strength_of_connectedness(&extended, u, v, CAP).unwrap();
                assert!(
                    before.s_mu <= after.s_mu && before.s_nu <= after.s_nu,
                    "round {round}: {u}-{v} weakened by adding {x}-{y}"
                );
            }
        }
    }
}

#[test]
fn generated_families_always_validate() {
    let mut rng = seeded(107);
    for _ in 0..30 {
        let weight = random_vertex_interval(&mut rng);
        let n = rng.gen_range(1..=8);
        assert!(generate::complete_constant(n, weight)
            .unwrap()
            .validate()
            .is_valid());

        let vertex = random_vertex_interval(&mut rng);
        let first = random_edge_weight(&mut rng, vertex);
        let second = random_edge_weight(&mut rng, vertex);
        let n = 2 * rng.gen_range(2..=5);
        assert!(generate::even_cycle_alternating(n, vertex, first, second)
            .unwrap()
            .validate()
            .is_valid());

        let n = rng.gen_range(1..=8);
        let weights: Vec<MembershipInterval> = (1..n)
            .map(|_| random_edge_weight(&mut rng, vertex))
            .collect();
        assert!(generate::path(n, vertex, &weights)
            .unwrap()
            .validate()
            .is_valid());
    }
}

#[test]
fn complement_is_an_involution() {
    let mut rng = seeded(108);
    for round in 0..50 {
        let n = rng.gen_range(1..=8);
        let g = random_valid_graph(&mut rng, n);
        let back = g.complement().unwrap().complement().unwrap();
        assert_eq!(back, g, "round {round}");
    }
}

#[test]
fn complement_of_a_complete_graph_is_edgeless() {
    let mut rng = seeded(109);
    for _ in 0..30 {
        let n = rng.gen_range(2..=7);
        let g = random_complete_graph(&mut rng, n);
        let c = g.complement().unwrap();
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.vertex_count(), n);
    }
}

#[test]
fn subgraph_relation_is_reflexive() {
    let mut rng = seeded(110);
    for _ in 0..30 {
        let n = rng.gen_range(1..=8);
        let g = random_valid_graph(&mut rng, n);
        assert!(g.is_subgraph_of(&g).unwrap());
    }
}

#[test]
fn antipodal_graphs_span_the_input_and_match_the_diameter() {
    let mut rng = seeded(111);
    for round in 0..40 {
        let n = rng.gen_range(2..=7);
        let g = random_connected_graph(&mut rng, n);
        let result = antipodal_graph(&g, CAP).unwrap();
        let a = &result.graph;

        assert!(is_spanning_subgraph_of(a, &g), "round {round}");
        assert!(a.validate().is_valid(), "round {round}");
        let diameter = metrics::diameter(&g, CAP).unwrap();
        assert_eq!(result.diameter_used, diameter);

        for (pair, weight) in a.edges() {
            let (x, y) = (pair.first(), pair.second());
            assert_eq!(
                metrics::distance(&g, x, y, CAP).unwrap(),
                diameter,
                "round {round}: edge {pair} does not attain the diameter"
            );
            match g.edge_weight(x, y) {
                Some(original) => assert_eq!(*weight, original),
                None => assert_eq!(
                    *weight,
                    g.vertex_weight(x)
                        .unwrap()
                        .componentwise_min(&g.vertex_weight(y).unwrap())
                ),
            }
        }
        for tagged in &result.pairs {
            let adjacent = g.has_edge(tagged.pair.first(), tagged.pair.second());
            assert_eq!(
                tagged.clause,
                if adjacent {
                    AntipodalClause::Neighbors
                } else {
                    AntipodalClause::NonNeighbors
                }
            );
        }
    }
}

#[test]
fn antipodal_of_complete_constant_is_the_graph_itself() {
    let mut rng = seeded(112);
    for n in 2..=6 {
        for _ in 0..10 {
            let weight = random_vertex_interval(&mut rng);
            let g = generate::complete_constant(n, weight).unwrap();
            let a = antipodal_graph(&g, CAP).unwrap().graph;
            assert_eq!(a, g, "antipodal changed a complete constant graph");
            assert!(find_morphism(&g, &a, MorphismKind::Isomorphism, CAP)
                .unwrap()
                .is_some());
        }
    }
}

#[test]
fn status_summary_figures_are_consistent() {
    let mut rng = seeded(113);
    for round in 0..40 {
        let n = rng.gen_range(2..=7);
        let g = random_connected_graph(&mut rng, n);
        let summary = status_summary(&g, CAP).unwrap();

        let mut total = (Scalar::ZERO, Scalar::ZERO);
        for s in summary.per_vertex.values() {
            assert!(summary.minimum.s_mu <= s.s_mu && s.s_mu <= summary.maximum.s_mu);
            assert!(summary.minimum.s_nu <= s.s_nu && s.s_nu <= summary.maximum.s_nu);
            total.0 += s.s_mu;
            total.1 += s.s_nu;
        }
        assert_eq!((summary.total.s_mu, summary.total.s_nu), total);

        // Each unordered pair contributes its distance to both endpoint
        // statuses, so the total is twice the pair sum.
        let map = metrics::distance_map(&g, CAP).unwrap();
        let mut pair_sum = (Scalar::ZERO, Scalar::ZERO);
        for (_, d) in map.pairs() {
            pair_sum.0 += d.d_mu;
            pair_sum.1 += d.d_nu;
        }
        assert_eq!(summary.total.s_mu, pair_sum.0 + pair_sum.0, "round {round}");
        assert_eq!(summary.total.s_nu, pair_sum.1 + pair_sum.1, "round {round}");

        assert_eq!(summary.self_median, summary.minimum == summary.maximum);
        assert_eq!(
            summary.self_median,
            summary.median.len() == g.vertex_count()
        );
        assert!(summary
            .median
            .iter()
            .all(|v| summary.per_vertex[v] == summary.minimum));
        assert!(!summary.mu_minimizers.is_empty());
        assert!(!summary.nu_minimizers.is_empty());
    }
}

#[test]
fn alternating_even_cycles_are_self_median() {
    let mut rng = seeded(114);
    for n in [4usize, 6, 8] {
        for _ in 0..10 {
            let vertex = random_vertex_interval(&mut rng);
            let first = random_edge_weight(&mut rng, vertex);
            let second = random_edge_weight(&mut rng, vertex);
            let g = generate::even_cycle_alternating(n, vertex, first, second).unwrap();
            let summary = status_summary(&g, CAP).unwrap();
            assert!(summary.self_median, "n = {n}, edges {first}/{second}");
        }
    }
}

#[test]
fn a_five_cycle_with_near_alternating_weights_is_not_self_median() {
    // An odd cycle cannot alternate perfectly: closing the ring forces two
    // same-weight edges to meet, which skews the statuses.
    let mut g = IvfGraph::new();
    let light: MembershipInterval = "0.1,0.2".parse().unwrap();
    let heavy: MembershipInterval = "0.3,0.4".parse().unwrap();
    for i in 1..=5 {
        g.add_vertex(vid(&format!("v{i}")), "0.5,0.5".parse().unwrap());
    }
    for (i, weight) in [light, heavy, light, heavy, light].into_iter().enumerate() {
        let x = vid(&format!("v{}", i + 1));
        let y = vid(&format!("v{}", (i + 1) % 5 + 1));
        g.add_edge(x, y, weight);
    }
    assert!(g.validate().is_valid());
    let summary = status_summary(&g, CAP).unwrap();
    assert!(!summary.self_median);
    assert_ne!(summary.minimum, summary.maximum);
}

#[test]
fn status_is_invariant_under_relabeling() {
    let mut rng = seeded(115);
    for _ in 0..30 {
        let n = rng.gen_range(2..=6);
        let g = random_connected_graph(&mut rng, n);
        let (renamed, map) = relabel(&mut rng, &g);
        let original = status_summary(&g, CAP).unwrap();
        let after = status_summary(&renamed, CAP).unwrap();
        for (v, s) in &original.per_vertex {
            assert_eq!(after.per_vertex[&map[v]], *s);
        }
        assert_eq!(original.minimum, after.minimum);
        assert_eq!(original.maximum, after.maximum);
        assert_eq!(original.self_median, after.self_median);
    }
}

#[test]
fn found_witnesses_pass_verification() {
    let mut rng = seeded(116);
    for round in 0..25 {
        let n = rng.gen_range(2..=5);

        let g = random_connected_graph(&mut rng, n);
        let (renamed, _) = relabel(&mut rng, &g);
        let witness = find_morphism(&g, &renamed, MorphismKind::Isomorphism, CAP)
            .unwrap()
            .expect("relabeling admits an isomorphism");
        assert!(
            verify_map(&g, &renamed, &witness).is_valid(),
            "round {round}"
        );

        let (g1, g2) = scaled_complete_pair(&mut rng, n);
        let witness = find_morphism(&g1, &g2, MorphismKind::CoWeak, CAP)
            .unwrap()
            .expect("identity is a co-weak isomorphism");
        assert!(verify_map(&g1, &g2, &witness).is_valid(), "round {round}");

        let witness = find_morphism(&g, &g, MorphismKind::Homomorphism, CAP)
            .unwrap()
            .expect("identity is a homomorphism");
        assert!(verify_map(&g, &g, &witness).is_valid(), "round {round}");
    }
}

#[test]
fn isomorphism_behaves_as_an_equivalence() {
    let mut rng = seeded(117);
    for _ in 0..20 {
        let n = rng.gen_range(2..=5);
        let g1 = random_connected_graph(&mut rng, n);
        let (g2, _) = relabel(&mut rng, &g1);
        let (g3, _) = relabel(&mut rng, &g2);

        let reflexive = find_morphism(&g1, &g1, MorphismKind::Isomorphism, CAP)
            .unwrap()
            .expect("identity witness");
        assert!(verify_map(&g1, &g1, &reflexive).is_valid());

        let forward = find_morphism(&g1, &g2, MorphismKind::Isomorphism, CAP)
            .unwrap()
            .expect("relabeling witness");
        let backward = invert(&forward).expect("witness is a bijection");
        assert!(verify_map(&g2, &g1, &backward).is_valid());

        let second = find_morphism(&g2, &g3, MorphismKind::Isomorphism, CAP)
            .unwrap()
            .expect("relabeling witness");
        let composed = VertexMap {
            kind: MorphismKind::Isomorphism,
            mapping: forward
                .mapping
                .iter()
                .map(|(u, v)| (u.clone(), second.mapping[v].clone()))
                .collect(),
        };
        assert!(verify_map(&g1, &g3, &composed).is_valid());
    }
}

#[test]
fn antipodal_construction_preserves_isomorphism() {
    let mut rng = seeded(118);
    for _ in 0..15 {
        let n = rng.gen_range(2..=5);
        let g1 = random_connected_graph(&mut rng, n);
        let (g2, _) = relabel(&mut rng, &g1);
        let a1 = antipodal_graph(&g1, CAP).unwrap().graph;
        let a2 = antipodal_graph(&g2, CAP).unwrap().graph;
        assert!(find_morphism(&a1, &a2, MorphismKind::Isomorphism, CAP)
            .unwrap()
            .is_some());
    }
}

#[test]
fn antipodal_construction_preserves_co_weak_maps_of_complete_graphs() {
    let mut rng = seeded(119);
    for _ in 0..15 {
        let n = rng.gen_range(2..=5);
        let (g1, g2) = scaled_complete_pair(&mut rng, n);
        assert!(find_morphism(&g1, &g2, MorphismKind::CoWeak, CAP)
            .unwrap()
            .is_some());
        let a1 = antipodal_graph(&g1, CAP).unwrap().graph;
        let a2 = antipodal_graph(&g2, CAP).unwrap().graph;
        assert!(find_morphism(&a1, &a2, MorphismKind::CoWeak, CAP)
            .unwrap()
            .is_some());
        assert!(find_morphism(&a1, &a2, MorphismKind::Homomorphism, CAP)
            .unwrap()
            .is_some());
    }
}

proptest! {
    #[test]
    fn scalar_display_parse_round_trip(units in 0u64..=20_000) {
        let value = Scalar::from_ten_thousandths(units);
        let text = value.to_string();
        prop_assert_eq!(text.parse::<Scalar>().unwrap(), value);
    }

    #[test]
    fn scalar_parsing_never_panics(text in "\\PC{0,12}") {
        let _ = text.parse::<Scalar>();
    }

    #[test]
    fn interval_pair_form_round_trips(mu in 0u64..=10_000, nu in 0u64..=10_000) {
        let interval = MembershipInterval::new(
            Scalar::from_ten_thousandths(mu),
            Scalar::from_ten_thousandths(nu),
        );
        let text = format!("{},{}", interval.mu, interval.nu);
        prop_assert_eq!(text.parse::<MembershipInterval>().unwrap(), interval);
    }
}
