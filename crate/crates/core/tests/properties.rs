//! Property tests for the module invariants: relabeling invariance,
//! involution and counting identities, solver witness soundness, and the
//! spectral monotonicity facts.

use proptest::prelude::*;
use rayon::prelude::*;

use dissoc_core::canon::canonical_form;
use dissoc_core::enumerate::{enumerate_graphs, EnumOptions};
use dissoc_core::graph::{Graph, VertexPartition, VertexSet};
use dissoc_core::graph6;
use dissoc_core::solvers::{
    check_d_independent, d_independence_number, dissociation_number, max_matching,
};
use dissoc_core::spectral::{quotient, rho, spectrum};

/// Random graph on 1..=9 vertices as (n, edge mask).
fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=9).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        (Just(n), 0u64..(1u64 << bits)).prop_map(|(n, mask)| {
            let mut g = Graph::empty(n).unwrap();
            let mut b = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    if mask >> b & 1 == 1 {
                        g.add_edge(i, j);
                    }
                    b += 1;
                }
            }
            g
        })
    })
}

/// Fisher-Yates permutation of 0..n from an explicit seed.
fn perm_from_seed(n: usize, seed: u64) -> Vec<usize> {
    let mut state = seed | 1;
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let j = (state >> 33) as usize % (i + 1);
        p.swap(i, j);
    }
    p
}

proptest! {
    #[test]
    fn canonical_form_is_relabeling_invariant(g in arb_graph(), seed in any::<u64>()) {
        let h = g.permuted(&perm_from_seed(g.n(), seed));
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn complement_is_involution(g in arb_graph()) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(
            g.edge_count() + g.complement().edge_count(),
            g.n() * (g.n() - 1) / 2
        );
    }

    #[test]
    fn join_edge_count_identity(a in arb_graph(), b in arb_graph()) {
        let j = a.join(&b).unwrap();
        prop_assert_eq!(j.edge_count(), a.edge_count() + b.edge_count() + a.n() * b.n());
    }

    #[test]
    fn graph6_round_trip(g in arb_graph()) {
        let enc = graph6::encode(&g).unwrap();
        prop_assert_eq!(graph6::decode(&enc).unwrap(), g);
    }

    #[test]
    fn kelmans_preserves_size_and_uv_adjacency(g in arb_graph(), u in 0usize..9, v in 0usize..9) {
        let n = g.n();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v);
        let h = g.kelmans(u, v).unwrap();
        prop_assert_eq!(h.edge_count(), g.edge_count());
        prop_assert_eq!(h.has_edge(u, v), g.has_edge(u, v));
    }

    #[test]
    fn witnesses_satisfy_their_degree_condition(g in arb_graph(), d in 0usize..3) {
        let w = d_independence_number(&g, d).unwrap();
        prop_assert!(check_d_independent(&g, w.witness, d));
        prop_assert_eq!(w.witness.len(), w.value);
    }

    #[test]
    fn d_independence_monotone_in_d(g in arb_graph()) {
        let i0 = d_independence_number(&g, 0).unwrap().value;
        let i1 = d_independence_number(&g, 1).unwrap().value;
        let i2 = d_independence_number(&g, 2).unwrap().value;
        prop_assert!(i0 <= i1 && i1 <= i2);
        prop_assert_eq!(i1, dissociation_number(&g).unwrap().value);
    }

    #[test]
    fn edge_deletion_never_decreases_i_d(g in arb_graph(), d in 0usize..2) {
        prop_assume!(g.edge_count() > 0);
        let (u, v) = g.edges()[0];
        let mut h = g.clone();
        h.remove_edge(u, v);
        prop_assert!(
            d_independence_number(&h, d).unwrap().value
                >= d_independence_number(&g, d).unwrap().value
        );
    }

    #[test]
    fn matching_edges_are_disjoint_and_present(g in arb_graph()) {
        let m = max_matching(&g);
        let mut used = VertexSet::EMPTY;
        for &(u, v) in &m.edges {
            prop_assert!(g.has_edge(u, v));
            prop_assert!(!used.contains(u) && !used.contains(v));
            used.insert(u);
            used.insert(v);
        }
        prop_assert_eq!(m.size, m.edges.len());
    }

    #[test]
    fn spectrum_trace_and_radius_sanity(g in arb_graph()) {
        let s = spectrum(&g);
        let trace: f64 = s.eigenvalues.iter().sum();
        prop_assert!(trace.abs() < 1e-9);
        prop_assert!(s.residual <= 1e-10);
        let avg = 2.0 * g.edge_count() as f64 / g.n() as f64;
        prop_assert!(s.rho >= avg - 1e-9);
    }
}

/// Adding an edge to a connected graph strictly increases the spectral
/// radius: random connected 8-vertex graphs, every missing edge.
#[test]
fn edge_addition_strictly_increases_rho() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
    let mut done = 0;
    while done < 100 {
        let g = dissoc_core::verify::random_graph(&mut rng, 8, 0.35);
        if !g.is_connected() || g.edge_count() == 28 {
            continue;
        }
        done += 1;
        let base = rho(&g);
        let u = rng.random_range(0..8);
        let Some(v) = (0..8).find(|&v| v != u && !g.has_edge(u, v)) else {
            continue;
        };
        let mut h = g.clone();
        h.add_edge(u, v);
        assert!(rho(&h) > base + 1e-12, "edge addition must increase rho");
    }
}

/// Exhaustive Kelmans monotonicity over every connected graph on up to 8
/// vertices and every ordered vertex pair.
#[test]
fn kelmans_never_decreases_rho_exhaustively() {
    for n in 2..=8usize {
        let graphs = enumerate_graphs(n, &EnumOptions::connected()).unwrap();
        let worst = graphs
            .par_iter()
            .map(|g| {
                let base = rho(g);
                let mut w = f64::INFINITY;
                for u in 0..n {
                    for v in 0..n {
                        if u != v {
                            w = w.min(rho(&g.kelmans(u, v).unwrap()) - base);
                        }
                    }
                }
                w
            })
            .reduce(|| f64::INFINITY, f64::min);
        assert!(worst >= -1e-9, "n={n}: worst delta {worst}");
    }
}

/// Every eigenvalue of an equitable quotient appears in the full spectrum.
#[test]
fn quotient_eigenvalues_embed_in_spectrum() {
    use dissoc_core::constructions::{aligned_cp_cycle, hat_minimizer_4};
    let mut cases: Vec<(Graph, VertexPartition)> = Vec::new();
    for n in [8usize, 12, 16] {
        let hat = hat_minimizer_4(n).unwrap();
        let (u, v) = hat.bridge;
        let (up, vp) = hat.non_neighbors;
        let rest = VertexSet::full(n).minus(VertexSet::from_iter([u, v, up, vp]));
        let p = VertexPartition::new(
            n,
            vec![
                VertexSet::from_iter([up, vp]),
                VertexSet::from_iter([u, v]),
                rest,
            ],
        )
        .unwrap();
        cases.push((hat.graph, p));
    }
    for (k, m) in [(3usize, 4usize), (4, 4)] {
        let c = aligned_cp_cycle(k, m).unwrap();
        let conn = VertexSet::from_iter(c.connectors.iter().flat_map(|&(a, b)| [a, b]));
        let p =
            VertexPartition::new(k * m, vec![conn, VertexSet::full(k * m).minus(conn)]).unwrap();
        cases.push((c.graph, p));
    }
    for (g, p) in cases {
        let q = quotient(&g, &p).expect("equitable");
        let full = spectrum(&g).eigenvalues;
        for ev in q.eigenvalues() {
            assert!(
                full.iter().any(|f| (f - ev).abs() < 1e-8),
                "quotient eigenvalue {ev} not in spectrum"
            );
        }
    }
}

/// Spec example: round trip over all 11 classes on 4 vertices.
#[test]
fn graph6_round_trip_all_four_vertex_classes() {
    let graphs = enumerate_graphs(4, &EnumOptions::default()).unwrap();
    assert_eq!(graphs.len(), 11);
    for g in graphs {
        let enc = graph6::encode(&g).unwrap();
        assert_eq!(graph6::decode(&enc).unwrap(), g);
    }
}

/// Enumeration shards by edge count cover the full stream in order.
#[test]
fn edge_count_sharding_is_a_partition() {
    use dissoc_core::enumerate::enumerate_by_edge_count;
    let all = enumerate_graphs(6, &EnumOptions::default()).unwrap();
    let shards = enumerate_by_edge_count(6, &EnumOptions::default()).unwrap();
    let total: usize = shards.iter().map(|(_, v)| v.len()).sum();
    assert_eq!(total, all.len());
    let mut prev = None;
    for (e, shard) in &shards {
        assert!(shard.iter().all(|g| g.edge_count() == *e));
        if let Some(p) = prev {
            assert!(*e > p);
        }
        prev = Some(*e);
    }
}
