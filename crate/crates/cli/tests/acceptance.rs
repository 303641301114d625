//! Acceptance suite: every criterion at its stated tolerance, one
//! pass/fail line each (visible with `cargo test -- --nocapture`).

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dissoc_core::canon::are_isomorphic;
use dissoc_core::constructions::*;
use dissoc_core::enumerate::{enumerate_graphs, EnumOptions, DEFAULT_ENUM_CAP};
use dissoc_core::extremal::*;
use dissoc_core::graph::{Graph, VertexPartition, VertexSet};
use dissoc_core::solvers::*;
use dissoc_core::spectral::*;
use dissoc_core::verify::{random_graph, Manifest, Session, Verdict, VerifyOptions};

const EIGEN_TOL: f64 = 1e-9;
const TIE_MARGIN: f64 = 1e-7;

fn conclude(name: &str, ok: bool, detail: String) {
    println!(
        "ACCEPTANCE {name}: {} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "{name}: {detail}");
}

fn four_worker_pool() -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap()
}

#[test]
fn criterion_01_turan_values_and_witnesses() {
    let started = Instant::now();
    let caps = SearchCaps::default();
    let l5 = FamilySpec::OddCocktail(5);
    let expected = [(5usize, 8usize, 1usize), (6, 11, 2), (7, 15, 1), (8, 20, 1)];
    let pool = four_worker_pool();
    let mut ok = true;
    let mut notes = Vec::new();
    pool.install(|| {
        for (n, want, classes) in expected {
            let r = ex_bruteforce(n, &l5, false, &caps).unwrap();
            let family = turan_family(n, 2).unwrap();
            let same_set = r.witnesses.len() == classes
                && family.len() == classes
                && family.iter().all(|m| {
                    r.witnesses
                        .iter()
                        .any(|w| are_isomorphic(w, &m.graph).unwrap())
                });
            ok &= r.value_int() == want && same_set;
            notes.push(format!(
                "ex({n})={} [{} classes]",
                r.value_int(),
                r.witnesses.len()
            ));
        }
    });
    let elapsed = started.elapsed();
    ok &= elapsed.as_secs() <= 300;
    conclude(
        "1 turan-values",
        ok,
        format!("{}; elapsed {elapsed:?}", notes.join(", ")),
    );
}

#[test]
fn criterion_02_edge_minimizers() {
    let caps = SearchCaps::default();
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 6..=9usize {
        let formula = n * (n - 1) / 2 - ex_l5_closed_form(n).unwrap() + 1;
        let r = emin_search(n, 4, &caps).unwrap();
        ok &= r.value_int() == formula;
        notes.push(format!("emin({n},4)={}", r.value_int()));
        if n >= 8 {
            let family = minimizer_family(n, 2).unwrap();
            let exact = r.witnesses.len() == family.len()
                && family
                    .iter()
                    .all(|m| r.witnesses.iter().any(|w| are_isomorphic(w, m).unwrap()));
            ok &= exact;
            notes.push(format!("minimizers(n={n})=family[{}]", family.len()));
        }
    }
    conclude("2 edge-minimizers", ok, notes.join(", "));
}

#[test]
fn criterion_03_spectral_minimizers() {
    let caps = SearchCaps::default();
    let mut ok = true;
    let mut notes = Vec::new();
    let expect: [(usize, Graph, Option<f64>); 3] = [
        (5, Graph::path(5).unwrap(), Some(3f64.sqrt())),
        (6, Graph::path(6).unwrap(), None),
        (7, Graph::cycle(7).unwrap(), Some(2.0)),
    ];
    for (n, target, rho_want) in expect {
        let r = rhomin_search(n, 4, &caps).unwrap();
        ok &= r.witnesses.len() == 1
            && !r.tie_warning
            && are_isomorphic(&r.witnesses[0], &target).unwrap();
        if let Some(want) = rho_want {
            ok &= (r.value - want).abs() <= EIGEN_TOL;
        }
        notes.push(format!("rhomin({n},4)={:.9}", r.value));
    }
    // n = 8: the hatted minimizer, root-finder against eigensolver
    let r8 = rhomin_search(8, 4, &caps).unwrap();
    let hat = hat_minimizer_4(8).unwrap();
    let poly = CharPoly::new(vec![1, -1, -4, 2]);
    let root = largest_root(&poly);
    ok &= r8.witnesses.len() == 1
        && !r8.tie_warning
        && are_isomorphic(&r8.witnesses[0], &hat.graph).unwrap()
        && (root - r8.value).abs() <= EIGEN_TOL;
    notes.push(format!("rhomin(8,4)={:.9} root={root:.9}", r8.value));
    conclude("3 spectral-minimizers", ok, notes.join(", "));
}

#[test]
fn criterion_04_quotient_machinery() {
    let mut ok = true;
    let mut notes = Vec::new();
    // n = 0 mod 4: three parts
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
        let q = quotient(&hat.graph, &p).expect("equitable");
        let c = n as i128 / 2;
        let poly = char_poly(&q).unwrap();
        ok &= poly.coefficients() == [1, 3 - c, -c, c - 2];
        let graph_rho = rho(&hat.graph);
        ok &= (q.rho() - graph_rho).abs() <= EIGEN_TOL;
        notes.push(format!("n={n} poly={:?}", poly.coefficients()));
    }
    // n = 2 mod 4: four parts
    for n in [10usize, 14] {
        let hat = hat_minimizer_4(n).unwrap();
        let (u, v) = hat.bridge;
        let (up, vp) = hat.non_neighbors;
        let vd = hat.v_delta.clone();
        let rest = VertexSet::full(n).minus(VertexSet::from_iter([u, v, up, vp, vd[0], vd[1]]));
        let p = VertexPartition::new(
            n,
            vec![
                VertexSet::from_iter([up, vp]),
                VertexSet::from_iter([u, v]),
                VertexSet::from_iter([vd[0], vd[1]]),
                rest,
            ],
        )
        .unwrap();
        let q = quotient(&hat.graph, &p).expect("equitable");
        let c = n as i128;
        let poly = char_poly(&q).unwrap();
        ok &= poly.coefficients() == [1, 4 - c / 2, 2 - c, -3, c / 2 - 1];
        ok &= (q.rho() - rho(&hat.graph)).abs() <= EIGEN_TOL;
        notes.push(format!("n={n} poly={:?}", poly.coefficients()));
    }
    conclude("4 quotient-machinery", ok, notes.join("; "));
}

#[test]
fn criterion_05_cp_cycle_closed_form() {
    let mut ok = true;
    let mut notes = Vec::new();
    for (k, m) in [(3usize, 4usize), (3, 6), (4, 4), (5, 4)] {
        let n = k * m;
        let cycle = aligned_cp_cycle(k, m).unwrap();
        let r = rho(&cycle.graph);
        let closed = cp_cycle_rho_closed_form(m as f64).unwrap();
        let bound = cp_cycle_rho_bound(n, k);
        ok &= (r - closed).abs() <= EIGEN_TOL && r < bound;
        notes.push(format!("(k={k},m={m}): {r:.9} vs {closed:.9} < {bound:.4}"));
    }
    conclude("5 cp-cycle-closed-form", ok, notes.join(", "));
}

#[test]
fn criterion_06_lemma_gadget_suite() {
    let mut ok = true;
    let mut notes = Vec::new();
    // minimum-degree criterion, exhaustively on order 5
    let graphs5 = enumerate_graphs(5, &EnumOptions::default()).unwrap();
    ok &= graphs5.len() == 34;
    let agree = graphs5.iter().all(|g| {
        is_l_free_by_degree(g, 2).unwrap() == !contains_complete_multipartite(g, &[1, 2, 2])
    });
    ok &= agree;
    notes.push(format!("degree-criterion on {} classes", graphs5.len()));
    // connector-swap ordering
    for m in [4usize, 6] {
        let (aligned, swapped) = dissoc_core::verify::lemma_swap_configuration(m).unwrap();
        ok &= rho(&swapped) > rho(&aligned) + TIE_MARGIN;
    }
    notes.push("connector-swap strict".into());
    // aligned-cycle uniqueness over connector choices, l <= 3
    for l in [2usize, 3] {
        for m in [4usize, 6] {
            let base = rho(&aligned_cp_cycle(l, m).unwrap().graph);
            for mask in 1u32..(1 << l) {
                let pairs: Vec<(usize, usize)> = (0..l)
                    .map(|i| if mask >> i & 1 == 1 { (0, 2) } else { (0, 1) })
                    .collect();
                let spec = ConnectorSpec {
                    pairs,
                    aligned: false,
                };
                let other = cp_cycle(l, m, &spec).unwrap();
                ok &= rho(&other.graph) > base + TIE_MARGIN;
            }
        }
    }
    notes.push("aligned-cycle unique".into());
    // gadget inequalities
    for m in [4usize, 6] {
        let closed = cp_cycle_rho_closed_form(m as f64).unwrap();
        for kind in [GadgetKind::Fig7, GadgetKind::Fig8, GadgetKind::Fig9] {
            let g = connector_gadget(kind, m).unwrap();
            ok &= rho(&g.graph) > closed + TIE_MARGIN;
        }
    }
    notes.push("gadgets above closed form".into());
    conclude("6 lemma-gadget-suite", ok, notes.join(", "));
}

#[test]
fn criterion_07_bounds_suite() {
    let mut ok = true;
    let mut notes = Vec::new();
    // Hoffman-type on every connected regular graph up to 8 vertices
    let mut regular_checked = 0usize;
    for n in 2..=8usize {
        for g in enumerate_graphs(n, &EnumOptions::connected()).unwrap() {
            let Some(_) = g.regularity() else { continue };
            let b = dissoc_core::bounds::hoffman_type_upper(&g);
            if !b.applicable {
                continue;
            }
            regular_checked += 1;
            let tau = dissociation_number(&g).unwrap().value;
            ok &= (tau as f64) <= b.value + 1e-9;
        }
        let kn = Graph::complete(n).unwrap();
        let b = dissoc_core::bounds::hoffman_type_upper(&kn);
        ok &= (b.value - dissociation_number(&kn).unwrap().value as f64).abs() <= 1e-9;
    }
    notes.push(format!(
        "hoffman on {regular_checked} regular graphs, tight on complete"
    ));
    // probabilistic lower bound on every connected graph up to 8 vertices
    let mut conn_checked = 0usize;
    for n in 2..=8usize {
        for g in enumerate_graphs(n, &EnumOptions::connected()).unwrap() {
            if g.edge_count() == 0 {
                continue;
            }
            let b = dissoc_core::bounds::probabilistic_lower(&g).unwrap();
            conn_checked += 1;
            let tau = dissociation_number(&g).unwrap().value;
            ok &= (tau as f64) >= b.value - 1e-9;
        }
    }
    notes.push(format!("probabilistic on {conn_checked} connected graphs"));
    // complement-freeness bounds exhaustively for n <= 7, d in {4, 5}
    for n in 1..=7usize {
        for g in enumerate_graphs(n, &EnumOptions::default()).unwrap() {
            let tau = dissociation_number(&g).unwrap().value;
            for d in [4usize, 5] {
                let b = dissoc_core::bounds::complement_free_upper(&g, d).unwrap();
                if b.applicable {
                    ok &= tau <= (d - 1);
                }
            }
        }
    }
    notes.push("complement-free bounds exhaustive n<=7".into());
    // tree lower bound up to 10 vertices
    let mut trees_checked = 0usize;
    for n in 2..=10usize {
        let opts = EnumOptions {
            connected_only: true,
            max_edges: Some(n - 1),
            cap: 10,
        };
        for t in enumerate_graphs(n, &opts).unwrap() {
            if !t.is_tree() {
                continue;
            }
            trees_checked += 1;
            ok &= dissociation_number(&t).unwrap().value >= (2 * n).div_ceil(3);
        }
    }
    notes.push(format!("{trees_checked} trees"));
    conclude("7 bounds-suite", ok, notes.join("; "));
}

#[test]
fn criterion_08_kelmans_property() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let mut checked = 0usize;
    let mut worst = f64::INFINITY;
    while checked < 10_000 {
        let n = rng.random_range(4..=10usize);
        let g = random_graph(&mut rng, n, 0.4);
        if !g.is_connected() {
            continue;
        }
        let u = rng.random_range(0..n);
        let v = loop {
            let v = rng.random_range(0..n);
            if v != u {
                break v;
            }
        };
        let h = g.kelmans(u, v).unwrap();
        let diff = rho(&h) - rho(&g);
        worst = worst.min(diff);
        checked += 1;
    }
    let ok = worst >= -1e-9;
    conclude(
        "8 kelmans-property",
        ok,
        format!("{checked} triples, worst rho delta {worst:.3e}"),
    );
}

#[test]
fn criterion_09_section6_finite_consistency() {
    let caps = SearchCaps::default();
    let l5 = FamilySpec::OddCocktail(5);
    let mut ok = true;
    let mut notes = Vec::new();
    // connected-complement drop of exactly one edge
    for n in [8usize, 9] {
        let ex = ex_bruteforce(n, &l5, false, &caps).unwrap();
        let excc = ex_bruteforce(n, &l5, true, &caps).unwrap();
        ok &= excc.value_int() + 1 == ex.value_int();
        let family = minimizer_family(n, 2).unwrap();
        ok &= excc.witnesses.iter().all(|w| {
            let c = w.complement();
            c.is_connected() && family.iter().any(|f| are_isomorphic(f, &c).unwrap())
        });
        notes.push(format!("ex_cc({n})={}", excc.value_int()));
    }
    // randomized join freeness through the registered check
    let session = Session::new(VerifyOptions::default());
    let join_report = session.verify("L6.1", None);
    ok &= join_report.verdict == Verdict::Pass;
    notes.push("50 random joins".into());
    // bipartite-host bound never violated
    for a in 1..=6usize {
        for b in 1..=6usize {
            for s in 1..=3.min(a) {
                for t in s..=3.min(b) {
                    let z = zarankiewicz_bipartite(a, b, s, t).unwrap();
                    ok &= (z as f64) <= zarankiewicz_lemma_bound(a, b, s, t) + 1e-9;
                }
            }
        }
    }
    notes.push("zarankiewicz bound".into());
    // the predicted join edge count reproduces the Turán values
    let p6 = predicted_join_edges(&[3, 3], 1, 2, &caps).unwrap();
    let p8 = predicted_join_edges(&[4, 4], 1, 2, &caps).unwrap();
    ok &= p6 == ex_l5_closed_form(6).unwrap() && p8 == ex_l5_closed_form(8).unwrap();
    notes.push(format!("predicted joins {p6}/{p8}"));
    conclude("9 section6-consistency", ok, notes.join(", "));
}

#[test]
fn criterion_10_verify_all_cli() {
    let started = Instant::now();
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_dissoc"))
        .args(["verify", "all", "--max-n", "8", "--jobs", "4"])
        .output()
        .expect("binary runs");
    let elapsed = started.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = stdout.lines().collect();
    let ok = out.status.code() == Some(0) && lines.len() == 28 && elapsed.as_secs() <= 1800;
    conclude(
        "10 verify-all-cli",
        ok,
        format!(
            "exit={:?}, {} report lines, elapsed {elapsed:?}",
            out.status.code(),
            lines.len()
        ),
    );
}

/// The enumeration backbone the searches rely on stays pinned to the
/// classical class counts.
#[test]
fn enumeration_backbone_counts() {
    let mut ok = true;
    for (n, want) in [(7usize, 1044usize), (8, 12346)] {
        let all = enumerate_graphs(
            n,
            &EnumOptions {
                cap: DEFAULT_ENUM_CAP,
                ..Default::default()
            },
        )
        .unwrap();
        ok &= all.len() == want;
    }
    conclude("enumeration-backbone", ok, "orders 7 and 8".into());
}

/// Manifest values used by the registry stay loadable and versioned.
#[test]
fn manifest_is_versioned() {
    let m = Manifest::load_default();
    conclude(
        "manifest-versioned",
        m.manifest_version == "1",
        format!("version {}", m.manifest_version),
    );
}
