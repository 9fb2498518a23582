use std::collections::BTreeSet;

use lllcolor_core::bounds;
use lllcolor_core::dimacs::{parse_dimacs, write_dimacs};
use lllcolor_core::events;
use lllcolor_core::lll::{DependencyGraph, EventSpec, Mode};
use lllcolor_core::solver::{expand_eta_coloring, resample_solve, vizing_proper_edge_coloring, Resampler};
use lllcolor_core::verify::verify;
use lllcolor_core::{Coloring, Girth, Graph, Target, Variant};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn graph_and_coloring(max_n: usize, target: Target, palette: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(move |g| {
        let count = target.count(&g);
        (Just(g), proptest::collection::vec(0..palette, count))
    })
}

// every simple cycle as a canonical vertex sequence, by brute force over permutations
fn brute_cycles(g: &Graph, max_len: usize) -> BTreeSet<Vec<usize>> {
    fn extend(g: &Graph, path: &mut Vec<usize>, max_len: usize, out: &mut BTreeSet<Vec<usize>>) {
        let last = *path.last().unwrap();
        if path.len() >= 3 && g.has_edge(last, path[0]) {
            let mut best = path.clone();
            let len = path.len();
            for shift in 0..len {
                for rev in [false, true] {
                    let mut c: Vec<usize> = (0..len).map(|i| path[(shift + i) % len]).collect();
                    if rev {
                        c.reverse();
                    }
                    best = best.min(c);
                }
            }
            out.insert(best);
        }
        if path.len() == max_len {
            return;
        }
        for w in 0..g.vertex_count() {
            if !path.contains(&w) && g.has_edge(last, w) {
                path.push(w);
                extend(g, path, max_len, out);
                path.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    for s in 0..g.vertex_count() {
        extend(g, &mut vec![s], max_len, &mut out);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cycle_enumeration_matches_brute_force(g in graph_strategy(6)) {
        let fast = g.enumerate_cycles(6).unwrap();
        let brute = brute_cycles(&g, 6);
        prop_assert_eq!(fast.len(), brute.len());
        for c in &fast {
            for i in 0..c.len() {
                let (u, v) = g.edge(c.edges[i]);
                let (a, b) = (c.vertices[i], c.vertices[(i + 1) % c.len()]);
                prop_assert!((u, v) == (a.min(b), a.max(b)));
            }
        }
        let girth = brute.iter().map(Vec::len).min();
        prop_assert_eq!(g.girth().finite(), girth);
        if girth.is_none() {
            prop_assert_eq!(g.girth(), Girth::Acyclic);
        }
    }

    #[test]
    fn path_enumeration_counts(g in graph_strategy(6), k in 1usize..4) {
        let paths = g.enumerate_paths(k).unwrap();
        let set: BTreeSet<Vec<usize>> = paths.iter().cloned().collect();
        prop_assert_eq!(set.len(), paths.len());
        for p in &paths {
            prop_assert_eq!(p.len(), k + 1);
            prop_assert!(p[0] < p[k]);
            prop_assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
        }
    }

    #[test]
    fn dimacs_round_trip(g in graph_strategy(8)) {
        let text = write_dimacs(&g);
        prop_assert_eq!(parse_dimacs(&text).unwrap(), g);
    }

    #[test]
    fn improved_normaliser_never_exceeds_classic(
        g in graph_strategy(8),
        mu in proptest::collection::vec(0.0f64..3.0, 8),
    ) {
        let n = g.vertex_count();
        let events = (0..n).map(|i| EventSpec { p: 0.01, mu: mu[i] }).collect();
        let dg = DependencyGraph::new(events, g.edges().iter().copied()).unwrap();
        for x in 0..n {
            let exact = dg.phi_star_exact(x, &mu[..n]).unwrap();
            prop_assert!(exact >= 1.0);
            prop_assert!(exact <= dg.phi_classic(x, &mu[..n]) * (1.0 + 1e-12));
        }
        if dg.check_condition(Mode::Classic).unwrap().pass {
            prop_assert!(dg.check_condition(Mode::ImprovedExact).unwrap().pass);
        }
    }

    #[test]
    fn vizing_is_proper_within_delta_plus_one(g in graph_strategy(9)) {
        let c = vizing_proper_edge_coloring(&g);
        prop_assert!(verify(&g, &c, Variant::ProperEdge).unwrap().is_valid());
        prop_assert!(c.palette <= g.max_degree() + 1 || g.edge_count() == 0);
    }

    #[test]
    fn edge_families_agree_with_verify((g, col) in graph_and_coloring(6, Target::Edges, 3)) {
        let c = Coloring::new(Target::Edges, 3, col.clone()).unwrap();
        let acyclic = events::build_acyclic_edge(&g, 3, None).unwrap();
        prop_assert_eq!(!acyclic.any_violated(&col), verify(&g, &c, Variant::AcyclicEdge).unwrap().is_valid());
        let stage = events::build_eta_stage(&g, 3, 2, None).unwrap();
        prop_assert_eq!(!stage.any_violated(&col), verify(&g, &c, Variant::EtaStage { eta: 2 }).unwrap().is_valid());
    }

    #[test]
    fn vertex_families_agree_with_verify((g, col) in graph_and_coloring(7, Target::Vertices, 3)) {
        let c = Coloring::new(Target::Vertices, 3, col.clone()).unwrap();
        let star = events::build_star(&g, 3).unwrap();
        prop_assert_eq!(!star.any_violated(&col), verify(&g, &c, Variant::Star).unwrap().is_valid());
        let frugal = events::build_frugal(&g, 3, 2).unwrap();
        prop_assert_eq!(!frugal.any_violated(&col), verify(&g, &c, Variant::Frugal { beta: 2 }).unwrap().is_valid());
        // the acyclic vertex family is stronger than acyclicity
        let acyclic = events::build_acyclic_vertex(&g, 3).unwrap();
        if !acyclic.any_violated(&col) {
            prop_assert!(verify(&g, &c, Variant::AcyclicVertex).unwrap().is_valid());
        }
    }

    #[test]
    fn family_invariants(g in graph_strategy(7)) {
        for f in [
            events::build_acyclic_edge(&g, 5, None).unwrap(),
            events::build_eta_stage(&g, 5, 2, None).unwrap(),
            events::build_acyclic_vertex(&g, 5).unwrap(),
            events::build_star(&g, 5).unwrap(),
            events::build_frugal(&g, 5, 2).unwrap(),
        ] {
            prop_assert!(f.count_violations().is_empty());
            for e in &f.events {
                prop_assert!(e.p > 0.0 && e.p <= 1.0);
                prop_assert!(!e.scope.is_empty());
                prop_assert!(e.scope.windows(2).all(|w| w[0] < w[1]));
            }
            let mut dg = f.dependency_graph(0.3, f.certificate_delta()).unwrap();
            for i in 0..f.len() {
                for j in i + 1..f.len() {
                    let meet = f.events[i].scope.iter().any(|v| f.events[j].scope.contains(v));
                    prop_assert_eq!(dg.adjacent(i, j), meet);
                }
                let cover = dg.clique_cover(i).unwrap().to_vec();
                prop_assert!(dg.set_clique_cover(i, cover).is_ok());
            }
        }
    }

    #[test]
    fn resampling_touches_only_the_scope(g in graph_strategy(8), seed in any::<u64>()) {
        for variant in [Variant::AcyclicEdge, Variant::Star, Variant::AcyclicVertex, Variant::Frugal { beta: 2 }] {
            let mut r = Resampler::new(&g, variant, 4, seed).unwrap();
            for _ in 0..200 {
                let before = r.assignment().to_vec();
                let Some(event) = r.step() else { break };
                for (i, (a, b)) in before.iter().zip(r.assignment()).enumerate() {
                    prop_assert!(a == b || event.scope.contains(&i));
                }
            }
        }
    }

    #[test]
    fn solving_is_deterministic_and_sound(g in graph_strategy(8), seed in any::<u64>()) {
        for (variant, n) in [(Variant::AcyclicEdge, 20), (Variant::Star, 28), (Variant::Frugal { beta: 2 }, 19), (Variant::AcyclicVertex, 39)] {
            let a = resample_solve(&g, variant, n, seed, 100_000).unwrap();
            let b = resample_solve(&g, variant, n, seed, 100_000).unwrap();
            prop_assert_eq!(&a.assignment, &b.assignment);
            prop_assert_eq!(a.resamples, b.resamples);
            if a.valid {
                let c = a.coloring(variant.target()).unwrap();
                prop_assert!(verify(&g, &c, variant).unwrap().is_valid());
            }
        }
    }

    #[test]
    fn expansion_of_stage_one_colorings(g in graph_strategy(8), seed in any::<u64>()) {
        let r = resample_solve(&g, Variant::EtaStage { eta: 2 }, 7, seed, 100_000).unwrap();
        prop_assume!(r.valid);
        let out = expand_eta_coloring(&g, &r.coloring(Target::Edges).unwrap(), 2).unwrap();
        prop_assert!(verify(&g, &out, Variant::AcyclicEdge).unwrap().is_valid());
        prop_assert!(out.palette <= 14);
    }

    #[test]
    fn bichromatic_cycle_probability_bound(w in 0.001f64..0.5, k in 2i32..40) {
        let lhs = (1.0 - w).powi(2 * k) + 2.0 * w.powi(k) * (1.0 - w).powi(k);
        prop_assert!(lhs <= (1.0 + w).powi(-2 * k));
    }

    #[test]
    fn colors_grow_with_degree(delta in 3u64..40) {
        let next = delta + 1;
        let n = |d| bounds::bound_acyclic_edge(d).unwrap().colors.unwrap();
        prop_assert!(n(delta) <= n(next));
        let s = |d| bounds::bound_star(d).unwrap().colors.unwrap();
        prop_assert!(s(delta) <= s(next));
        let v = |d| bounds::bound_acyclic_vertex(d).unwrap().colors.unwrap();
        prop_assert!(v(delta) <= v(next));
        let f = |d| bounds::bound_frugal(d, 2).unwrap().colors.unwrap();
        prop_assert!(f(delta) <= f(next));
    }

    #[test]
    fn girth_constant_falls_with_girth(g in 5u64..40, eta in 2u32..4) {
        let c = |g| bounds::girth_acyclic_edge_limit(g, eta).unwrap();
        prop_assert!(c(g + 1) <= c(g) + 1e-9);
    }
}
