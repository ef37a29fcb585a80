use std::time::{Duration, Instant};

use kordered::constructions::{
    build_dense_bipartite_instance, build_sparse_cut_instance, degree_bound,
};
use kordered::extremal::{
    classify_extremal, connecting_paths, solve_extremal, solve_extremal_dense,
    solve_extremal_sparse, ExtremalCase, ExtremalParams, Host,
};
use kordered::hamilton::verify_s_cycle;
use kordered::{Graph, GraphBuilder, OrderedSequence, SolverConfig, VertexSet};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_sequence(n: usize, k: usize, rng: &mut ChaCha8Rng) -> OrderedSequence {
    OrderedSequence::new(n, sample(rng, n, k).into_vec()).unwrap()
}

fn min_cut(n: usize, k: usize) -> usize {
    let bound = degree_bound(n, k);
    (bound + 1).saturating_sub(n / 2).max(1)
}

#[test]
fn sparse_batch_is_certified() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..50u64 {
        let n = rng.gen_range(40..=80);
        let k = rng.gen_range(2..=8);
        let inst = build_sparse_cut_instance(n, k, min_cut(n, k), i).unwrap();
        let seq = random_sequence(n, k, &mut rng);
        let start = Instant::now();
        let sol = solve_extremal_sparse(
            &inst.graph,
            &inst.a,
            &inst.b,
            &seq,
            &ExtremalParams::default(),
            &SolverConfig::default(),
        )
        .unwrap_or_else(|e| panic!("instance {i} (n={n}, k={k}): {e}"));
        assert!(start.elapsed() < Duration::from_secs(2));
        assert!(verify_s_cycle(&inst.graph, &seq, &sol.cycle).is_ok());
        assert!(sol.trace.bridge_matching >= sol.trace.transitions);
    }
}

#[test]
fn dense_batch_is_certified() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for i in 0..50u64 {
        let r = (i % 3) as usize;
        let mut n = rng.gen_range(40..=80);
        if (n - r) % 2 == 1 {
            n += 1;
        }
        let k = rng.gen_range(2..=8);
        let inst = build_dense_bipartite_instance(n, k, r, i).unwrap();
        let seq = random_sequence(n, k, &mut rng);
        let start = Instant::now();
        let sol = solve_extremal_dense(
            &inst.graph,
            &inst.a,
            &inst.b,
            &seq,
            &ExtremalParams::default(),
            &SolverConfig::default(),
        )
        .unwrap_or_else(|e| panic!("instance {i} (n={n}, k={k}, r={r}): {e}"));
        assert!(start.elapsed() < Duration::from_secs(2));
        assert!(verify_s_cycle(&inst.graph, &seq, &sol.cycle).is_ok());
    }
}

#[test]
fn bridge_matching_meets_the_cover_bound() {
    // with S-internal edges removed, a vertex cover needs at least
    // 2⌊k/2⌋ + 2⌈n/2⌉ − n vertices unless it swallows a whole side
    for (n, k) in [(60, 4), (60, 5), (61, 5), (70, 8)] {
        let inst = build_sparse_cut_instance(n, k, min_cut(n, k), 5).unwrap();
        let seq = OrderedSequence::new(
            n,
            (0..k).map(|i| if i % 2 == 0 { i } else { n - i }).collect(),
        )
        .unwrap();
        let sol = solve_extremal_sparse(
            &inst.graph,
            &inst.a,
            &inst.b,
            &seq,
            &ExtremalParams::default(),
            &SolverConfig::default(),
        )
        .unwrap();
        let floor = 2 * (k / 2) + 2 * n.div_ceil(2) - n;
        assert!(sol.trace.bridge_matching >= floor.min(k));
        assert_eq!(sol.trace.bridge_matching, sol.trace.bridge_cover);
        if k % 2 == 0 {
            assert!(sol.trace.bridge_matching >= k);
        }
    }
}

#[test]
fn sequence_on_one_side_runs_absorption() {
    let inst = build_sparse_cut_instance(60, 4, min_cut(60, 4), 3).unwrap();
    for s in [vec![0, 9, 4, 20], vec![30, 59, 44, 31]] {
        let seq = OrderedSequence::new(60, s).unwrap();
        let sol = solve_extremal_sparse(
            &inst.graph,
            &inst.a,
            &inst.b,
            &seq,
            &ExtremalParams::default(),
            &SolverConfig::default(),
        )
        .unwrap();
        assert!(sol.trace.absorbed_side);
        assert!(verify_s_cycle(&inst.graph, &seq, &sol.cycle).is_ok());
    }
}

#[test]
fn dense_surplus_edge_is_interior() {
    let inst = build_dense_bipartite_instance(61, 3, 1, 8).unwrap();
    let seq = OrderedSequence::new(61, vec![40, 2, 50]).unwrap();
    let sol = solve_extremal_dense(
        &inst.graph,
        &inst.a,
        &inst.b,
        &seq,
        &ExtremalParams::default(),
        &SolverConfig::default(),
    )
    .unwrap();
    assert_eq!(sol.trace.discrepancy_matching, 1);
    // exactly one edge of the cycle runs inside A
    let c = &sol.cycle.order;
    let inner = (0..c.len())
        .filter(|&i| inst.a.contains(c[i]) && inst.a.contains(c[(i + 1) % c.len()]))
        .count();
    assert_eq!(inner, 1);
}

#[test]
fn dispatcher_picks_the_matching_solver() {
    // two cliques joined by a single cross matching
    let n = 40;
    let a = VertexSet::from_indices(n, 0..20);
    let b = a.complement();
    let mut gb = GraphBuilder::new(n);
    gb.add_clique(&a);
    gb.add_clique(&b);
    for i in 0..20 {
        gb.add_edge(i, 20 + i);
    }
    let g = gb.build();
    let params = ExtremalParams::new(
        kordered::Rational::new(1, 1000),
        kordered::Rational::new(1, 500),
        kordered::Rational::new(1, 100),
        kordered::Rational::new(1, 10),
        kordered::Rational::new(1, 5),
    )
    .unwrap();
    assert!(matches!(
        classify_extremal(&g, &a, &b, &params).unwrap(),
        ExtremalCase::Sparse { .. }
    ));
    let seq = OrderedSequence::new(n, vec![0, 25, 3]).unwrap();
    let sol = solve_extremal(&g, &a, &b, &seq, &params, &SolverConfig::default()).unwrap();
    assert_eq!(sol.trace.case, "sparse");
    assert!(verify_s_cycle(&g, &seq, &sol.cycle).is_ok());

    // the same sets overlapping completely select the dense solver on K_{20,20}
    let kb = Graph::complete_bipartite(20, 20);
    let seq = OrderedSequence::new(n, vec![0, 21]).unwrap();
    let sol = solve_extremal(&kb, &a, &a, &seq, &params, &SolverConfig::default()).unwrap();
    assert_eq!(sol.trace.case, "dense");
    assert!(verify_s_cycle(&kb, &seq, &sol.cycle).is_ok());
}

#[test]
fn impossible_band_is_reported() {
    let g = Graph::empty(40);
    let a = VertexSet::from_indices(40, 0..20);
    let b = VertexSet::from_indices(40, 10..30);
    let seq = OrderedSequence::new(40, vec![0, 1]).unwrap();
    let err = solve_extremal(
        &g,
        &a,
        &b,
        &seq,
        &ExtremalParams::default(),
        &SolverConfig::default(),
    )
    .unwrap_err();
    assert!(err.detail.contains("band"));
}

#[test]
fn failures_are_diagnosed_not_returned() {
    // a cut with no edges at all: bridges cannot exist
    let n = 40;
    let a = VertexSet::from_indices(n, 0..20);
    let b = a.complement();
    let mut gb = GraphBuilder::new(n);
    gb.add_clique(&a);
    gb.add_clique(&b);
    let g = gb.build();
    let seq = OrderedSequence::new(n, vec![0, 30]).unwrap();
    let err = solve_extremal_sparse(
        &g,
        &a,
        &b,
        &seq,
        &ExtremalParams::default(),
        &SolverConfig::default(),
    )
    .unwrap_err();
    assert_eq!(err.stage, kordered::extremal::Stage::Bridges);
    assert!(!err.trace.certified);
}

#[test]
fn routed_paths_are_disjoint_on_generated_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for seed in 0..20 {
        let inst = build_sparse_cut_instance(60, 6, min_cut(60, 6), seed).unwrap();
        let verts = sample(&mut rng, 30, 8).into_vec();
        let pairs: Vec<(usize, usize)> = verts.chunks(2).map(|c| (c[0], c[1])).collect();
        let ps = connecting_paths(
            &inst.graph,
            Host::Within(&inst.a),
            &pairs,
            4,
            4,
            &VertexSet::empty(60),
        )
        .unwrap();
        assert!(ps.internally_disjoint());
        for p in &ps.paths {
            assert!(p.len() - 1 <= 4);
            assert!(p.windows(2).all(|e| inst.graph.has_edge(e[0], e[1])));
            assert!(p.iter().all(|&v| inst.a.contains(v)));
        }
    }
}
