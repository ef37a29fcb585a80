use kordered::hamilton::{
    find_hamiltonian_path, find_s_cycle, is_k_ordered, posa_condition, verify_s_cycle, PathStage,
};
use kordered::matching::{
    bipartite_matching_and_cover, degree_ratio_check, erdos_posa_check, maximum_matching,
};
use kordered::regularity::{is_epsilon_regular, RegularityConfig, RegularityMode};
use kordered::{Error, Graph, OrderedSequence, Rational, SolverConfig, VertexSet};
use kordered_oracles as oracle;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn s_cycle_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let cfg = SolverConfig::default();
    let mut found = 0;
    for _ in 0..300 {
        let n = rng.gen_range(3..=10);
        let p = rng.gen_range(0.3..0.9);
        let g = oracle::random_graph(n, p, &mut rng);
        let k = rng.gen_range(2..=n.min(5));
        let s = sample(&mut rng, n, k).into_vec();
        let seq = OrderedSequence::new(n, s.clone()).unwrap();
        let got = find_s_cycle(&g, &seq, &cfg).unwrap();
        assert_eq!(
            got.is_some(),
            oracle::s_cycle_exists(&g, &s),
            "n={n} s={s:?} g={g:?}"
        );
        if let Some(c) = got {
            found += 1;
            assert!(verify_s_cycle(&g, &seq, &c).is_ok());
            assert!(oracle::respects_order(&c.order, &s));
        }
    }
    // both outcomes should be exercised
    assert!(found > 30 && found < 290, "found = {found}");
}

#[test]
fn k_ordered_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let cfg = SolverConfig::default();
    for _ in 0..40 {
        let n = rng.gen_range(4..=7);
        let g = oracle::random_graph(n, rng.gen_range(0.5..0.95), &mut rng);
        for k in 2..=n.min(5) {
            match is_k_ordered(&g, k, &cfg) {
                Err(Error::NotHamiltonian) => {
                    assert!(!oracle::is_hamiltonian(&g));
                    break;
                }
                Err(e) => panic!("{e}"),
                Ok(res) => {
                    assert_eq!(res.ordered, oracle::k_ordered(&g, k), "n={n} k={k} g={g:?}");
                    if let Some(w) = res.witness {
                        assert!(!oracle::s_cycle_exists(&g, w.vertices()));
                        assert_eq!(w.k(), k);
                    }
                }
            }
        }
    }
}

#[test]
fn c6_witness_and_spec_sequence() {
    let cfg = SolverConfig::default();
    let g = Graph::cycle(6);
    let res = is_k_ordered(&g, 4, &cfg).unwrap();
    assert!(!res.ordered);
    assert_eq!(res.witness.unwrap().vertices(), &[0, 1, 3, 2]);
    assert!(!oracle::s_cycle_exists(&g, &[0, 2, 1, 3]));
    let seq = OrderedSequence::new(6, vec![0, 2, 1, 3]).unwrap();
    assert!(find_s_cycle(&g, &seq, &cfg).unwrap().is_none());
}

#[test]
fn maximum_matching_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let n = rng.gen_range(1..=12);
        let g = oracle::random_graph(n, rng.gen_range(0.05..0.7), &mut rng);
        let m = maximum_matching(&g);
        assert!(m.is_valid_for(&g));
        assert_eq!(m.len(), oracle::matching_number(&g), "g={g:?}");
    }
    assert_eq!(maximum_matching(&Graph::petersen()).len(), 5);
}

#[test]
fn konig_equality_on_random_bipartite_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..300 {
        let (na, nb) = (rng.gen_range(1..=9), rng.gen_range(1..=9));
        let n = na + nb;
        let full = oracle::random_graph(n, rng.gen_range(0.05..0.8), &mut rng);
        let a = VertexSet::from_indices(n, 0..na);
        let b = a.complement();
        let g = full.bipartite_restriction(&a, &b);
        let bm = bipartite_matching_and_cover(&g, &a, &b);
        assert!(bm.matching.is_valid_for(&g));
        assert_eq!(bm.matching.len(), bm.cover.len());
        assert_eq!(bm.matching.len(), oracle::matching_number(&g));
        for (u, v) in g.edges() {
            assert!(bm.cover.contains(u) || bm.cover.contains(v));
        }
    }
}

#[test]
fn matching_lower_bounds_hold() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..500 {
        let n = rng.gen_range(1..=60);
        let g = oracle::random_graph(n, rng.gen_range(0.0..1.0), &mut rng);
        let ep = erdos_posa_check(&g);
        let dr = degree_ratio_check(&g);
        assert!(ep.holds && dr.holds, "n={n}");
        assert!(Rational::from_integer(ep.nu as i64) >= ep.bound);
    }
}

#[test]
fn regularity_matches_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let cfg = RegularityConfig::default();
    let eps_choices = [(1, 10), (1, 5), (3, 10), (1, 2)];
    let mut irregular = 0;
    for _ in 0..200 {
        let m = rng.gen_range(1..=8);
        let n = 2 * m;
        let a = VertexSet::from_indices(n, 0..m);
        let b = a.complement();
        let g = oracle::random_graph(n, rng.gen_range(0.1..0.9), &mut rng);
        let (p, q) = eps_choices[rng.gen_range(0..eps_choices.len())];
        let v = is_epsilon_regular(&g, &a, &b, Rational::new(p, q), RegularityMode::Exact, &cfg)
            .unwrap();
        let expect = oracle::epsilon_regular(&g, &a.to_vec(), &b.to_vec(), p, q);
        assert_eq!(v.regular, expect, "m={m} eps={p}/{q}");
        if let Some(w) = v.witness {
            irregular += 1;
            assert!(w.deviation >= Rational::new(p, q));
            assert!((w.x.len() as i64) * q > p * m as i64 && (w.y.len() as i64) * q > p * m as i64);
            let e = oracle::edges_between(&g, &w.x, &w.y) as i64;
            let dev = Rational::new(e, (w.x.len() * w.y.len()) as i64) - g.density(&a, &b).unwrap();
            let abs = if dev < Rational::from_integer(0) {
                -dev
            } else {
                dev
            };
            assert_eq!(abs, w.deviation);
        }
    }
    assert!(irregular > 0);
}

#[test]
fn posa_graphs_are_hamiltonian_connected() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cfg = SolverConfig::default();
    let mut checked = 0;
    // at n = 3 the degree condition is vacuous and P3 passes it
    while checked < 60 {
        let n = rng.gen_range(4..=12);
        let g = oracle::random_graph(n, rng.gen_range(0.5..0.95), &mut rng);
        if !posa_condition(&g).unwrap() {
            continue;
        }
        checked += 1;
        for x in 0..n {
            for y in 0..n {
                if x == y {
                    continue;
                }
                assert!(
                    oracle::hamiltonian_path_exists(&g, x, y),
                    "n={n} x={x} y={y} {g:?}"
                );
                let r = find_hamiltonian_path(&g, x, y, &cfg).unwrap();
                let p = r.path.expect("path exists");
                assert!(p.is_hamiltonian_in(&g));
                assert_eq!((p.start(), p.end()), (x, y));
            }
        }
    }
}

#[test]
fn path_search_none_is_authoritative_when_small() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let cfg = SolverConfig::default();
    for _ in 0..100 {
        let n = rng.gen_range(2..=9);
        let g = oracle::random_graph(n, rng.gen_range(0.2..0.7), &mut rng);
        let (x, y) = (0, n - 1);
        let r = find_hamiltonian_path(&g, x, y, &cfg).unwrap();
        assert!(r.authoritative);
        assert_eq!(r.path.is_some(), oracle::hamiltonian_path_exists(&g, x, y));
        if r.path.is_none() {
            assert_eq!(r.stage, PathStage::Exact);
        }
    }
}
