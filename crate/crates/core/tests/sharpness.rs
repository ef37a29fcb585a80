use kordered::constructions::{build_sharpness_graph, sharpness_degree, SharpnessGraph};
use kordered::hamilton::find_s_cycle;
use kordered::{Rational, SolverConfig, VertexSet};
use kordered_oracles as oracle;

#[test]
fn ten_four_example() {
    let s = build_sharpness_graph(10, 4).unwrap();
    assert_eq!(s.graph.min_degree(), 5);
    // (u2, w3, u3, w4)
    let expect = [
        SharpnessGraph::u_index(2),
        SharpnessGraph::w_index(10, 3),
        SharpnessGraph::u_index(3),
        SharpnessGraph::w_index(10, 4),
    ];
    assert_eq!(s.witness.vertices(), &expect);
    assert!(find_s_cycle(&s.graph, &s.witness, &SolverConfig::default())
        .unwrap()
        .is_none());
    assert!(!oracle::s_cycle_exists(&s.graph, s.witness.vertices()));
    let cross = oracle::edges_between(&s.graph, &s.u.to_vec(), &s.w.to_vec());
    assert_eq!(
        s.graph.density(&s.u, &s.w).unwrap(),
        Rational::new(cross as i64, 25)
    );
    assert_eq!(cross, 13);
}

#[test]
fn nine_three_example() {
    let s = build_sharpness_graph(9, 3).unwrap();
    assert_eq!(s.graph.min_degree(), 4);
    let expect = [
        SharpnessGraph::u_index(1),
        SharpnessGraph::w_index(9, 2),
        SharpnessGraph::u_index(2),
    ];
    assert_eq!(s.witness.vertices(), &expect);
}

#[test]
fn witness_fails_against_enumeration() {
    for n in 8..=10 {
        for k in 2..=n / 2 {
            let s = build_sharpness_graph(n, k).unwrap();
            assert_eq!(s.graph.min_degree(), sharpness_degree(n, k));
            assert!(
                !oracle::s_cycle_exists(&s.graph, s.witness.vertices()),
                "n={n} k={k}"
            );
        }
    }
}

/// Every side change along any Hamiltonian cycle passes through the hub set
/// `{w_1..w_h} ∪ {u_1..u_{h−1}}`, and there are fewer hubs than the witness
/// demands.
#[test]
fn transitions_use_hub_vertices() {
    for n in 8..=12 {
        for k in 2..=n / 2 {
            let s = build_sharpness_graph(n, k).unwrap();
            let h = k / 2;
            let mut hubs = VertexSet::empty(n);
            for j in 1..=h {
                hubs.insert(SharpnessGraph::w_index(n, j));
            }
            for i in 1..h {
                hubs.insert(SharpnessGraph::u_index(i));
            }
            // edge level: each cross edge meets a hub, which covers every cycle
            for (x, y) in s.graph.edges() {
                if s.u.contains(x) != s.u.contains(y) {
                    assert!(
                        hubs.contains(x) || hubs.contains(y),
                        "n={n} k={k} ({x},{y})"
                    );
                }
            }
            if n <= 10 {
                for c in oracle::all_hamiltonian_cycles(&s.graph) {
                    let changes = (0..n)
                        .filter(|&i| s.u.contains(c[i]) != s.u.contains(c[(i + 1) % n]))
                        .count();
                    assert!(changes <= 2 * hubs.len());
                }
            }
        }
    }
}
