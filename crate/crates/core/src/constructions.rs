//! Graph generators: the sharpness construction, extremal-case instances
//! and random graphs with a minimum-degree floor.
//!
//! Every generator is a pure function of its parameters and seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::error::{precondition, Error, Result};
use crate::graph::{Graph, GraphBuilder, Rational};
use crate::hamilton::OrderedSequence;

/// `⌈n/2⌉ + ⌊k/2⌋ − 1`, the minimum degree that forces k-orderedness for
/// large `n`.
pub fn degree_bound(n: usize, k: usize) -> usize {
    n.div_ceil(2) + k / 2 - 1
}

/// `⌈n/2⌉ + ⌊k/2⌋ − 2`, one below [`degree_bound`].
pub fn sharpness_degree(n: usize, k: usize) -> usize {
    n.div_ceil(2) + k / 2 - 2
}

/// Two cliques `U` (`⌊n/2⌋` vertices) and `W` (`⌈n/2⌉` vertices) joined by
/// `U × {w₁..w_h} ∪ W × {u₁..u_{h−1}}` with `h = ⌊k/2⌋`, together with a
/// k-sequence that no Hamiltonian cycle meets in order.
#[derive(Debug, Clone)]
pub struct SharpnessGraph {
    pub graph: Graph,
    pub u: VertexSet,
    pub w: VertexSet,
    pub witness: OrderedSequence,
}

impl SharpnessGraph {
    /// Index of `u_i` (1-based label).
    pub fn u_index(i: usize) -> usize {
        i - 1
    }

    /// Index of `w_j` (1-based label) for a graph on `n` vertices.
    pub fn w_index(n: usize, j: usize) -> usize {
        n / 2 + j - 1
    }
}

pub fn build_sharpness_graph(n: usize, k: usize) -> Result<SharpnessGraph> {
    if n < 4 {
        return Err(precondition("sharpness graph needs n >= 4"));
    }
    if k < 2 || k > n / 2 {
        return Err(precondition(format!("k={k} outside 2..={}", n / 2)));
    }
    let half = n / 2;
    let h = k / 2;
    let u = VertexSet::from_indices(n, 0..half);
    let w = VertexSet::from_indices(n, half..n);
    let mut b = GraphBuilder::new(n);
    b.add_clique(&u);
    b.add_clique(&w);
    let u_at = SharpnessGraph::u_index;
    let w_at = |j| SharpnessGraph::w_index(n, j);
    for j in 1..=h {
        for x in u.iter() {
            b.add_edge(x, w_at(j));
        }
    }
    for i in 1..h {
        for y in w.iter() {
            b.add_edge(y, u_at(i));
        }
    }
    let mut witness = Vec::with_capacity(k);
    for t in 0..h {
        witness.push(u_at(h + t));
        witness.push(w_at(h + 1 + t));
    }
    if k % 2 == 1 {
        witness.push(u_at(2 * h));
    }
    Ok(SharpnessGraph {
        graph: b.build(),
        u,
        w,
        witness: OrderedSequence::new(n, witness)?,
    })
}

/// A generated instance split into two sides, with its achieved statistics.
#[derive(Debug, Clone)]
pub struct SplitInstance {
    pub graph: Graph,
    pub a: VertexSet,
    pub b: VertexSet,
    pub min_degree: usize,
    pub density: Rational,
}

impl SplitInstance {
    fn new(graph: Graph, a: VertexSet, b: VertexSet) -> Result<Self> {
        let min_degree = graph.min_degree();
        let density = graph.density(&a, &b)?;
        Ok(SplitInstance {
            graph,
            a,
            b,
            min_degree,
            density,
        })
    }
}

/// Two cliques `A = 0..⌊n/2⌋` and `B` with a sparse cut: every vertex gets at
/// least `cut_degree` cross edges, distributed round-robin over a seeded
/// ordering of `B` so cross degrees stay balanced.
pub fn build_sparse_cut_instance(
    n: usize,
    k: usize,
    cut_degree: usize,
    seed: u64,
) -> Result<SplitInstance> {
    if n < 4 || k < 2 {
        return Err(Error::Infeasible(
            "sparse-cut instance needs n >= 4 and k >= 2".into(),
        ));
    }
    let (na, nb) = (n / 2, n - n / 2);
    let bound = degree_bound(n, k);
    let required = bound
        .saturating_sub(na - 1)
        .max(bound.saturating_sub(nb - 1));
    if cut_degree < required {
        return Err(Error::Infeasible(format!(
            "cut_degree {cut_degree} below the {required} cross edges needed for minimum degree {bound}"
        )));
    }
    if cut_degree > na {
        return Err(Error::Infeasible(format!(
            "cut_degree {cut_degree} exceeds side size {na}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = VertexSet::from_indices(n, 0..na);
    let b_set = VertexSet::from_indices(n, na..n);
    let mut b_order: Vec<usize> = (na..n).collect();
    b_order.shuffle(&mut rng);

    let mut g = GraphBuilder::new(n);
    g.add_clique(&a);
    g.add_clique(&b_set);
    let mut cross = vec![0usize; n];
    for j in 0..cut_degree {
        for i in 0..na {
            let y = b_order[(i + j) % nb];
            if !g.has_edge(i, y) {
                g.add_edge(i, y);
                cross[i] += 1;
                cross[y] += 1;
            }
        }
    }
    // top up vertices the circulant left short, pairing with the least loaded
    for v in 0..n {
        while cross[v] < cut_degree {
            let other: Vec<usize> = if v < na {
                b_order.clone()
            } else {
                (0..na).collect()
            };
            let partner = other
                .into_iter()
                .filter(|&w| !g.has_edge(v, w))
                .min_by_key(|&w| cross[w])
                .ok_or_else(|| Error::Infeasible("no partner left for cross edge".into()))?;
            g.add_edge(v, partner);
            cross[v] += 1;
            cross[partner] += 1;
        }
    }
    SplitInstance::new(g.build(), a, b_set)
}

/// Near-complete bipartite graph between `A` (`(n+r)/2` vertices) and `B`
/// (`(n−r)/2`), with about 5% of cross edges removed under a per-vertex cap,
/// an `r`-matching inside `A`, and sparse same-side edges restoring every
/// degree to at least `⌈n/2⌉ + ⌊k/2⌋ − 1`.
pub fn build_dense_bipartite_instance(
    n: usize,
    k: usize,
    r: usize,
    seed: u64,
) -> Result<SplitInstance> {
    if k < 2 || n < 8 {
        return Err(Error::Infeasible(
            "dense instance needs n >= 8 and k >= 2".into(),
        ));
    }
    if r > n / 10 || !(n - r).is_multiple_of(2) {
        return Err(Error::Infeasible(format!(
            "imbalance r={r} must have the parity of n={n} and be at most n/10"
        )));
    }
    let na = (n + r) / 2;
    let nb = n - na;
    let bound = degree_bound(n, k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = VertexSet::from_indices(n, 0..na);
    let b_set = VertexSet::from_indices(n, na..n);

    let mut g = GraphBuilder::new(n);
    for x in 0..na {
        for y in na..n {
            g.add_edge(x, y);
        }
    }
    let budget = na * nb / 20;
    let cap_a = (nb / 10).max(1);
    let cap_b = (na / 10).max(1);
    let mut deleted = vec![0usize; n];
    let mut removed = 0;
    let mut tries = 0;
    while removed < budget && tries < 50 * budget + 100 {
        tries += 1;
        let x = rng.gen_range(0..na);
        let y = rng.gen_range(na..n);
        if g.has_edge(x, y) && deleted[x] < cap_a && deleted[y] < cap_b {
            g.remove_edge(x, y);
            deleted[x] += 1;
            deleted[y] += 1;
            removed += 1;
        }
    }

    let mut a_order: Vec<usize> = (0..na).collect();
    a_order.shuffle(&mut rng);
    for pair in a_order.chunks_exact(2).take(r) {
        g.add_edge(pair[0], pair[1]);
    }
    if r > 0 && a_order.len() < 2 * r {
        return Err(Error::Infeasible(
            "side A too small for its matching".into(),
        ));
    }

    let b_order: Vec<usize> = {
        let mut v: Vec<usize> = (na..n).collect();
        v.shuffle(&mut rng);
        v
    };
    repair_side(&mut g, &a_order, bound, &mut rng)?;
    repair_side(&mut g, &b_order, bound, &mut rng)?;
    SplitInstance::new(g.build(), a, b_set)
}

/// Adds same-side edges until every vertex of `side` has degree ≥ `bound`,
/// pairing deficient vertices with each other first.
fn repair_side(
    g: &mut GraphBuilder,
    side: &[usize],
    bound: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    loop {
        let short: Vec<usize> = side
            .iter()
            .copied()
            .filter(|&v| g.degree(v) < bound)
            .collect();
        let Some(&v) = short.first() else {
            return Ok(());
        };
        let partner = short
            .iter()
            .copied()
            .find(|&u| u != v && !g.has_edge(u, v))
            .or_else(|| {
                let opts: Vec<usize> = side
                    .iter()
                    .copied()
                    .filter(|&u| u != v && !g.has_edge(u, v))
                    .collect();
                let least = opts.iter().map(|&u| g.degree(u)).min()?;
                let ties: Vec<usize> = opts.into_iter().filter(|&u| g.degree(u) == least).collect();
                ties.choose(rng).copied()
            })
            .ok_or_else(|| {
                Error::Infeasible(format!("cannot raise vertex {v} to degree {bound}"))
            })?;
        g.add_edge(v, partner);
    }
}

/// `G(n, p)` with `p = target/(n−1)`, then greedy augmentation from the
/// lowest-degree vertex until `δ(G) ≥ target`.
pub fn random_graph_min_degree(n: usize, target: usize, seed: u64) -> Result<Graph> {
    if target >= n.max(1) {
        return Err(precondition(format!(
            "target degree {target} must be below n={n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = if n > 1 {
        target as f64 / (n - 1) as f64
    } else {
        0.0
    };
    let mut g = GraphBuilder::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    while let Some(v) = (0..n)
        .filter(|&v| g.degree(v) < target)
        .min_by_key(|&v| g.degree(v))
    {
        let free: Vec<usize> = (0..n).filter(|&u| u != v && !g.has_edge(u, v)).collect();
        let needy: Vec<usize> = free
            .iter()
            .copied()
            .filter(|&u| g.degree(u) < target)
            .collect();
        let pool = if needy.is_empty() { &free } else { &needy };
        let u = *pool
            .choose(&mut rng)
            .expect("target < n leaves a non-neighbour");
        g.add_edge(u, v);
    }
    Ok(g.build())
}

/// Like [`random_graph_min_degree`] but then thins edges at one minimum
/// degree vertex so that `δ(G)` equals `target` whenever that is reachable
/// without pushing another vertex below it.
pub fn random_graph_exact_min_degree(n: usize, target: usize, seed: u64) -> Result<Graph> {
    let g = random_graph_min_degree(n, target, seed)?;
    if g.min_degree() == target {
        return Ok(g);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xd1ce);
    let mut b = GraphBuilder::from_graph(&g);
    let v = (0..n)
        .min_by_key(|&v| g.degree(v))
        .expect("n > target >= 0 implies n >= 1");
    let mut nbrs = g.neighbors(v).to_vec();
    nbrs.shuffle(&mut rng);
    for u in nbrs {
        if b.degree(v) == target {
            break;
        }
        if b.degree(u) > target {
            b.remove_edge(u, v);
        }
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sharpness_examples() {
        let s = build_sharpness_graph(10, 4).unwrap();
        assert_eq!(s.graph.min_degree(), 5);
        // (u2, w3, u3, w4)
        assert_eq!(s.witness.vertices(), &[1, 7, 2, 8]);
        let s = build_sharpness_graph(9, 3).unwrap();
        assert_eq!(s.graph.min_degree(), 4);
        // (u1, w2, u2) with W starting at index 4
        assert_eq!(s.witness.vertices(), &[0, 5, 1]);
        assert!(build_sharpness_graph(10, 6).is_err());
        assert!(build_sharpness_graph(3, 2).is_err());
    }

    #[test]
    fn sharpness_cross_edges_match_definition() {
        for n in 4..=14 {
            for k in 2..=n / 2 {
                let s = build_sharpness_graph(n, k).unwrap();
                let h = k / 2;
                let hub_w: Vec<usize> = (1..=h).map(|j| SharpnessGraph::w_index(n, j)).collect();
                let hub_u: Vec<usize> = (1..h).map(SharpnessGraph::u_index).collect();
                for x in s.u.iter() {
                    for y in s.w.iter() {
                        let expect = hub_w.contains(&y) || hub_u.contains(&x);
                        assert_eq!(s.graph.has_edge(x, y), expect, "n={n} k={k} ({x},{y})");
                    }
                }
                assert_eq!(s.graph.min_degree(), sharpness_degree(n, k));
                assert!(s.graph.validate());
            }
        }
    }

    #[test]
    fn sparse_examples() {
        let inst = build_sparse_cut_instance(60, 2, 1, 7).unwrap();
        assert_eq!(inst.min_degree, 30);
        assert_eq!(inst.density, Rational::new(30, 900));
        let inst = build_sparse_cut_instance(60, 4, 2, 7).unwrap();
        assert_eq!(inst.min_degree, 31);
        assert_eq!(inst.density, Rational::new(60, 900));
        assert!(matches!(
            build_sparse_cut_instance(60, 4, 1, 7),
            Err(Error::Infeasible(_))
        ));
        let odd = build_sparse_cut_instance(61, 4, 3, 1).unwrap();
        assert!(odd.min_degree >= degree_bound(61, 4));
    }

    #[test]
    fn dense_examples() {
        let inst = build_dense_bipartite_instance(60, 2, 0, 3).unwrap();
        assert!(inst.min_degree >= 30);
        assert_eq!((inst.a.len(), inst.b.len()), (30, 30));
        assert!(inst.density > Rational::new(9, 10));
        let inst = build_dense_bipartite_instance(61, 3, 1, 3).unwrap();
        assert_eq!((inst.a.len(), inst.b.len()), (31, 30));
        assert!(inst
            .graph
            .edges()
            .any(|(u, v)| inst.a.contains(u) && inst.a.contains(v)));
        assert!(inst.min_degree >= degree_bound(61, 3));
        assert!(build_dense_bipartite_instance(60, 3, 1, 3).is_err());
    }

    #[test]
    fn random_min_degree() {
        let g = random_graph_min_degree(10, 5, 11).unwrap();
        assert!(g.min_degree() >= 5);
        assert_eq!(g, random_graph_min_degree(10, 5, 11).unwrap());
        assert_eq!(
            random_graph_min_degree(12, 11, 0).unwrap(),
            Graph::complete(12)
        );
        assert!(random_graph_min_degree(5, 5, 0).is_err());
        for seed in 0..20 {
            let g = random_graph_exact_min_degree(12, 6, seed).unwrap();
            assert!(g.min_degree() >= 6);
        }
    }
}
