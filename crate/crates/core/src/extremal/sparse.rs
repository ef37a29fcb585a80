//! Two dense clusters joined by a sparse cut.
//!
//! A maximum matching between the clusters (ignoring edges with both ends in
//! `S`) supplies bridges for every side change demanded by `S`. Short paths
//! inside each cluster stitch the sequence together, a Hamiltonian path of
//! the unused part of a cluster is spliced in between two consecutive cycle
//! vertices, and a cluster the sequence never visits is absorbed through two
//! cross edges.

use super::{
    certify, check_split, cleanup_sparse, connecting_paths, consecutive_positions, hypotheses_for,
    occupied, path_through, side_of, ExtremalParams, ExtremalSolution, Host, Side, SolveError,
    SolveTrace, Stage, StageClock, MAX_RETRIES,
};
use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphBuilder};
use crate::hamilton::{OrderedSequence, SolverConfig};
use crate::matching::bipartite_matching_and_cover;

/// One move from `v_i` towards `v_{i+1}`.
#[derive(Debug, Clone, Copy)]
enum Hop {
    /// Routed path number `idx` inside one side.
    Route(Side, usize),
    /// Step along an edge to this vertex.
    Step(usize),
}

/// Runs cleanup, bridge selection, assembly, patching and absorption, then
/// certifies the cycle. `a` and `b` must be disjoint.
pub fn solve_extremal_sparse(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    seq: &OrderedSequence,
    params: &ExtremalParams,
    cfg: &SolverConfig,
) -> Result<ExtremalSolution, SolveError> {
    let n = g.n();
    let s = seq.vertices();
    let k = s.len();
    let mut trace = SolveTrace::new("sparse", g, seq);
    check_split(g, a, b, seq, &trace)?;
    let mut clock = StageClock::new(&mut trace);

    let cluster = clock.run(Stage::Cleanup, |t| {
        let c = cleanup_sparse(g, a, b, params);
        t.exceptional = c.exc_a.len() + c.exc_b.len();
        t.reassigned = c.moved().len();
        t.low_degree_vertices = c.low_degree;
        t.hypotheses = hypotheses_for(g, &c.a, &c.b, k, params, false);
        Ok(c)
    })?;
    let (ca, cb) = (&cluster.a, &cluster.b);
    let side_set = |side: Side| if side == Side::A { ca } else { cb };
    let s_set = VertexSet::from_indices(n, s.iter().copied());

    let bridges = clock.run(Stage::Bridges, |t| {
        let mut h = GraphBuilder::new(n);
        for x in ca.iter() {
            for y in g.neighbors(x).intersection(cb).iter() {
                if !(s_set.contains(x) && s_set.contains(y)) {
                    h.add_edge(x, y);
                }
            }
        }
        let bm = bipartite_matching_and_cover(&h.build(), ca, cb);
        t.bridge_matching = bm.matching.len();
        t.bridge_cover = bm.cover.len();
        t.transitions = (0..k)
            .filter(|&i| side_of(s[i], ca) != side_of(s[(i + 1) % k], ca))
            .count();
        if t.bridge_matching < t.transitions {
            return Err(format!(
                "{} bridges for {} side changes",
                t.bridge_matching, t.transitions
            ));
        }
        Ok(bm.matching)
    })?;

    let mut order = clock.run(Stage::Assembly, |t| {
        let mut used_bridge = VertexSet::empty(n);
        let mut free: Vec<(usize, usize)> = bridges
            .pairs()
            .into_iter()
            .filter(|&(x, y)| !s_set.contains(x) && !s_set.contains(y))
            .collect();
        free.reverse();
        let mut pairs: [Vec<(usize, usize)>; 2] = [Vec::new(), Vec::new()];
        let slot = |side: Side| if side == Side::A { 0 } else { 1 };
        let mut hops: Vec<Vec<Hop>> = Vec::with_capacity(k);
        for i in 0..k {
            let (v, w) = (s[i], s[(i + 1) % k]);
            let (sv, sw) = (side_of(v, ca), side_of(w, ca));
            let mut route = |side: Side, x: usize, y: usize, out: &mut Vec<Hop>| {
                let list = &mut pairs[slot(side)];
                list.push((x, y));
                out.push(Hop::Route(side, list.len() - 1));
            };
            let mut seg = Vec::new();
            if sv == sw {
                route(sv, v, w, &mut seg);
                hops.push(seg);
                continue;
            }
            let own = bridges.mate(v).filter(|_| !used_bridge.contains(v));
            let next = bridges.mate(w).filter(|_| !used_bridge.contains(w));
            let (p, q) = if let Some(m) = own {
                (v, m)
            } else if let Some(m) = next {
                (m, w)
            } else {
                let mut pick = None;
                while let Some((x, y)) = free.pop() {
                    if !used_bridge.contains(x) {
                        pick = Some(if sv == Side::A { (x, y) } else { (y, x) });
                        break;
                    }
                }
                pick.ok_or_else(|| format!("ran out of bridges at transition {}", i + 1))?
            };
            used_bridge.insert(p);
            used_bridge.insert(q);
            t.bridges_used += 1;
            if p != v {
                route(sv, v, p, &mut seg);
            }
            seg.push(Hop::Step(q));
            if q != w {
                route(sw, q, w, &mut seg);
            }
            hops.push(seg);
        }

        let blocked = cluster.moved().difference(&s_set).difference(&used_bridge);
        let mut systems = Vec::with_capacity(2);
        for side in [Side::A, Side::B] {
            let host = Host::Within(side_set(side));
            let list = &pairs[slot(side)];
            let ps = connecting_paths(g, host, list, 4, k, &blocked)
                .or_else(|_| connecting_paths(g, host, list, 4, k, &VertexSet::empty(n)))
                .map_err(|e| e.to_string())?;
            t.path_lengths.extend(ps.lengths());
            systems.push(ps);
        }

        let mut order = Vec::with_capacity(n);
        for (i, seg) in hops.iter().enumerate() {
            let mut walk = vec![s[i]];
            for hop in seg {
                match *hop {
                    Hop::Route(side, idx) => {
                        walk.extend_from_slice(&systems[slot(side)].paths[idx][1..])
                    }
                    Hop::Step(x) => walk.push(x),
                }
            }
            walk.pop();
            order.extend(walk);
        }
        occupied(&order, n)?;
        Ok(order)
    })?;

    clock.run(Stage::Patching, |t| {
        for side in [Side::A, Side::B] {
            let set = side_set(side);
            let on_cycle = occupied(&order, n)?;
            let rest = set.difference(&on_cycle);
            if rest.is_empty() || on_cycle.is_disjoint(set) {
                continue;
            }
            let spots = consecutive_positions(&order, set);
            if spots.is_empty() {
                return Err("no two consecutive cycle vertices on one side".into());
            }
            let mut done = false;
            for attempt in 0..MAX_RETRIES {
                let p = spots[attempt % spots.len()];
                let (u, w) = (order[p], order[(p + 1) % order.len()]);
                let mut t_set = rest.clone();
                t_set.insert(u);
                t_set.insert(w);
                if let Some(path) = path_through(g, &t_set, u, w, cfg, attempt) {
                    order.splice(p + 1..p + 1, path[1..path.len() - 1].iter().copied());
                    done = true;
                    break;
                }
                t.retries += 1;
            }
            if !done {
                return Err(format!(
                    "no Hamiltonian path through the {} leftover vertices",
                    rest.len()
                ));
            }
        }
        occupied(&order, n).map(|_| ())
    })?;

    clock.run(Stage::Absorption, |t| {
        let rest = occupied(&order, n)?.complement();
        if rest.is_empty() {
            return Ok(());
        }
        if rest != *ca && rest != *cb {
            return Err(format!("{} vertices left outside the cycle", rest.len()));
        }
        t.absorbed_side = true;
        let len = order.len();
        for attempt in 0..MAX_RETRIES.min(len) {
            let (xi, xj) = (order[attempt], order[(attempt + 1) % len]);
            let Some(yi) = g.neighbors(xi).intersection(&rest).first() else {
                t.retries += 1;
                continue;
            };
            let yj = g
                .neighbors(xj)
                .intersection(&rest)
                .iter()
                .find(|&y| y != yi || rest.len() == 1);
            let path = match yj {
                Some(yj) if yj == yi => Some(vec![yi]),
                Some(yj) => path_through(g, &rest, yi, yj, cfg, attempt),
                None => None,
            };
            if let Some(path) = path {
                order.splice(attempt + 1..attempt + 1, path);
                return Ok(());
            }
            t.retries += 1;
        }
        Err("could not splice the untouched side into the cycle".into())
    })?;

    certify(g, seq, order, trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_sparse_cut_instance;
    use crate::hamilton::verify_s_cycle;

    fn solve(
        n: usize,
        k: usize,
        seed: u64,
        s: Vec<usize>,
    ) -> (ExtremalSolution, Graph, OrderedSequence) {
        let inst = build_sparse_cut_instance(n, k, 2 + k / 2, seed).unwrap();
        let seq = OrderedSequence::new(n, s).unwrap();
        let sol = solve_extremal_sparse(
            &inst.graph,
            &inst.a,
            &inst.b,
            &seq,
            &ExtremalParams::default(),
            &SolverConfig::default(),
        )
        .unwrap();
        (sol, inst.graph, seq)
    }

    #[test]
    fn two_vertices_across_the_cut() {
        let (sol, g, seq) = solve(60, 2, 1, vec![0, 30]);
        assert!(verify_s_cycle(&g, &seq, &sol.cycle).is_ok());
        assert!(sol.trace.certified);
        assert_eq!(sol.trace.transitions, 2);
        assert!(sol.trace.bridge_matching >= 2);
    }

    #[test]
    fn sequence_inside_one_side_absorbs_the_other() {
        let (sol, g, seq) = solve(60, 4, 2, vec![3, 1, 7, 5]);
        assert!(verify_s_cycle(&g, &seq, &sol.cycle).is_ok());
        assert!(sol.trace.absorbed_side);
        assert_eq!(sol.trace.transitions, 0);
    }

    #[test]
    fn alternating_sequence() {
        let (sol, g, seq) = solve(64, 6, 3, vec![0, 40, 1, 41, 2, 42]);
        assert!(verify_s_cycle(&g, &seq, &sol.cycle).is_ok());
        assert_eq!(sol.trace.transitions, 6);
        assert!(sol.trace.bridges_used >= 6);
    }

    #[test]
    fn odd_k_with_even_n() {
        let (sol, g, seq) = solve(60, 5, 4, vec![0, 31, 2, 40, 50]);
        assert!(verify_s_cycle(&g, &seq, &sol.cycle).is_ok());
        assert!(sol.trace.bridge_matching >= 4);
    }

    #[test]
    fn overlapping_sides_rejected() {
        let inst = build_sparse_cut_instance(40, 2, 2, 1).unwrap();
        let seq = OrderedSequence::new(40, vec![0, 1]).unwrap();
        let err = solve_extremal_sparse(
            &inst.graph,
            &inst.a,
            &inst.a,
            &seq,
            &ExtremalParams::default(),
            &SolverConfig::default(),
        )
        .unwrap_err();
        assert_eq!(err.stage, Stage::Input);
    }
}
