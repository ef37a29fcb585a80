//! Near-complete bipartite split.
//!
//! After cleanup the larger side `A` is shrunk by moving high inner-degree
//! vertices across. Any remaining surplus `r` is paid for with an
//! `r`-matching inside `A` threaded into a short `S`-path; the rest of the
//! cycle is a Hamiltonian path of the balanced bipartite remainder.

use super::{
    certify, check_split, cleanup_dense, connecting_paths, ge_root_times, hypotheses_for, occupied,
    path_through, ExtremalParams, ExtremalSolution, Host, SolveError, SolveTrace, Stage,
    StageClock, MAX_RETRIES,
};
use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::hamilton::{OrderedSequence, SolverConfig};
use crate::matching::maximum_matching;

pub fn solve_extremal_dense(
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
    let mut trace = SolveTrace::new("dense", g, seq);
    check_split(g, a, b, seq, &trace)?;
    let mut clock = StageClock::new(&mut trace);
    let s_set = VertexSet::from_indices(n, s.iter().copied());

    let cluster = clock.run(Stage::Cleanup, |t| {
        let c = cleanup_dense(g, a, b, params);
        t.exceptional = c.exc_a.len() + c.exc_b.len();
        t.reassigned = c.moved().len();
        t.low_degree_vertices = c.low_degree;
        t.hypotheses = hypotheses_for(g, &c.a, &c.b, k, params, true);
        Ok(c)
    })?;

    let (big, small) = clock.run(Stage::Balancing, |t| {
        let (mut big, mut small) = if cluster.a.len() >= cluster.b.len() {
            (cluster.a.clone(), cluster.b.clone())
        } else {
            (cluster.b.clone(), cluster.a.clone())
        };
        while big.len() >= small.len() + 2 {
            let pick = big
                .iter()
                .map(|x| (g.degree_into(x, &big), x))
                .filter(|&(d, _)| ge_root_times(d, params.alpha, 4, big.len()))
                .max_by(|p, q| p.0.cmp(&q.0).then(q.1.cmp(&p.1)));
            let Some((_, x)) = pick else { break };
            big.remove(x);
            small.insert(x);
            t.balancing_moves += 1;
        }
        t.imbalance = big.len() - small.len();
        Ok((big, small))
    })?;
    let r = big.len() - small.len();

    let matching = clock.run(Stage::Matching, |t| {
        if r == 0 {
            return Ok(Vec::new());
        }
        let pool = big.difference(&s_set);
        let (sub, map) = g.induced_subgraph(&pool).map_err(|e| e.to_string())?;
        let m = maximum_matching(&sub);
        if m.len() < r {
            return Err(format!(
                "largest matching inside the bigger side has {} edges, need {r}",
                m.len()
            ));
        }
        let pairs: Vec<(usize, usize)> = m
            .pairs()
            .into_iter()
            .take(r)
            .map(|(x, y)| (map[x], map[y]))
            .collect();
        t.discrepancy_matching = pairs.len();
        Ok(pairs)
    })?;

    let mut order = clock.run(Stage::SPath, |t| {
        // hops: matching edges, then the sequence, joined by routed paths
        let mut pairs = Vec::with_capacity(r + k - 1);
        for i in 1..matching.len() {
            pairs.push((matching[i - 1].1, matching[i].0));
        }
        if let Some(&(_, w)) = matching.last() {
            pairs.push((w, s[0]));
        }
        for i in 1..k {
            pairs.push((s[i - 1], s[i]));
        }
        let host = Host::Across(&big, &small);
        // the first matching vertex is never a pair endpoint, so block all of them
        let mut bare = VertexSet::empty(n);
        for &(u, w) in &matching {
            bare.insert(u);
            bare.insert(w);
        }
        let blocked = cluster.moved().difference(&s_set).union(&bare);
        let ps = connecting_paths(g, host, &pairs, 5, r + k - 1, &blocked)
            .or_else(|_| connecting_paths(g, host, &pairs, 5, r + k - 1, &bare))
            .map_err(|e| e.to_string())?;
        t.path_lengths = ps.lengths();

        let mut path = vec![matching.first().map_or(s[0], |&(u, _)| u)];
        for (i, p) in ps.paths.iter().enumerate() {
            // a matching edge precedes each of the first r routed paths
            if i < matching.len() {
                path.extend_from_slice(p);
            } else {
                path.extend_from_slice(&p[1..]);
            }
        }
        let used = occupied(&path, n)?;
        let first = path[0];
        let last = *path.last().unwrap_or(&first);
        if big.contains(first) == big.contains(last) {
            let other = if big.contains(last) { &small } else { &big };
            let v = g
                .neighbors(last)
                .intersection(other)
                .difference(&used)
                .first()
                .ok_or_else(|| format!("no free vertex across from path end {last}"))?;
            path.push(v);
            t.parity_vertex = Some(v);
        }
        Ok(path)
    })?;

    clock.run(Stage::Closing, |t| {
        let used = occupied(&order, n)?;
        let (first, last) = (order[0], order[order.len() - 1]);
        let mut rest = used.complement();
        if rest.is_empty() {
            return if g.has_edge(first, last) {
                Ok(())
            } else {
                Err("S-path spans the graph but does not close".into())
            };
        }
        rest.insert(first);
        rest.insert(last);
        let (na, nb) = (rest.intersection_len(&big), rest.intersection_len(&small));
        if na != nb {
            return Err(format!("remainder is unbalanced: {na} vs {nb}"));
        }
        let host = g.bipartite_restriction(&big, &small);
        for attempt in 0..MAX_RETRIES {
            if let Some(p) = path_through(&host, &rest, last, first, cfg, attempt) {
                order.extend_from_slice(&p[1..p.len() - 1]);
                return Ok(());
            }
            t.retries += 1;
        }
        Err(format!(
            "no bipartite Hamiltonian path through {} remaining vertices",
            rest.len()
        ))
    })?;

    certify(g, seq, order, trace)
}
