//! Exceptional-vertex extraction and reassignment.

use std::cmp::Ordering;

use serde::Serialize;

use super::{ge_root_times, lt_one_minus_root_times, root_cmp, Big, ExtremalParams};
use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Two clusters after cleanup. `a` and `b` partition the vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClusterPair {
    #[serde(serialize_with = "ser_set")]
    pub a: VertexSet,
    #[serde(serialize_with = "ser_set")]
    pub b: VertexSet,
    #[serde(serialize_with = "ser_set")]
    pub exc_a: VertexSet,
    #[serde(serialize_with = "ser_set")]
    pub exc_b: VertexSet,
    /// Vertices that were in neither input set.
    #[serde(serialize_with = "ser_set")]
    pub leftovers: VertexSet,
    /// Vertices whose degree inside their final side is below
    /// `(1 − α^{1/4})n/2` (sparse case) or whose cross degree is (dense case).
    pub low_degree: usize,
    /// Every vertex that was never exceptional keeps at least
    /// `(1 − α^{1/4})n/2 − moved` neighbours on its own side (sparse case)
    /// or across (dense case), where `moved` counts reassigned vertices.
    pub core_degree_ok: bool,
}

impl ClusterPair {
    /// Every vertex that had to be placed by the reassignment rule.
    pub fn moved(&self) -> VertexSet {
        self.exc_a.union(&self.exc_b).union(&self.leftovers)
    }
}

fn ser_set<S: serde::Serializer>(s: &VertexSet, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_seq(s.iter())
}

/// `deg ≥ (1 − α^{1/4})·n/2`, compared exactly.
fn meets_quarter_root(deg: usize, alpha: crate::graph::Rational, n: usize) -> bool {
    let rhs = Big::from_integer(1) - Big::new(2 * deg as i128, n.max(1) as i128);
    root_cmp(alpha, 4, rhs) != Ordering::Less
}

/// `deg ≥ (1 − α^{1/4})·n/2 − slack`.
fn meets_quarter_root_slack(
    deg: usize,
    slack: usize,
    alpha: crate::graph::Rational,
    n: usize,
) -> bool {
    let rhs = Big::from_integer(1) - Big::new(2 * (deg + slack) as i128, n.max(1) as i128);
    root_cmp(alpha, 4, rhs) != Ordering::Less
}

/// Sparse-cut cleanup: vertices of `A` with `deg(x, B) ≥ √α|B|` (and
/// symmetrically) are pulled out, then each pulled or uncovered vertex `z`
/// joins `A` when `deg(z, A) ≥ deg(z, B)` and `B` otherwise.
pub fn cleanup_sparse(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    params: &ExtremalParams,
) -> ClusterPair {
    let alpha = params.alpha;
    let exc_a = VertexSet::from_indices(
        g.n(),
        a.iter()
            .filter(|&x| ge_root_times(g.degree_into(x, b), alpha, 2, b.len())),
    );
    let exc_b = VertexSet::from_indices(
        g.n(),
        b.iter()
            .filter(|&y| ge_root_times(g.degree_into(y, a), alpha, 2, a.len())),
    );
    reassign(g, a, b, exc_a, exc_b, params, false)
}

/// Dense-bipartite cleanup: vertices of `A` with `deg(x, B) < (1 − √α)|B|`
/// (and symmetrically) are pulled out, then each pulled or uncovered vertex
/// `z` joins `B` when `deg(z, A) ≥ deg(z, B)` and `A` otherwise.
pub fn cleanup_dense(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    params: &ExtremalParams,
) -> ClusterPair {
    let alpha = params.alpha;
    let exc_a = VertexSet::from_indices(
        g.n(),
        a.iter()
            .filter(|&x| lt_one_minus_root_times(g.degree_into(x, b), alpha, 2, b.len())),
    );
    let exc_b = VertexSet::from_indices(
        g.n(),
        b.iter()
            .filter(|&y| lt_one_minus_root_times(g.degree_into(y, a), alpha, 2, a.len())),
    );
    reassign(g, a, b, exc_a, exc_b, params, true)
}

fn reassign(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    exc_a: VertexSet,
    exc_b: VertexSet,
    params: &ExtremalParams,
    crosswise: bool,
) -> ClusterPair {
    let n = g.n();
    let leftovers = a.union(b).complement();
    let core_a = a.difference(&exc_a);
    let core_b = b.difference(&exc_b);
    let mut new_a = core_a.clone();
    let mut new_b = core_b.clone();
    let pending = exc_a.union(&exc_b).union(&leftovers);
    for z in pending.iter() {
        let prefers_a = g.degree_into(z, &core_a) >= g.degree_into(z, &core_b);
        if prefers_a != crosswise {
            new_a.insert(z);
        } else {
            new_b.insert(z);
        }
    }
    let moved = pending.len();
    let relevant = |v: usize, own: &VertexSet, other: &VertexSet| {
        if crosswise {
            g.degree_into(v, other)
        } else {
            g.degree_into(v, own)
        }
    };
    let mut low_degree = 0;
    let mut core_degree_ok = true;
    for (side, other, core) in [(&new_a, &new_b, &core_a), (&new_b, &new_a, &core_b)] {
        for v in side.iter() {
            let d = relevant(v, side, other);
            if !meets_quarter_root(d, params.alpha, n) {
                low_degree += 1;
            }
            if core.contains(v) && !meets_quarter_root_slack(d, moved, params.alpha, n) {
                core_degree_ok = false;
            }
        }
    }
    ClusterPair {
        a: new_a,
        b: new_b,
        exc_a,
        exc_b,
        leftovers,
        low_degree,
        core_degree_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_sparse_cut_instance;
    use crate::graph::GraphBuilder;

    #[test]
    fn clean_instance_has_no_exceptions() {
        let inst = build_sparse_cut_instance(60, 2, 1, 1).unwrap();
        let c = cleanup_sparse(&inst.graph, &inst.a, &inst.b, &ExtremalParams::default());
        assert!(c.exc_a.is_empty() && c.exc_b.is_empty());
        assert_eq!((c.a.clone(), c.b.clone()), (inst.a, inst.b));
        assert_eq!(c.low_degree, 0);
        assert!(c.core_degree_ok);
    }

    #[test]
    fn planted_vertex_is_moved() {
        // vertex 0 sits in A but is adjacent to all of B and only two of A
        let n = 40;
        let a = VertexSet::from_indices(n, 0..20);
        let b = a.complement();
        let mut gb = GraphBuilder::new(n);
        gb.add_clique(&VertexSet::from_indices(n, 1..20));
        gb.add_clique(&b);
        gb.add_edge(0, 1);
        gb.add_edge(0, 2);
        for y in b.iter() {
            gb.add_edge(0, y);
        }
        let g = gb.build();
        let c = cleanup_sparse(&g, &a, &b, &ExtremalParams::default());
        assert_eq!(c.exc_a.to_vec(), vec![0]);
        assert!(c.b.contains(0));
        assert_eq!(c.a.union(&c.b), VertexSet::full(n));
        assert!(c.a.is_disjoint(&c.b));
    }

    #[test]
    fn leftovers_are_assigned() {
        let inst = build_sparse_cut_instance(40, 2, 1, 4).unwrap();
        let mut a = inst.a.clone();
        a.remove(3);
        let c = cleanup_sparse(&inst.graph, &a, &inst.b, &ExtremalParams::default());
        assert_eq!(c.leftovers.to_vec(), vec![3]);
        assert!(c.a.contains(3));
        assert_eq!(c.a.len() + c.b.len(), 40);
    }

    #[test]
    fn dense_cleanup_sends_inner_vertex_across() {
        // complete bipartite 10+10, vertex 0 of A loses all cross edges but
        // gains neighbours in A: it belongs with B
        let n = 20;
        let a = VertexSet::from_indices(n, 0..10);
        let b = a.complement();
        let mut gb = GraphBuilder::new(n);
        for x in 1..10 {
            for y in 10..20 {
                gb.add_edge(x, y);
            }
            gb.add_edge(0, x);
        }
        let g = gb.build();
        let c = cleanup_dense(&g, &a, &b, &ExtremalParams::default());
        assert_eq!(c.exc_a.to_vec(), vec![0]);
        assert!(c.b.contains(0));
    }
}
