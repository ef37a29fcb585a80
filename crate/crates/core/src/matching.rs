//! Maximum matchings, König covers and the two matching lower bounds.

use std::collections::VecDeque;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::graph::{Graph, Rational};

const NONE: usize = usize::MAX;

/// A set of pairwise disjoint edges of a host graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<usize>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            mate: vec![NONE; n],
        }
    }

    fn from_mates(mate: Vec<usize>) -> Self {
        Matching { mate }
    }

    pub fn len(&self) -> usize {
        self.mate.iter().filter(|&&m| m != NONE).count() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        match self.mate.get(v) {
            Some(&m) if m != NONE => Some(m),
            _ => None,
        }
    }

    /// Matched pairs `(u, v)` with `u < v`, ordered by `u`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.mate.len())
            .filter_map(|u| self.mate(u).filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    pub fn covered(&self) -> VertexSet {
        VertexSet::from_indices(
            self.mate.len(),
            (0..self.mate.len()).filter(|&v| self.mate[v] != NONE),
        )
    }

    /// Every pair is an edge of `g` and mates are mutual.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.mate.len() == g.n()
            && (0..g.n()).all(|u| match self.mate(u) {
                None => true,
                Some(v) => self.mate(v) == Some(u) && g.has_edge(u, v),
            })
    }
}

/// Maximum matching of a general graph via augmenting paths with blossom
/// contraction. Roots are tried in increasing index order and neighbours
/// are scanned in increasing order, so the output is deterministic.
pub fn maximum_matching(g: &Graph) -> Matching {
    Blossom::new(g).run()
}

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn run(mut self) -> Matching {
        for root in 0..self.g.n() {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(mut v) = self.find_augmenting(root) {
                while v != NONE {
                    let pv = self.parent[v];
                    let next = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = next;
                }
            }
        }
        Matching::from_mates(self.mate)
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_augmenting(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in self.g.neighbors(v).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}

/// A maximum matching of the bipartite graph formed by the `A`–`B` edges,
/// together with a minimum vertex cover of those edges.
#[derive(Debug, Clone)]
pub struct BipartiteMatching {
    pub matching: Matching,
    pub cover: VertexSet,
}

/// Hopcroft–Karp on the edges between `a` and `b` (edges inside either side
/// are ignored), followed by König's construction of a minimum cover.
///
/// Panics if `a` and `b` overlap or have the wrong width.
pub fn bipartite_matching_and_cover(g: &Graph, a: &VertexSet, b: &VertexSet) -> BipartiteMatching {
    assert!(a.is_disjoint(b), "bipartite sides must be disjoint");
    let n = g.n();
    let left = a.to_vec();
    let mut mate = vec![NONE; n];
    let mut dist = vec![usize::MAX; n];

    loop {
        // layer the free left vertices
        let mut queue = VecDeque::new();
        for &u in &left {
            if mate[u] == NONE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u).intersection(b).iter() {
                match mate[w] {
                    NONE => found = true,
                    m if dist[m] == usize::MAX => {
                        dist[m] = dist[u] + 1;
                        queue.push_back(m);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        for &u in &left {
            if mate[u] == NONE {
                augment(g, b, u, &mut mate, &mut dist);
            }
        }
    }

    // König: Z = vertices reachable from free left vertices by alternating paths
    let mut reach = VertexSet::empty(n);
    let mut queue: VecDeque<usize> = left.iter().copied().filter(|&u| mate[u] == NONE).collect();
    for &u in &queue {
        reach.insert(u);
    }
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u).intersection(b).iter() {
            if reach.contains(w) || mate[u] == w {
                continue;
            }
            reach.insert(w);
            let m = mate[w];
            if m != NONE && !reach.contains(m) {
                reach.insert(m);
                queue.push_back(m);
            }
        }
    }
    let cover = a.difference(&reach).union(&b.intersection(&reach));
    BipartiteMatching {
        matching: Matching::from_mates(mate),
        cover,
    }
}

fn augment(g: &Graph, b: &VertexSet, u: usize, mate: &mut [usize], dist: &mut [usize]) -> bool {
    for w in g.neighbors(u).intersection(b).iter() {
        let m = mate[w];
        let ok = if m == NONE {
            true
        } else if dist[m] == dist[u].wrapping_add(1) {
            augment(g, b, m, mate, dist)
        } else {
            false
        };
        if ok {
            mate[u] = w;
            mate[w] = u;
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

/// A matching number compared against a proven lower bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub nu: usize,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub bound: Rational,
    pub holds: bool,
}

/// `ν(G) ≥ min{δ(G), (n−1)/2}`.
pub fn erdos_posa_check(g: &Graph) -> BoundCheck {
    let nu = maximum_matching(g).len();
    let n = g.n() as i64;
    let bound = std::cmp::min(
        Rational::from_integer(g.min_degree() as i64),
        Rational::new(n - 1, 2),
    );
    BoundCheck {
        nu,
        bound,
        holds: Rational::from_integer(nu as i64) >= bound,
    }
}

/// `ν(G) ≥ δ·n / (2(δ+Δ))`; the bound is 0 for edgeless graphs.
pub fn degree_ratio_check(g: &Graph) -> BoundCheck {
    let nu = maximum_matching(g).len();
    let (min, max) = (g.min_degree() as i64, g.max_degree() as i64);
    let bound = if max == 0 {
        Rational::from_integer(0)
    } else {
        Rational::new(min * g.n() as i64, 2 * (min + max))
    };
    BoundCheck {
        nu,
        bound,
        holds: Rational::from_integer(nu as i64) >= bound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, v: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_indices(n, v)
    }

    #[test]
    fn small_families() {
        assert_eq!(maximum_matching(&Graph::cycle(6)).len(), 3);
        assert_eq!(maximum_matching(&Graph::cycle(7)).len(), 3);
        assert_eq!(maximum_matching(&Graph::petersen()).len(), 5);
        assert_eq!(maximum_matching(&Graph::empty(5)).len(), 0);
        assert_eq!(maximum_matching(&Graph::complete(9)).len(), 4);
    }

    #[test]
    fn blossom_needed() {
        // triangle with pendant paths: greedy from 0 can get stuck without contraction
        let g = Graph::from_edges(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (0, 5),
                (5, 6),
                (1, 7),
            ],
        )
        .unwrap();
        let m = maximum_matching(&g);
        assert!(m.is_valid_for(&g));
        assert_eq!(m.len(), 4);
    }

    #[test]
    fn konig_on_complete_bipartite() {
        let g = Graph::complete_bipartite(3, 5);
        let r = bipartite_matching_and_cover(&g, &set(8, 0..3), &set(8, 3..8));
        assert_eq!(r.matching.len(), 3);
        assert_eq!(r.cover, set(8, 0..3));
    }

    #[test]
    fn perfect_matching_side() {
        let g = Graph::from_edges(8, (0..4).map(|i| (i, i + 4))).unwrap();
        let r = bipartite_matching_and_cover(&g, &set(8, 0..4), &set(8, 4..8));
        assert_eq!(r.matching.len(), 4);
        assert_eq!(r.cover.len(), 4);
    }

    #[test]
    fn inner_edges_ignored() {
        let g = Graph::complete(6);
        let r = bipartite_matching_and_cover(&g, &set(6, [0]), &set(6, [1, 2]));
        assert_eq!(r.matching.len(), 1);
        assert_eq!(r.cover.len(), 1);
    }

    #[test]
    fn bound_examples() {
        let c5 = erdos_posa_check(&Graph::cycle(5));
        assert_eq!(
            (c5.nu, c5.bound, c5.holds),
            (2, Rational::from_integer(2), true)
        );
        let k4 = erdos_posa_check(&Graph::complete(4));
        assert_eq!((k4.nu, k4.bound), (2, Rational::new(3, 2)));
        let c6 = degree_ratio_check(&Graph::cycle(6));
        assert_eq!((c6.nu, c6.bound, c6.holds), (3, Rational::new(3, 2), true));
        let k5 = degree_ratio_check(&Graph::complete(5));
        assert_eq!((k5.nu, k5.bound, k5.holds), (2, Rational::new(5, 4), true));
        let e = degree_ratio_check(&Graph::empty(4));
        assert_eq!((e.bound, e.holds), (Rational::from_integer(0), true));
    }
}
