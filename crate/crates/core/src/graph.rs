//! Undirected simple graphs over dense vertex indices.

use num_rational::Ratio;

use crate::bitset::VertexSet;
use crate::error::{precondition, Error, Result};

/// Exact rational used for densities and threshold parameters.
pub type Rational = Ratio<i64>;

/// An immutable undirected simple graph on vertices `0..n`.
///
/// Each row is a bitset of width `n`; rows are kept symmetric and loop-free
/// by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Per-vertex degrees together with their minimum and maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub min: usize,
    pub max: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| {
                let mut row = VertexSet::full(n);
                row.remove(v);
                row
            })
            .collect();
        Graph { n, adj }
    }

    /// The cycle `0-1-…-(n-1)-0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut b = GraphBuilder::new(n);
        for v in 0..n {
            b.add_edge(v, (v + 1) % n);
        }
        b.build()
    }

    /// The path `0-1-…-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for v in 1..n {
            b.add_edge(v - 1, v);
        }
        b.build()
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = GraphBuilder::new(a + b);
        for x in 0..a {
            for y in a..a + b {
                g.add_edge(x, y);
            }
        }
        g.build()
    }

    pub fn petersen() -> Self {
        let mut b = GraphBuilder::new(10);
        for i in 0..5 {
            b.add_edge(i, (i + 1) % 5);
            b.add_edge(i, i + 5);
            b.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        b.build()
    }

    /// Builds from an edge list. Loops and out-of-range endpoints are errors;
    /// repeated edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(precondition(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(precondition(format!("loop at vertex {u}")));
            }
            b.add_edge(u, v);
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// `deg(v, U)`: neighbours of `v` inside `U`.
    #[inline]
    pub fn degree_into(&self, v: usize, set: &VertexSet) -> usize {
        self.adj[v].intersection_len(set)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        DegreeProfile {
            min: degrees.iter().copied().min().unwrap_or(0),
            max: degrees.iter().copied().max().unwrap_or(0),
            degrees,
        }
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `e(A, B)`, the number of edges with one endpoint in each of two
    /// disjoint sets.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> Result<usize> {
        self.check_set(a)?;
        self.check_set(b)?;
        if !a.is_disjoint(b) {
            return Err(precondition("edges_between requires disjoint sets"));
        }
        Ok(self.pair_count(a, b))
    }

    /// `Σ_{a∈A} deg(a, B)`. Equals `e(A, B)` when the sets are disjoint;
    /// for overlapping sets each edge inside `A ∩ B` is counted twice.
    pub fn pair_count(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter().map(|v| self.adj[v].intersection_len(b)).sum()
    }

    /// Exact density `e(A,B) / (|A||B|)` of two nonempty disjoint sets.
    pub fn density(&self, a: &VertexSet, b: &VertexSet) -> Result<Rational> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::Domain("density of an empty set".into()));
        }
        let e = self.edges_between(a, b)?;
        Ok(Rational::new(e as i64, (a.len() * b.len()) as i64))
    }

    /// Restriction `G|_U`. The returned map sends new index `i` to the
    /// original vertex `map[i]`; vertices keep their relative order.
    pub fn induced_subgraph(&self, u: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(u)?;
        if u.is_empty() {
            return Err(Error::Domain("induced subgraph of an empty set".into()));
        }
        let map = u.to_vec();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let m = map.len();
        let adj = map
            .iter()
            .map(|&v| {
                VertexSet::from_indices(m, self.adj[v].intersection(u).iter().map(|w| pos[w]))
            })
            .collect();
        Ok((Graph { n: m, adj }, map))
    }

    /// Spanning subgraph keeping only edges that cross between `a` and `b`.
    pub fn bipartite_restriction(&self, a: &VertexSet, b: &VertexSet) -> Graph {
        let mut adj = vec![VertexSet::empty(self.n); self.n];
        for v in a.iter() {
            adj[v] = self.adj[v].intersection(b);
        }
        for v in b.iter() {
            let extra = self.adj[v].intersection(a);
            adj[v].union_with(&extra);
        }
        Graph { n: self.n, adj }
    }

    /// Checks the structural invariants: width, symmetry, no loops.
    pub fn validate(&self) -> bool {
        self.adj.len() == self.n
            && (0..self.n).all(|u| {
                self.adj[u].width() == self.n
                    && !self.adj[u].contains(u)
                    && self.adj[u].iter().all(|v| self.adj[v].contains(u))
            })
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.width() != self.n {
            return Err(precondition(format!(
                "vertex set width {} does not match graph order {}",
                s.width(),
                self.n
            )));
        }
        Ok(())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Mutable staging area for constructing a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    adj: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder {
            n: g.n,
            adj: g.adj.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `{u, v}`; loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            return;
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Makes `set` a clique.
    pub fn add_clique(&mut self, set: &VertexSet) {
        for u in set.iter() {
            let mut row = set.clone();
            row.remove(u);
            self.adj[u].union_with(&row);
        }
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            adj: self.adj,
        }
    }
}
