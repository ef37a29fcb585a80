//! Short internally disjoint connecting paths.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Where a connecting path may run.
#[derive(Debug, Clone, Copy)]
pub enum Host<'a> {
    /// Inside one side, using any edge of the induced subgraph.
    Within(&'a VertexSet),
    /// Across a split, using only edges between the two parts.
    Across(&'a VertexSet, &'a VertexSet),
}

impl Host<'_> {
    fn allows_vertex(&self, v: usize) -> bool {
        match self {
            Host::Within(s) => s.contains(v),
            Host::Across(a, b) => a.contains(v) || b.contains(v),
        }
    }

    fn allows_edge(&self, u: usize, v: usize) -> bool {
        match self {
            Host::Within(s) => s.contains(u) && s.contains(v),
            Host::Across(a, b) => {
                (a.contains(u) && b.contains(v)) || (b.contains(u) && a.contains(v))
            }
        }
    }
}

/// Paths listed endpoint to endpoint, plus every vertex they occupy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathSystem {
    pub paths: Vec<Vec<usize>>,
    #[serde(skip)]
    pub used: VertexSet,
}

impl PathSystem {
    /// Path lengths in edges.
    pub fn lengths(&self) -> Vec<usize> {
        self.paths.iter().map(|p| p.len() - 1).collect()
    }

    /// No vertex is interior to two paths, and no interior vertex is an
    /// endpoint of any path.
    pub fn internally_disjoint(&self) -> bool {
        let n = self.used.width();
        let mut seen = VertexSet::empty(n);
        let mut ends = VertexSet::empty(n);
        for p in &self.paths {
            ends.insert(p[0]);
            ends.insert(p[p.len() - 1]);
        }
        for p in &self.paths {
            for &v in &p[1..p.len() - 1] {
                if seen.contains(v) || ends.contains(v) {
                    return false;
                }
                seen.insert(v);
            }
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("could not route pair #{index} ({from}, {to}): {reason}")]
pub struct RoutingError {
    pub index: usize,
    pub from: usize,
    pub to: usize,
    pub reason: String,
}

/// Shortest path from `from` to `to` of at most `max_len` edges whose
/// interior avoids `avoid`; with `min_len == 2` the direct edge is skipped.
/// Ties go to the lowest-index vertices.
pub(crate) fn shortest_route(
    g: &Graph,
    host: Host<'_>,
    from: usize,
    to: usize,
    max_len: usize,
    min_len: usize,
    avoid: &VertexSet,
) -> Option<Vec<usize>> {
    if from == to || max_len == 0 {
        return None;
    }
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    depth[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        let du = depth[u];
        for v in g.neighbors(u).iter() {
            if !host.allows_edge(u, v) {
                continue;
            }
            if v == to {
                if du + 1 >= min_len && du < max_len {
                    let mut path = vec![to, u];
                    let mut cur = u;
                    while cur != from {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path);
                }
                continue;
            }
            // interior vertices need room for at least one more edge
            if depth[v] != usize::MAX
                || avoid.contains(v)
                || !host.allows_vertex(v)
                || du + 2 > max_len
            {
                continue;
            }
            depth[v] = du + 1;
            parent[v] = u;
            queue.push_back(v);
        }
    }
    None
}

/// Routes each pair in order through vertices not yet used, each path of at
/// most `max_len` edges. Interiors avoid `blocked`, every pair endpoint and
/// all earlier interiors. More than `budget` pairs is refused outright.
pub fn connecting_paths(
    g: &Graph,
    host: Host<'_>,
    pairs: &[(usize, usize)],
    max_len: usize,
    budget: usize,
    blocked: &VertexSet,
) -> Result<PathSystem, RoutingError> {
    if pairs.len() > budget {
        let (from, to) = pairs[budget];
        return Err(RoutingError {
            index: budget,
            from,
            to,
            reason: format!("{} pairs requested, budget is {budget}", pairs.len()),
        });
    }
    let mut used = blocked.clone();
    for &(u, w) in pairs {
        used.insert(u);
        used.insert(w);
    }
    let mut paths = Vec::with_capacity(pairs.len());
    for (index, &(from, to)) in pairs.iter().enumerate() {
        let min_len = if paths.iter().any(|p: &Vec<usize>| {
            p.len() == 2 && ((p[0] == from && p[1] == to) || (p[0] == to && p[1] == from))
        }) {
            2
        } else {
            1
        };
        let path = shortest_route(g, host, from, to, max_len, min_len, &used).ok_or_else(|| {
            RoutingError {
                index,
                from,
                to,
                reason: format!("no free path of length at most {max_len}"),
            }
        })?;
        for &v in &path {
            used.insert(v);
        }
        paths.push(path);
    }
    let mut occupied = VertexSet::empty(g.n());
    for p in &paths {
        for &v in p {
            occupied.insert(v);
        }
    }
    Ok(PathSystem {
        paths,
        used: occupied,
    })
}
