//! Hamiltonian cycles and paths under vertex-order constraints.
//!
//! [`find_s_cycle`] is an exact subset DP; [`find_hamiltonian_path`] runs
//! rotation-extension first and falls back to the same DP when the graph is
//! small enough for its answer to be authoritative.

mod conditions;
mod dp;
mod ordered;
mod rotation;

use serde::Serialize;

use crate::error::{precondition, Result};
use crate::graph::Graph;

pub use conditions::{bipartite_posa_condition, dirac_condition, ore_condition, posa_condition};
pub use dp::{exact_hamiltonian_path, find_s_cycle, is_hamiltonian};
pub use ordered::{canonical_sequences, is_k_ordered, KOrdered};
pub use rotation::{find_hamiltonian_path, rotation_extension, PathSearch, PathStage};

/// Largest order for which the exact DP runs by default.
pub const DEFAULT_EXACT_CAP: usize = 24;
/// Hard ceiling: the DP keeps one 32-bit row per subset.
pub const MAX_EXACT_CAP: usize = 32;

/// Knobs shared by the exact and heuristic solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Graphs with at most this many vertices are solved exactly.
    pub exact_cap: usize,
    /// Random restarts for rotation-extension.
    pub restarts: usize,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            exact_cap: DEFAULT_EXACT_CAP,
            restarts: 50,
            seed: 0x5eed,
        }
    }
}

/// A sequence `v₁,…,v_k` of distinct vertices, `2 ≤ k ≤ n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct OrderedSequence(Vec<usize>);

impl OrderedSequence {
    pub fn new(n: usize, vertices: Vec<usize>) -> Result<Self> {
        let k = vertices.len();
        if k < 2 || k > n {
            return Err(precondition(format!("sequence length {k} outside 2..={n}")));
        }
        for (i, &v) in vertices.iter().enumerate() {
            if v >= n {
                return Err(precondition(format!("vertex {v} out of range for n={n}")));
            }
            if vertices[..i].contains(&v) {
                return Err(precondition(format!("vertex {v} repeated in sequence")));
            }
        }
        Ok(OrderedSequence(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// Cyclic shift by `by` positions.
    pub fn rotated(&self, by: usize) -> Self {
        let mut v = self.0.clone();
        v.rotate_left(by % self.k());
        OrderedSequence(v)
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        OrderedSequence(v)
    }
}

/// A Hamiltonian cycle read cyclically from `order[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HamCycle {
    pub order: Vec<usize>,
}

/// A path listed from its first endpoint to its last.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HamPath {
    pub order: Vec<usize>,
}

impl HamPath {
    pub fn start(&self) -> usize {
        self.order[0]
    }

    pub fn end(&self) -> usize {
        *self.order.last().expect("non-empty path")
    }

    /// Spans all vertices of `g` with consecutive vertices adjacent.
    pub fn is_hamiltonian_in(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        self.order.len() == g.n()
            && self
                .order
                .iter()
                .all(|&v| v < g.n() && !std::mem::replace(&mut seen[v], true))
            && self.order.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

/// Why a cycle certificate was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "reason")]
pub enum CycleDefect {
    /// Not a permutation of the vertex set.
    MissingVertex {
        vertex: usize,
    },
    NonEdge {
        u: usize,
        v: usize,
    },
    OrderViolated,
}

/// Checks that `cycle` is a Hamiltonian cycle of `g` meeting the vertices of
/// `seq` in order, reading the cycle in either direction from `v₁`.
pub fn verify_s_cycle(
    g: &Graph,
    seq: &OrderedSequence,
    cycle: &HamCycle,
) -> Result<(), CycleDefect> {
    let n = g.n();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in cycle.order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(CycleDefect::MissingVertex { vertex: v });
        }
        pos[v] = i;
    }
    if let Some(v) = (0..n).find(|&v| pos[v] == usize::MAX) {
        return Err(CycleDefect::MissingVertex { vertex: v });
    }
    if n < 3 {
        return Err(CycleDefect::OrderViolated);
    }
    for i in 0..n {
        let (u, v) = (cycle.order[i], cycle.order[(i + 1) % n]);
        if !g.has_edge(u, v) {
            return Err(CycleDefect::NonEdge { u, v });
        }
    }
    let s = seq.vertices();
    if s.iter().any(|&v| v >= n) {
        return Err(CycleDefect::OrderViolated);
    }
    let base = pos[s[0]];
    let forward: Vec<usize> = s.iter().map(|&v| (pos[v] + n - base) % n).collect();
    let backward: Vec<usize> = s.iter().map(|&v| (base + n - pos[v]) % n).collect();
    let increasing = |offsets: &[usize]| offsets.windows(2).all(|w| w[0] < w[1]);
    if increasing(&forward) || increasing(&backward) {
        Ok(())
    } else {
        Err(CycleDefect::OrderViolated)
    }
}
