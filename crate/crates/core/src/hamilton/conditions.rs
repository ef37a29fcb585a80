//! Degree-sequence sufficient conditions.

use crate::bitset::VertexSet;
use crate::error::{precondition, Result};
use crate::graph::Graph;

fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d = g.degree_profile().degrees;
    d.sort_unstable();
    d
}

/// Pósa-type condition for Hamiltonian-connectedness: with degrees sorted
/// `d₁ ≤ … ≤ d_n`, `d_{k−1} > k` for every `2 ≤ k ≤ n/2`.
pub fn posa_condition(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n < 3 {
        return Err(precondition("posa_condition needs n >= 3"));
    }
    let d = sorted_degrees(g);
    Ok((2..=n / 2).all(|k| d[k - 2] > k))
}

/// Bipartite version over the `A`–`B` edges: each side's sorted degrees
/// satisfy `d_{j−1} > j` for every `2 ≤ j ≤ (m+1)/2`, where `m = |A| = |B|`.
pub fn bipartite_posa_condition(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<bool> {
    let m = a.len();
    if m != b.len() {
        return Err(precondition(format!(
            "sides differ in size: {} vs {}",
            m,
            b.len()
        )));
    }
    if m < 2 {
        return Err(precondition(
            "bipartite_posa_condition needs |A| = |B| >= 2",
        ));
    }
    if !a.is_disjoint(b) {
        return Err(precondition("sides must be disjoint"));
    }
    let side_ok = |side: &VertexSet, other: &VertexSet| {
        let mut d: Vec<usize> = side.iter().map(|v| g.degree_into(v, other)).collect();
        d.sort_unstable();
        (2..=m.div_ceil(2)).all(|j| d[j - 2] > j)
    };
    Ok(side_ok(a, b) && side_ok(b, a))
}

/// Ore-type hypothesis for k-orderedness: `deg(u) + deg(v) ≥ n + 2k − 6`
/// for every nonadjacent pair.
pub fn ore_condition(g: &Graph, k: usize) -> Result<bool> {
    if k < 3 {
        return Err(precondition("ore_condition is stated for k >= 3"));
    }
    let n = g.n();
    let need = n + 2 * k;
    for u in 0..n {
        let du = g.degree(u);
        for v in (u + 1)..n {
            if !g.has_edge(u, v) && du + g.degree(v) + 6 < need {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `δ(G) ≥ n/2`.
pub fn dirac_condition(g: &Graph) -> bool {
    2 * g.min_degree() >= g.n()
}
