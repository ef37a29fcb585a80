//! Rotation-extension search for Hamiltonian paths with fixed endpoints.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{exact_hamiltonian_path, HamPath, SolverConfig, MAX_EXACT_CAP};
use crate::bitset::VertexSet;
use crate::error::{precondition, Result};
use crate::graph::Graph;

/// Which stage produced the answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PathStage {
    RotationExtension,
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathSearch {
    pub path: Option<HamPath>,
    /// `None` with `authoritative == false` means "not found", not "absent".
    pub authoritative: bool,
    pub stage: PathStage,
}

/// Finds a Hamiltonian path from `x` to `y`.
///
/// Rotation-extension runs first with `cfg.restarts` seeded restarts. If it
/// fails and `n ≤ cfg.exact_cap`, the subset DP settles the question.
pub fn find_hamiltonian_path(
    g: &Graph,
    x: usize,
    y: usize,
    cfg: &SolverConfig,
) -> Result<PathSearch> {
    if x == y {
        return Err(precondition("path endpoints must differ"));
    }
    if x >= g.n() || y >= g.n() {
        return Err(precondition("endpoint out of range"));
    }
    if let Some(path) = rotation_extension(g, x, y, cfg.restarts, cfg.seed) {
        return Ok(PathSearch {
            path: Some(path),
            authoritative: true,
            stage: PathStage::RotationExtension,
        });
    }
    if g.n() <= cfg.exact_cap.min(MAX_EXACT_CAP) {
        let path = exact_hamiltonian_path(g, x, y, cfg)?;
        return Ok(PathSearch {
            path,
            authoritative: true,
            stage: PathStage::Exact,
        });
    }
    Ok(PathSearch {
        path: None,
        authoritative: false,
        stage: PathStage::RotationExtension,
    })
}

/// Pósa rotation-extension from a fixed start `x`, targeting end `y`.
///
/// Works in `G − y`: grows a path from `x`, extending at the free end when
/// possible and otherwise rotating on an edge from the end back into the
/// path. Succeeds once the path spans `G − y` and its end is adjacent to `y`.
pub fn rotation_extension(
    g: &Graph,
    x: usize,
    y: usize,
    restarts: usize,
    seed: u64,
) -> Option<HamPath> {
    let n = g.n();
    if n == 2 {
        return g.has_edge(x, y).then(|| HamPath { order: vec![x, y] });
    }
    let target_nbrs = g.neighbors(y);
    if target_nbrs.is_empty() || g.neighbors(x).is_empty() {
        return None;
    }
    let budget = 20 * n * n + 200;
    for attempt in 0..restarts.max(1) {
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ (attempt as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let mut path = vec![x];
        let mut on_path = VertexSet::empty(n);
        on_path.insert(x);
        on_path.insert(y);
        let mut free = VertexSet::full(n);
        free.remove(x);
        free.remove(y);
        let mut steps = 0;
        while steps < budget {
            steps += 1;
            let end = *path.last().expect("path starts at x");
            let ext = g.neighbors(end).intersection(&free);
            if !ext.is_empty() {
                // fewest free neighbours first, ties broken at random
                let opts = ext.to_vec();
                let best = opts
                    .iter()
                    .map(|&v| g.degree_into(v, &free))
                    .min()
                    .unwrap_or(0);
                let ties: Vec<usize> = opts
                    .into_iter()
                    .filter(|&v| g.degree_into(v, &free) == best)
                    .collect();
                let v = *ties.choose(&mut rng).expect("non-empty");
                path.push(v);
                on_path.insert(v);
                free.remove(v);
                continue;
            }
            let spanning = free.is_empty();
            if spanning && target_nbrs.contains(end) {
                path.push(y);
                return Some(HamPath { order: path });
            }
            // rotation pivots: path[i] adjacent to end, new end path[i + 1]
            let len = path.len();
            if len < 3 {
                break;
            }
            let pivots: Vec<usize> = (0..len - 2).filter(|&i| g.has_edge(end, path[i])).collect();
            if pivots.is_empty() {
                break;
            }
            let good: Vec<usize> = pivots
                .iter()
                .copied()
                .filter(|&i| {
                    let e = path[i + 1];
                    if spanning {
                        target_nbrs.contains(e)
                    } else {
                        g.degree_into(e, &free) > 0
                    }
                })
                .collect();
            let i = if !good.is_empty() {
                good[rng.gen_range(0..good.len())]
            } else {
                pivots[rng.gen_range(0..pivots.len())]
            };
            path[i + 1..].reverse();
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_all_pairs() {
        let k6 = Graph::complete(6);
        let cfg = SolverConfig::default();
        for x in 0..6 {
            for y in 0..6 {
                if x == y {
                    continue;
                }
                let r = find_hamiltonian_path(&k6, x, y, &cfg).unwrap();
                let p = r.path.unwrap();
                assert!(p.is_hamiltonian_in(&k6));
                assert_eq!((p.start(), p.end()), (x, y));
                assert_eq!(r.stage, PathStage::RotationExtension);
            }
        }
    }

    #[test]
    fn path_graph_endpoints() {
        let p4 = Graph::path(4);
        let cfg = SolverConfig::default();
        let r = find_hamiltonian_path(&p4, 0, 3, &cfg).unwrap();
        assert_eq!(r.path.unwrap().order, vec![0, 1, 2, 3]);
        let r = find_hamiltonian_path(&p4, 1, 2, &cfg).unwrap();
        assert_eq!(r.path, None);
        assert!(r.authoritative);
        assert_eq!(r.stage, PathStage::Exact);
        assert!(find_hamiltonian_path(&p4, 2, 2, &cfg).is_err());
    }

    #[test]
    fn large_sparse_failure_is_inconclusive() {
        let g = Graph::path(40);
        let r = find_hamiltonian_path(&g, 3, 7, &SolverConfig::default()).unwrap();
        assert_eq!(r.path, None);
        assert!(!r.authoritative);
    }

    #[test]
    fn dense_large_graph() {
        let g = Graph::complete_bipartite(30, 30);
        let r = find_hamiltonian_path(&g, 0, 45, &SolverConfig::default()).unwrap();
        let p = r.path.unwrap();
        assert!(p.is_hamiltonian_in(&g));
        assert_eq!((p.start(), p.end()), (0, 45));
    }
}
