use rayon::prelude::*;
use serde::Serialize;

use super::{find_s_cycle, is_hamiltonian, OrderedSequence, SolverConfig};
use crate::error::{precondition, Error, Result};
use crate::graph::Graph;

/// Outcome of a k-orderedness check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KOrdered {
    pub k: usize,
    pub ordered: bool,
    /// The lexicographically first canonical sequence with no S-cycle.
    pub witness: Option<OrderedSequence>,
}

/// Appends every canonical completion of `prefix` (length ≥ 2) to `out`.
///
/// A sequence is canonical under rotation and reversal when its first entry
/// is its minimum and its second entry is smaller than its last.
fn complete_prefix(n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == k {
        out.push(prefix.clone());
        return;
    }
    let last_slot = prefix.len() == k - 1;
    for v in (prefix[0] + 1)..n {
        if prefix.contains(&v) || (last_slot && v < prefix[1]) {
            continue;
        }
        prefix.push(v);
        complete_prefix(n, k, prefix, out);
        prefix.pop();
    }
}

fn canonical_with_prefix(n: usize, k: usize, v1: usize, v2: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut prefix = vec![v1, v2];
    complete_prefix(n, k, &mut prefix, &mut out);
    out
}

/// All canonical representatives of k-sequences over `0..n` under the
/// dihedral action, in lexicographic order. Requires `k ≥ 3`.
pub fn canonical_sequences(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    assert!(k >= 3 && k <= n);
    (0..n).flat_map(move |v1| ((v1 + 1)..n).flat_map(move |v2| canonical_with_prefix(n, k, v1, v2)))
}

/// Decides whether every sequence of `k` distinct vertices admits a
/// Hamiltonian S-cycle.
///
/// Non-Hamiltonian graphs are an error, not a `false`. For `k ≤ 3` the
/// answer is plain Hamiltonicity. Otherwise canonical sequences are checked
/// in parallel batches keyed by their first two entries; the first failing
/// sequence in lexicographic order is returned as the witness.
pub fn is_k_ordered(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<KOrdered> {
    let n = g.n();
    if k < 2 || k > n {
        return Err(precondition(format!("k={k} outside 2..={n}")));
    }
    if !is_hamiltonian(g, cfg)? {
        return Err(Error::NotHamiltonian);
    }
    if k <= 3 {
        return Ok(KOrdered {
            k,
            ordered: true,
            witness: None,
        });
    }
    for v1 in 0..n {
        for v2 in (v1 + 1)..n {
            let batch = canonical_with_prefix(n, k, v1, v2);
            let failing = batch
                .par_iter()
                .map(|s| -> Result<Option<Vec<usize>>> {
                    let seq = OrderedSequence::new(n, s.clone())?;
                    Ok(find_s_cycle(g, &seq, cfg)?.is_none().then(|| s.clone()))
                })
                .find_first(|r| !matches!(r, Ok(None)));
            match failing {
                Some(Err(e)) => return Err(e),
                Some(Ok(Some(w))) => {
                    return Ok(KOrdered {
                        k,
                        ordered: false,
                        witness: Some(OrderedSequence::new(n, w)?),
                    })
                }
                _ => {}
            }
        }
    }
    Ok(KOrdered {
        k,
        ordered: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn falling(n: usize, k: usize) -> usize {
        (n - k + 1..=n).product()
    }

    #[test]
    fn canonical_counts() {
        // n!/(n-k)! sequences, each orbit of size 2k
        for n in 3..8 {
            for k in 3..=n {
                assert_eq!(
                    canonical_sequences(n, k).count() * 2 * k,
                    falling(n, k),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn c6_is_not_4_ordered() {
        let r = is_k_ordered(&Graph::cycle(6), 4, &SolverConfig::default()).unwrap();
        assert!(!r.ordered);
        assert_eq!(r.witness.unwrap().vertices(), &[0, 1, 3, 2]);
    }

    #[test]
    fn complete_graphs_are_fully_ordered() {
        for n in 3..=7 {
            assert!(
                is_k_ordered(&Graph::complete(n), n, &SolverConfig::default())
                    .unwrap()
                    .ordered
            );
        }
    }

    #[test]
    fn non_hamiltonian_is_an_error() {
        assert_eq!(
            is_k_ordered(&Graph::petersen(), 4, &SolverConfig::default()),
            Err(Error::NotHamiltonian)
        );
    }
}
