use std::cmp::Ordering;

use super::{root_cmp, Big, ExtremalParams};
use crate::bitset::VertexSet;
use crate::error::{precondition, Result};
use crate::graph::{Graph, Rational};

/// Which extremal solver applies to a pair of (possibly overlapping) sets of
/// size about `n/2` with few edges between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtremalCase {
    /// `|A ∩ B| ≥ (1 − √β)n/2`: `A ∩ B` is nearly independent, so the split
    /// `(A ∩ B, V ∖ (A ∩ B))` is near-complete bipartite.
    Dense { a: VertexSet, b: VertexSet },
    /// `√β·n/2 ≤ |A ∩ B| < (1 − √β)n/2`; ruled out by the hypotheses.
    Impossible { intersection: usize },
    /// `|A ∩ B| < √β·n/2`: `(A ∖ B, B ∖ A)` is a sparse cut between two
    /// dense clusters.
    Sparse { a: VertexSet, b: VertexSet },
}

/// Requires `(1 − β)n/2 ≤ |A|, |B| ≤ n/2` and `Σ_{a∈A} deg(a, B) < β|A||B|`.
pub fn classify_extremal(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    params: &ExtremalParams,
) -> Result<ExtremalCase> {
    params.validate()?;
    let n = g.n();
    if a.width() != n || b.width() != n {
        return Err(precondition("vertex set width does not match the graph"));
    }
    if a.is_empty() || b.is_empty() {
        return Err(precondition("classification needs nonempty sets"));
    }
    let beta = params.beta;
    let lower = Rational::new(n as i64, 2) * (Rational::from_integer(1) - beta);
    for (name, s) in [("A", a), ("B", b)] {
        let size = Rational::from_integer(s.len() as i64);
        if size < lower || 2 * s.len() > n {
            return Err(precondition(format!(
                "|{name}| = {} outside [(1-β)n/2, n/2]",
                s.len()
            )));
        }
    }
    let pairs = g.pair_count(a, b) as i64;
    if Rational::new(pairs, (a.len() * b.len()) as i64) >= beta {
        return Err(precondition("d(A, B) must be below β"));
    }
    let s = a.intersection_len(b);
    let n2 = n.max(1) as i128;
    let one = Big::from_integer(1);
    // s ≥ (1 − √β)n/2  ⇔  √β ≥ 1 − 2s/n
    if root_cmp(beta, 2, one - Big::new(2 * s as i128, n2)) != Ordering::Less {
        let core = a.intersection(b);
        let rest = core.complement();
        return Ok(ExtremalCase::Dense { a: core, b: rest });
    }
    // s < √β·n/2  ⇔  √β > 2s/n
    if root_cmp(beta, 2, Big::new(2 * s as i128, n2)) == Ordering::Greater {
        return Ok(ExtremalCase::Sparse {
            a: a.difference(b),
            b: b.difference(a),
        });
    }
    Ok(ExtremalCase::Impossible { intersection: s })
}
