//! ε-regular and super-regular pair checks.
//!
//! For a fixed `X ⊆ A` and size `t`, `d(X, Y)` over `|Y| = t` is extremal
//! at the `t` vertices of `B` with the most (or fewest) neighbours in `X`.
//! The exact checker therefore enumerates `X` only and reads off both
//! extremes from sorted degree prefix sums; the sampled checker draws `X`
//! at random and uses the same reduction for `Y`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{precondition, Result};
use crate::graph::{Graph, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RegularityMode {
    Exact,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularityConfig {
    /// Largest side size the exact checker accepts.
    pub exact_cap: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for RegularityConfig {
    fn default() -> Self {
        RegularityConfig {
            exact_cap: 14,
            samples: 10_000,
            seed: 0x5eed,
        }
    }
}

/// Subsets whose density strays at least `ε` from `d(A, B)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrregularPair {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub deviation: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityVerdict {
    pub regular: bool,
    pub witness: Option<IrregularPair>,
    pub mode: RegularityMode,
    /// Exact mode was requested but a side exceeded the cap.
    pub downgraded: bool,
    /// For super-regularity: a vertex whose cross degree is too small.
    pub failing_vertex: Option<usize>,
}

struct Pair<'a> {
    g: &'a Graph,
    a: Vec<usize>,
    b: Vec<usize>,
    b_set: VertexSet,
    e_ab: i128,
    eps: Rational,
}

impl Pair<'_> {
    fn size_ok(&self, size: usize, side: usize) -> bool {
        // size > ε·side
        (size as i128) * (*self.eps.denom() as i128) > (*self.eps.numer() as i128) * side as i128
    }

    /// Smallest qualifying size for a side.
    fn min_size(&self, side: usize) -> Option<usize> {
        (1..=side).find(|&s| self.size_ok(s, side))
    }

    /// Checks `X` against the best `Y` of every admissible size.
    fn probe(&self, x: &[usize]) -> Option<IrregularPair> {
        let x_set = VertexSet::from_indices(self.g.n(), x.iter().copied());
        let mut degs: Vec<(usize, usize)> = self
            .b
            .iter()
            .map(|&y| (self.g.degree_into(y, &x_set), y))
            .collect();
        degs.sort_by(|p, q| q.0.cmp(&p.0).then(p.1.cmp(&q.1)));
        let tmin = self.min_size(self.b.len())?;
        let (na, nb) = (self.a.len() as i128, self.b.len() as i128);
        let (p, q) = (*self.eps.numer() as i128, *self.eps.denom() as i128);
        let xs = x.len() as i128;
        let mut top = 0i128;
        let mut bottom = 0i128;
        for t in 1..=self.b.len() {
            top += degs[t - 1].0 as i128;
            bottom += degs[self.b.len() - t].0 as i128;
            if t < tmin {
                continue;
            }
            let denom = xs * t as i128;
            for (sum, from_top) in [(top, true), (bottom, false)] {
                // |sum/(|X|t) − e/(|A||B|)| ≥ ε, cross-multiplied
                let diff = (sum * na * nb - self.e_ab * denom).abs();
                if diff * q >= p * denom * na * nb {
                    let y: Vec<usize> = if from_top {
                        degs[..t].iter().map(|d| d.1).collect()
                    } else {
                        degs[self.b.len() - t..].iter().map(|d| d.1).collect()
                    };
                    let mut y = y;
                    y.sort_unstable();
                    return Some(IrregularPair {
                        x: x.to_vec(),
                        y,
                        deviation: Rational::new(
                            i64::try_from(diff).unwrap_or(i64::MAX),
                            i64::try_from(denom * na * nb).unwrap_or(i64::MAX),
                        ),
                    });
                }
            }
        }
        None
    }
}

fn setup<'a>(g: &'a Graph, a: &VertexSet, b: &VertexSet, eps: Rational) -> Result<Pair<'a>> {
    if a.width() != g.n() || b.width() != g.n() {
        return Err(precondition("vertex set width does not match the graph"));
    }
    if a.is_empty() || b.is_empty() {
        return Err(precondition("regularity needs nonempty sides"));
    }
    if !a.is_disjoint(b) {
        return Err(precondition("regularity needs disjoint sides"));
    }
    if eps <= Rational::from_integer(0) {
        return Err(precondition("epsilon must be positive"));
    }
    Ok(Pair {
        g,
        a: a.to_vec(),
        b: b.to_vec(),
        b_set: b.clone(),
        e_ab: g.pair_count(a, b) as i128,
        eps,
    })
}

/// Decides ε-regularity of `(A, B)`: every `X ⊆ A`, `Y ⊆ B` with
/// `|X| > ε|A|` and `|Y| > ε|B|` has `|d(X,Y) − d(A,B)| < ε`.
///
/// Exact mode above `cfg.exact_cap` downgrades to sampling and says so in
/// the verdict. Sampled verdicts of "irregular" always carry a witness;
/// "regular" from sampling only means none was found.
pub fn is_epsilon_regular(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    eps: Rational,
    mode: RegularityMode,
    cfg: &RegularityConfig,
) -> Result<RegularityVerdict> {
    let pair = setup(g, a, b, eps)?;
    let too_big = pair.a.len() > cfg.exact_cap || pair.b.len() > cfg.exact_cap;
    let downgraded = mode == RegularityMode::Exact && too_big;
    let (witness, mode) = if mode == RegularityMode::Exact && !too_big {
        (exact_search(&pair), RegularityMode::Exact)
    } else {
        (sampled_search(&pair, cfg), RegularityMode::Sampled)
    };
    Ok(RegularityVerdict {
        regular: witness.is_none(),
        witness,
        mode,
        downgraded,
        failing_vertex: None,
    })
}

fn exact_search(pair: &Pair<'_>) -> Option<IrregularPair> {
    let smin = pair.min_size(pair.a.len())?;
    let na = pair.a.len();
    (1u64..(1u64 << na))
        .into_par_iter()
        .filter(|m| m.count_ones() as usize >= smin)
        .find_map_first(|mask| {
            let x: Vec<usize> = (0..na)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pair.a[i])
                .collect();
            pair.probe(&x)
        })
}

fn sampled_search(pair: &Pair<'_>, cfg: &RegularityConfig) -> Option<IrregularPair> {
    let smin = pair.min_size(pair.a.len())?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut pool = pair.a.clone();
    for _ in 0..cfg.samples {
        let size = rng.gen_range(smin..=pair.a.len());
        pool.shuffle(&mut rng);
        let mut x = pool[..size].to_vec();
        x.sort_unstable();
        if let Some(w) = pair.probe(&x) {
            return Some(w);
        }
    }
    None
}

/// `(ε, δ)`-super-regularity: ε-regular, and every vertex of `A` has more
/// than `δ|B|` neighbours in `B` (and symmetrically).
pub fn is_super_regular(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    eps: Rational,
    delta: Rational,
    mode: RegularityMode,
    cfg: &RegularityConfig,
) -> Result<RegularityVerdict> {
    let mut verdict = is_epsilon_regular(g, a, b, eps, mode, cfg)?;
    let pair = setup(g, a, b, eps)?;
    let (p, q) = (*delta.numer() as i128, *delta.denom() as i128);
    let low = |v: usize, other: &VertexSet| {
        (g.degree_into(v, other) as i128) * q <= p * other.len() as i128
    };
    let failing = pair
        .a
        .iter()
        .copied()
        .find(|&v| low(v, &pair.b_set))
        .or_else(|| pair.b.iter().copied().find(|&v| low(v, a)));
    if failing.is_some() {
        verdict.regular = false;
        verdict.failing_vertex = failing;
    }
    Ok(verdict)
}
