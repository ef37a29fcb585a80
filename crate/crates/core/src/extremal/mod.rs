//! Constructive Hamiltonian S-cycles for the two extremal configurations:
//! two dense clusters with a sparse cut, and a near-complete bipartite
//! split. Every returned cycle has passed [`verify_s_cycle`].
//!
//! [`verify_s_cycle`]: crate::hamilton::verify_s_cycle

mod classify;
mod cleanup;
mod dense;
mod paths;
mod sparse;

use std::cmp::Ordering;
use std::fmt;
use std::time::Instant;

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::error::{precondition, Result};
use crate::graph::{Graph, Rational};
use crate::hamilton::{HamCycle, OrderedSequence, SolverConfig};

pub use classify::{classify_extremal, ExtremalCase};
pub use cleanup::{cleanup_dense, cleanup_sparse, ClusterPair};
pub use dense::solve_extremal_dense;
pub use paths::{connecting_paths, Host, PathSystem, RoutingError};
pub use sparse::solve_extremal_sparse;

/// The parameter ladder `0 < κ < ε < d < β < α < 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtremalParams {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub kappa: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub epsilon: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub d: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub beta: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub alpha: Rational,
}

impl Default for ExtremalParams {
    fn default() -> Self {
        ExtremalParams {
            kappa: Rational::new(1, 10_000),
            epsilon: Rational::new(1, 2_000),
            d: Rational::new(1, 500),
            beta: Rational::new(1, 100),
            alpha: Rational::new(1, 10),
        }
    }
}

impl ExtremalParams {
    pub fn new(
        kappa: Rational,
        epsilon: Rational,
        d: Rational,
        beta: Rational,
        alpha: Rational,
    ) -> Result<Self> {
        let p = ExtremalParams {
            kappa,
            epsilon,
            d,
            beta,
            alpha,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let zero = Rational::from_integer(0);
        let one = Rational::from_integer(1);
        let ladder = [
            zero,
            self.kappa,
            self.epsilon,
            self.d,
            self.beta,
            self.alpha,
            one,
        ];
        if ladder.windows(2).all(|w| w[0] < w[1]) {
            Ok(())
        } else {
            Err(precondition(
                "parameters must satisfy 0 < kappa < epsilon < d < beta < alpha < 1",
            ))
        }
    }
}

type Big = Ratio<i128>;

fn big(r: Rational) -> Big {
    Big::new(*r.numer() as i128, *r.denom() as i128)
}

fn frac(num: i128, den: usize) -> Big {
    Big::new(num, den as i128)
}

/// Compares `param^(1/root)` with `value` exactly (`param ≥ 0`).
pub(crate) fn root_cmp(param: Rational, root: u32, value: Big) -> Ordering {
    if value < Big::from_integer(0) {
        return Ordering::Greater;
    }
    big(param).cmp(&num_traits::pow(value, root as usize))
}

/// `value ≥ param^(1/root) · m`.
pub(crate) fn ge_root_times(value: usize, param: Rational, root: u32, m: usize) -> bool {
    if m == 0 {
        return true;
    }
    root_cmp(param, root, frac(value as i128, m)) != Ordering::Greater
}

/// `value < (1 − param^(1/root)) · m`.
pub(crate) fn lt_one_minus_root_times(value: usize, param: Rational, root: u32, m: usize) -> bool {
    if m == 0 {
        return false;
    }
    root_cmp(param, root, Big::from_integer(1) - frac(value as i128, m)) == Ordering::Less
}

/// Pipeline stages named in diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Input,
    Cleanup,
    Bridges,
    Assembly,
    Patching,
    Absorption,
    Balancing,
    Matching,
    SPath,
    Closing,
    Certificate,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = stage_name(self);
        f.write_str(s)
    }
}

fn stage_name(s: &Stage) -> &'static str {
    match s {
        Stage::Input => "input",
        Stage::Cleanup => "cleanup",
        Stage::Bridges => "bridges",
        Stage::Assembly => "assembly",
        Stage::Patching => "patching",
        Stage::Absorption => "absorption",
        Stage::Balancing => "balancing",
        Stage::Matching => "matching",
        Stage::SPath => "s_path",
        Stage::Closing => "closing",
        Stage::Certificate => "certificate",
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageRecord {
    pub stage: Stage,
    /// Wall time in microseconds; cleared by [`SolveTrace::strip_timings`].
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

/// Which textbook hypotheses the input actually met. The pipeline runs
/// regardless; these only describe the regime.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub side_sizes: bool,
    pub density: bool,
    pub min_degree: bool,
    pub k_small: bool,
}

/// Structured record of one solve.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SolveTrace {
    pub case: String,
    pub n: usize,
    pub k: usize,
    pub hypotheses: Hypotheses,
    pub stages: Vec<StageRecord>,
    pub exceptional: usize,
    pub reassigned: usize,
    pub low_degree_vertices: usize,
    pub transitions: usize,
    pub bridge_matching: usize,
    pub bridge_cover: usize,
    pub bridges_used: usize,
    pub imbalance: usize,
    pub balancing_moves: usize,
    pub discrepancy_matching: usize,
    pub parity_vertex: Option<usize>,
    pub absorbed_side: bool,
    pub path_lengths: Vec<usize>,
    pub retries: usize,
    pub certified: bool,
}

impl SolveTrace {
    fn new(case: &str, g: &Graph, seq: &OrderedSequence) -> Self {
        SolveTrace {
            case: case.to_string(),
            n: g.n(),
            k: seq.k(),
            ..SolveTrace::default()
        }
    }

    pub fn strip_timings(&mut self) {
        for s in &mut self.stages {
            s.elapsed_us = None;
        }
    }
}

/// Failure inside a solver stage, with the trace up to that point.
#[derive(Debug, Clone, Error)]
#[error("{stage} stage failed: {detail}")]
pub struct SolveError {
    pub stage: Stage,
    pub detail: String,
    pub trace: Box<SolveTrace>,
}

pub(crate) struct StageClock<'t> {
    trace: &'t mut SolveTrace,
}

impl<'t> StageClock<'t> {
    pub(crate) fn new(trace: &'t mut SolveTrace) -> Self {
        StageClock { trace }
    }

    pub(crate) fn run<T>(
        &mut self,
        stage: Stage,
        f: impl FnOnce(&mut SolveTrace) -> std::result::Result<T, String>,
    ) -> std::result::Result<T, SolveError> {
        let start = Instant::now();
        let out = f(self.trace);
        self.trace.stages.push(StageRecord {
            stage,
            elapsed_us: Some(start.elapsed().as_micros() as u64),
        });
        out.map_err(|detail| SolveError {
            stage,
            detail,
            trace: Box::new(self.trace.clone()),
        })
    }
}

/// A verified cycle plus how it was obtained.
#[derive(Debug, Clone)]
pub struct ExtremalSolution {
    pub cycle: HamCycle,
    pub trace: SolveTrace,
}

/// Classifies `(A, B)` and runs the matching solver. The impossible middle
/// case is reported as an error.
pub fn solve_extremal(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    seq: &OrderedSequence,
    params: &ExtremalParams,
    cfg: &SolverConfig,
) -> std::result::Result<ExtremalSolution, SolveError> {
    let case = classify_extremal(g, a, b, params).map_err(|e| SolveError {
        stage: Stage::Input,
        detail: e.to_string(),
        trace: Box::default(),
    })?;
    match case {
        ExtremalCase::Sparse { a, b } => solve_extremal_sparse(g, &a, &b, seq, params, cfg),
        ExtremalCase::Dense { a, b } => solve_extremal_dense(g, &a, &b, seq, params, cfg),
        ExtremalCase::Impossible { intersection } => Err(SolveError {
            stage: Stage::Input,
            detail: format!(
                "|A ∩ B| = {intersection} falls in the band excluded by the hypotheses"
            ),
            trace: Box::default(),
        }),
    }
}

/// Side label of a vertex under a two-way split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Side {
    A,
    B,
}

pub(crate) fn side_of(v: usize, a: &VertexSet) -> Side {
    if a.contains(v) {
        Side::A
    } else {
        Side::B
    }
}

/// The minimum-degree threshold `⌈n/2⌉ + ⌊k/2⌋ − 1`.
pub(crate) fn hypotheses_for(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    k: usize,
    params: &ExtremalParams,
    dense: bool,
) -> Hypotheses {
    let n = g.n();
    let one = Rational::from_integer(1);
    let half = Rational::new(n as i64, 2) * (one - params.alpha);
    let side_sizes = Rational::from_integer(a.len() as i64) >= half
        && Rational::from_integer(b.len() as i64) >= half;
    let density = match g.density(a, b) {
        Ok(d) if dense => d > one - params.alpha,
        Ok(d) => d < params.alpha,
        Err(_) => false,
    };
    Hypotheses {
        side_sizes,
        density,
        min_degree: g.min_degree() >= crate::constructions::degree_bound(n, k),
        k_small: Rational::from_integer(k as i64)
            <= params.kappa * Rational::from_integer(n as i64),
    }
}

/// Most attempts a patch or closing step makes before giving up.
pub(crate) const MAX_RETRIES: usize = 10;

/// Hamiltonian path of `host|_T` from `x` to `y` in original labels.
pub(crate) fn path_through(
    host: &Graph,
    t: &VertexSet,
    x: usize,
    y: usize,
    cfg: &SolverConfig,
    attempt: usize,
) -> Option<Vec<usize>> {
    if !t.contains(x) || !t.contains(y) || x == y {
        return None;
    }
    if t.len() == 2 {
        return host.has_edge(x, y).then(|| vec![x, y]);
    }
    let (sub, map) = host.induced_subgraph(t).ok()?;
    let local = |v: usize| map.binary_search(&v).ok();
    let cfg = SolverConfig {
        seed: cfg.seed.wrapping_add(attempt as u64),
        ..*cfg
    };
    let found = crate::hamilton::find_hamiltonian_path(&sub, local(x)?, local(y)?, &cfg).ok()?;
    found
        .path
        .map(|p| p.order.into_iter().map(|i| map[i]).collect())
}

/// Positions `p` with `order[p]` and its cyclic successor both in `set`.
pub(crate) fn consecutive_positions(order: &[usize], set: &VertexSet) -> Vec<usize> {
    let len = order.len();
    if len < 2 {
        return Vec::new();
    }
    (0..len)
        .filter(|&p| set.contains(order[p]) && set.contains(order[(p + 1) % len]))
        .collect()
}

/// Occupied vertices of a closed walk, or the first repeated vertex.
pub(crate) fn occupied(order: &[usize], n: usize) -> std::result::Result<VertexSet, String> {
    let mut seen = VertexSet::empty(n);
    for &v in order {
        if seen.contains(v) {
            return Err(format!("vertex {v} appears twice"));
        }
        seen.insert(v);
    }
    Ok(seen)
}

fn stage_error(stage: Stage, detail: impl Into<String>, trace: &SolveTrace) -> SolveError {
    SolveError {
        stage,
        detail: detail.into(),
        trace: Box::new(trace.clone()),
    }
}

/// Structural checks shared by both solvers.
pub(crate) fn check_split(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    seq: &OrderedSequence,
    trace: &SolveTrace,
) -> std::result::Result<(), SolveError> {
    let n = g.n();
    let detail = if a.width() != n || b.width() != n {
        Some("vertex set width does not match the graph")
    } else if a.is_empty() || b.is_empty() {
        Some("both sides must be nonempty")
    } else if !a.is_disjoint(b) {
        Some("sides must be disjoint")
    } else if seq.k() < 2 {
        Some("sequence needs at least two vertices")
    } else if seq.vertices().iter().any(|&v| v >= n) {
        Some("sequence vertex out of range")
    } else {
        None
    };
    match detail {
        Some(d) => Err(stage_error(Stage::Input, d, trace)),
        None => Ok(()),
    }
}

/// Final certificate; the only way a solver hands back a cycle.
pub(crate) fn certify(
    g: &Graph,
    seq: &OrderedSequence,
    order: Vec<usize>,
    mut trace: SolveTrace,
) -> std::result::Result<ExtremalSolution, SolveError> {
    let cycle = HamCycle { order };
    let start = Instant::now();
    let verdict = crate::hamilton::verify_s_cycle(g, seq, &cycle);
    trace.stages.push(StageRecord {
        stage: Stage::Certificate,
        elapsed_us: Some(start.elapsed().as_micros() as u64),
    });
    match verdict {
        Ok(()) => {
            trace.certified = true;
            Ok(ExtremalSolution { cycle, trace })
        }
        Err(defect) => Err(stage_error(
            Stage::Certificate,
            format!("{defect:?}"),
            &trace,
        )),
    }
}
