use super::{HamCycle, HamPath, OrderedSequence, SolverConfig, MAX_EXACT_CAP};
use crate::error::{precondition, Result};
use crate::graph::Graph;

/// Reachability table over subsets of the non-start vertices.
///
/// Vertex `order[0]` is the fixed start; bit `i` of a mask stands for
/// `order[i + 1]`. `reach[mask]` holds the possible last vertices of a path
/// that leaves the start and visits exactly `mask`, entering anchors only
/// in their listed order.
struct SubsetDp {
    order: Vec<usize>,
    adj: Vec<u32>,
    reach: Vec<u32>,
}

impl SubsetDp {
    /// `anchors` are the constrained vertices after the start, in order.
    fn run(g: &Graph, start: usize, anchors: &[usize]) -> Self {
        let n = g.n();
        debug_assert!((2..=MAX_EXACT_CAP).contains(&n));
        let mut order = Vec::with_capacity(n);
        order.push(start);
        order.extend((0..n).filter(|&v| v != start));
        let mut local = vec![0usize; n];
        for (i, &v) in order.iter().enumerate().skip(1) {
            local[v] = i - 1;
        }
        let m = n - 1;
        let adj: Vec<u32> = order[1..]
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .filter(|&w| w != start)
                    .fold(0u32, |acc, w| acc | 1 << local[w])
            })
            .collect();
        let from_start = g
            .neighbors(start)
            .iter()
            .fold(0u32, |acc, w| acc | 1 << local[w]);
        let anchor_bits: Vec<u32> = anchors.iter().map(|&a| 1u32 << local[a]).collect();
        let anchor_mask = anchor_bits.iter().fold(0u32, |a, b| a | b);

        let mut reach = vec![0u32; 1usize << m];
        for c in 0..m {
            let bit = 1u32 << c;
            let entering_ok = anchor_mask & bit == 0 || anchor_bits.first() == Some(&bit);
            if from_start & bit != 0 && entering_ok {
                reach[bit as usize] = bit;
            }
        }
        for mask in 1u32..(1u32 << m) {
            if mask.count_ones() < 2 {
                continue;
            }
            let mut out = 0u32;
            let mut rest = mask;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                let prev = mask ^ bit;
                let prev_reach = reach[prev as usize];
                if prev_reach == 0 {
                    continue;
                }
                if bit & anchor_mask != 0 {
                    // an anchor may only be the next one not yet visited
                    let done = (prev & anchor_mask).count_ones() as usize;
                    if anchor_bits.get(done) != Some(&bit) {
                        continue;
                    }
                }
                let c = bit.trailing_zeros() as usize;
                if prev_reach & adj[c] != 0 {
                    out |= bit;
                }
            }
            reach[mask as usize] = out;
        }
        SubsetDp { order, adj, reach }
    }

    fn full(&self) -> u32 {
        let m = self.order.len() - 1;
        if m == 32 {
            u32::MAX
        } else {
            (1u32 << m) - 1
        }
    }

    /// Rebuilds the path ending at local vertex `last` over `mask`.
    fn walk_back(&self, mut mask: u32, mut last: usize) -> Vec<usize> {
        let mut rev = vec![self.order[last + 1]];
        loop {
            let prev = mask ^ (1 << last);
            if prev == 0 {
                break;
            }
            let cand = self.reach[prev as usize] & self.adj[last];
            debug_assert!(cand != 0);
            last = cand.trailing_zeros() as usize;
            mask = prev;
            rev.push(self.order[last + 1]);
        }
        rev.push(self.order[0]);
        rev.reverse();
        rev
    }

    fn local_of(&self, v: usize) -> usize {
        self.order
            .iter()
            .position(|&w| w == v)
            .expect("vertex present")
            - 1
    }
}

fn check_cap(n: usize, cfg: &SolverConfig) -> Result<()> {
    let cap = cfg.exact_cap.min(MAX_EXACT_CAP);
    if n > cap {
        return Err(precondition(format!(
            "n={n} exceeds the exact-solver cap {cap}"
        )));
    }
    Ok(())
}

/// Exact search for a Hamiltonian cycle meeting `seq` in order.
///
/// Returns `Ok(None)` only when no such cycle exists. Graphs above the exact
/// cap are rejected rather than answered heuristically.
pub fn find_s_cycle(
    g: &Graph,
    seq: &OrderedSequence,
    cfg: &SolverConfig,
) -> Result<Option<HamCycle>> {
    let n = g.n();
    if seq.vertices().iter().any(|&v| v >= n) || seq.k() > n {
        return Err(precondition("sequence does not fit the graph"));
    }
    check_cap(n, cfg)?;
    if n < 3 {
        return Ok(None);
    }
    let s = seq.vertices();
    let dp = SubsetDp::run(g, s[0], &s[1..]);
    let full = dp.full();
    let closing = g
        .neighbors(s[0])
        .iter()
        .fold(0u32, |acc, w| acc | 1 << dp.local_of(w));
    let ends = dp.reach[full as usize] & closing;
    if ends == 0 {
        return Ok(None);
    }
    let order = dp.walk_back(full, ends.trailing_zeros() as usize);
    Ok(Some(HamCycle { order }))
}

/// Plain Hamiltonicity through the same DP, with a trivial two-vertex pattern.
pub fn is_hamiltonian(g: &Graph, cfg: &SolverConfig) -> Result<bool> {
    if g.n() < 3 {
        return Ok(false);
    }
    let seq = OrderedSequence::new(g.n(), vec![0, 1])?;
    Ok(find_s_cycle(g, &seq, cfg)?.is_some())
}

/// Exhaustive search for a Hamiltonian path from `x` to `y`.
pub fn exact_hamiltonian_path(
    g: &Graph,
    x: usize,
    y: usize,
    cfg: &SolverConfig,
) -> Result<Option<HamPath>> {
    let n = g.n();
    if x == y {
        return Err(precondition("path endpoints must differ"));
    }
    if x >= n || y >= n {
        return Err(precondition("endpoint out of range"));
    }
    check_cap(n, cfg)?;
    let dp = SubsetDp::run(g, x, &[]);
    let yl = dp.local_of(y);
    let full = dp.full();
    if dp.reach[full as usize] & (1 << yl) == 0 {
        return Ok(None);
    }
    Ok(Some(HamPath {
        order: dp.walk_back(full, yl),
    }))
}
