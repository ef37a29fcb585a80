//! Brute-force reference answers. Everything here reads only adjacency
//! through `Graph::has_edge`, so it shares no search code with the library.

use kordered::{Graph, GraphBuilder};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// G(n, p) with a caller-owned RNG.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v);
            }
        }
    }
    b.build()
}

/// Does `s` occur in order along `cycle`, read forwards or backwards from
/// `s[0]`?
pub fn respects_order(cycle: &[usize], s: &[usize]) -> bool {
    let n = cycle.len();
    let Some(base) = cycle.iter().position(|&v| v == s[0]) else {
        return false;
    };
    let fwd: Vec<usize> = (0..n).map(|i| cycle[(base + i) % n]).collect();
    let bwd: Vec<usize> = (0..n).map(|i| cycle[(base + n - i) % n]).collect();
    [fwd, bwd].iter().any(|walk| {
        let mut j = 0;
        for &v in walk {
            if j < s.len() && v == s[j] {
                j += 1;
            }
        }
        j == s.len()
    })
}

/// Calls `f` on every Hamiltonian cycle through vertex 0 (each cycle once per
/// direction). Stops early when `f` returns true; reports whether it did.
pub fn any_hamiltonian_cycle(g: &Graph, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let mut path = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    fn go(
        g: &Graph,
        path: &mut Vec<usize>,
        seen: &mut [bool],
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let n = g.n();
        let last = *path.last().unwrap();
        if path.len() == n {
            return g.has_edge(last, 0) && f(path);
        }
        for v in 0..n {
            if !seen[v] && g.has_edge(last, v) {
                seen[v] = true;
                path.push(v);
                if go(g, path, seen, f) {
                    return true;
                }
                path.pop();
                seen[v] = false;
            }
        }
        false
    }
    go(g, &mut path, &mut seen, &mut f)
}

pub fn s_cycle_exists(g: &Graph, s: &[usize]) -> bool {
    any_hamiltonian_cycle(g, |c| respects_order(c, s))
}

pub fn is_hamiltonian(g: &Graph) -> bool {
    any_hamiltonian_cycle(g, |_| true)
}

/// Every Hamiltonian cycle through 0, as vertex orders.
pub fn all_hamiltonian_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    any_hamiltonian_cycle(g, |c| {
        out.push(c.to_vec());
        false
    });
    out
}

/// Hamiltonian path from `x` to `y` by depth-first search.
pub fn hamiltonian_path_exists(g: &Graph, x: usize, y: usize) -> bool {
    let n = g.n();
    if x == y {
        return false;
    }
    let mut seen = vec![false; n];
    seen[x] = true;
    fn go(g: &Graph, at: usize, y: usize, count: usize, seen: &mut [bool]) -> bool {
        let n = g.n();
        if count == n {
            return at == y;
        }
        if at == y {
            return false;
        }
        for v in 0..n {
            if !seen[v] && g.has_edge(at, v) {
                seen[v] = true;
                if go(g, v, y, count + 1, seen) {
                    return true;
                }
                seen[v] = false;
            }
        }
        false
    }
    go(g, x, y, 1, &mut seen)
}

/// All sequences of `k` distinct vertices, in lexicographic order.
pub fn all_sequences(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !cur.contains(&v) {
                cur.push(v);
                go(n, k, cur, out);
                cur.pop();
            }
        }
    }
    go(n, k, &mut cur, &mut out);
    out
}

/// Hamiltonian and every `k`-sequence has an S-cycle.
pub fn k_ordered(g: &Graph, k: usize) -> bool {
    let cycles = all_hamiltonian_cycles(g);
    !cycles.is_empty()
        && all_sequences(g.n(), k)
            .iter()
            .all(|s| cycles.iter().any(|c| respects_order(c, s)))
}

/// Matching number by branching on the lowest unmatched vertex.
pub fn matching_number(g: &Graph) -> usize {
    fn go(g: &Graph, used: &mut [bool], from: usize) -> usize {
        let n = g.n();
        let Some(v) = (from..n).find(|&v| !used[v]) else {
            return 0;
        };
        used[v] = true;
        let mut best = go(g, used, v + 1);
        for u in v + 1..n {
            if !used[u] && g.has_edge(v, u) {
                used[u] = true;
                best = best.max(1 + go(g, used, v + 1));
                used[u] = false;
            }
        }
        used[v] = false;
        best
    }
    go(g, &mut vec![false; g.n()], 0)
}

/// `e(A, B)` by a double loop.
pub fn edges_between(g: &Graph, a: &[usize], b: &[usize]) -> usize {
    a.iter()
        .map(|&x| b.iter().filter(|&&y| g.has_edge(x, y)).count())
        .sum()
}

/// ε-regularity straight from the definition, with `ε = p/q`: every
/// `X ⊆ A`, `Y ⊆ B` with `|X| > ε|A|`, `|Y| > ε|B|` has
/// `|d(X,Y) − d(A,B)| < ε`.
pub fn epsilon_regular(g: &Graph, a: &[usize], b: &[usize], p: i64, q: i64) -> bool {
    let (na, nb) = (a.len() as i64, b.len() as i64);
    let rows: Vec<u32> = a
        .iter()
        .map(|&x| {
            (0..b.len())
                .filter(|&j| g.has_edge(x, b[j]))
                .fold(0, |m, j| m | 1 << j)
        })
        .collect();
    let e_ab: i64 = rows.iter().map(|r| r.count_ones() as i64).sum();
    for xm in 1u32..(1 << a.len()) {
        let xs = xm.count_ones() as i64;
        if xs * q <= p * na {
            continue;
        }
        for ym in 1u32..(1 << b.len()) {
            let ys = ym.count_ones() as i64;
            if ys * q <= p * nb {
                continue;
            }
            let e_xy: i64 = (0..a.len())
                .filter(|i| xm >> i & 1 == 1)
                .map(|i| (rows[i] & ym).count_ones() as i64)
                .sum();
            let denom = xs * ys;
            // |e_xy/denom − e_ab/(na nb)| ≥ p/q
            let diff = (e_xy * na * nb - e_ab * denom).abs();
            if diff * q >= p * denom * na * nb {
                return false;
            }
        }
    }
    true
}
