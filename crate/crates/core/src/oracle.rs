//! Naive reference implementations for cross-checking the engine.
//!
//! Everything here works on bitmasks over the dense vertex order and shares no
//! code with the LP engine, the reductions or the solvers; only `Graph` is common.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_n_vc: usize,
    pub max_n_lp: usize,
    pub max_n_surplus: usize,
    pub max_n_oct_svd: usize,
    pub max_n_konig: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_n_vc: 20,
            max_n_lp: 12,
            max_n_surplus: 16,
            max_n_oct_svd: 14,
            max_n_konig: 12,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{op}: graph has {n} vertices, oracle limit is {limit}")]
pub struct OracleError {
    pub op: &'static str,
    pub n: usize,
    pub limit: usize,
}

/// Result of exhaustive half-integral LP enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LpOracle {
    /// Optimum in half-units.
    pub value: u64,
    /// All-1/2 is optimal and no other half-integral assignment attains the optimum.
    pub all_half_unique: bool,
}

/// Dense bitmask view of a graph.
struct Bits {
    verts: Vec<VertexId>,
    nbr: Vec<u64>,
    edges: Vec<u64>,
}

impl Bits {
    fn new(g: &Graph) -> Bits {
        let verts = g.vertex_list();
        let pos = |v: VertexId| verts.binary_search(&v).unwrap();
        let mut nbr = vec![0u64; verts.len()];
        let mut edges = Vec::new();
        for (u, v) in g.edges() {
            let (a, b) = (pos(u), pos(v));
            nbr[a] |= 1 << b;
            nbr[b] |= 1 << a;
            edges.push((1u64 << a) | (1u64 << b));
        }
        Bits { verts, nbr, edges }
    }

    fn n(&self) -> usize {
        self.verts.len()
    }

    fn to_set(&self, mask: u64) -> Vec<VertexId> {
        (0..self.n())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.verts[i])
            .collect()
    }

    fn mask_of(&self, set: &[VertexId]) -> u64 {
        set.iter()
            .map(|v| 1u64 << self.verts.binary_search(v).unwrap())
            .fold(0, |a, b| a | b)
    }

    fn is_cover(&self, mask: u64) -> bool {
        self.edges.iter().all(|&e| e & mask != 0)
    }

    fn is_independent(&self, mask: u64) -> bool {
        self.edges.iter().all(|&e| e & mask != e)
    }

    fn neighborhood(&self, mask: u64) -> u64 {
        (0..self.n())
            .filter(|&i| mask >> i & 1 == 1)
            .fold(0, |acc, i| acc | self.nbr[i])
            & !mask
    }

    fn bipartite(&self, alive: u64) -> bool {
        let mut color = vec![u8::MAX; self.n()];
        for s in 0..self.n() {
            if alive >> s & 1 == 0 || color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in 0..self.n() {
                    if self.nbr[u] >> w & 1 == 1 && alive >> w & 1 == 1 {
                        if color[w] == u8::MAX {
                            color[w] = 1 - color[u];
                            stack.push(w);
                        } else if color[w] == color[u] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Split test by the degree-sequence characterisation.
    fn split(&self, alive: u64) -> bool {
        let mut deg: Vec<usize> = (0..self.n())
            .filter(|&i| alive >> i & 1 == 1)
            .map(|i| (self.nbr[i] & alive).count_ones() as usize)
            .collect();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        let m = (0..deg.len())
            .rfind(|&i| deg[i] >= i)
            .map_or(0, |i| i + 1);
        let head: usize = deg[..m].iter().sum();
        let tail: usize = deg[m..].iter().sum();
        head == m * m.saturating_sub(1) + tail
    }
}

fn check(op: &'static str, g: &Graph, limit: usize) -> Result<(), OracleError> {
    let n = g.vertex_count();
    if n > limit || n > 63 {
        Err(OracleError { op, n, limit })
    } else {
        Ok(())
    }
}

/// Calls `f` on every `size`-subset in lexicographic order of sorted index lists;
/// stops at the first `true`.
fn first_subset(n: usize, size: usize, f: &mut dyn FnMut(u64) -> bool) -> Option<u64> {
    fn rec(
        start: usize,
        n: usize,
        left: usize,
        mask: u64,
        f: &mut dyn FnMut(u64) -> bool,
    ) -> Option<u64> {
        if left == 0 {
            return f(mask).then_some(mask);
        }
        for i in start..=n - left {
            if let Some(m) = rec(i + 1, n, left - 1, mask | 1 << i, f) {
                return Some(m);
            }
        }
        None
    }
    if size > n {
        return None;
    }
    rec(0, n, size, 0, f)
}

fn smallest_subset(n: usize, f: &mut dyn FnMut(u64) -> bool) -> u64 {
    (0..=n)
        .find_map(|s| first_subset(n, s, f))
        .expect("the full set qualifies")
}

/// Minimum vertex cover; the witness is lexicographically least among minimum covers.
pub fn bf_min_vc(g: &Graph) -> Result<(usize, Vec<VertexId>), OracleError> {
    bf_min_vc_with(g, &OracleLimits::default())
}

pub fn bf_min_vc_with(
    g: &Graph,
    limits: &OracleLimits,
) -> Result<(usize, Vec<VertexId>), OracleError> {
    check("bf_min_vc", g, limits.max_n_vc)?;
    let b = Bits::new(g);
    let mask = smallest_subset(b.n(), &mut |m| b.is_cover(m));
    Ok((mask.count_ones() as usize, b.to_set(mask)))
}

/// Exhaustive search over all `3^n` half-integral assignments.
pub fn bf_lp(g: &Graph) -> Result<LpOracle, OracleError> {
    check("bf_lp", g, OracleLimits::default().max_n_lp)?;
    let b = Bits::new(g);
    let n = b.n();
    let mut x = vec![0u8; n];
    let mut best = u64::MAX;
    let mut best_count = 0usize;
    let mut best_is_half = false;

    fn rec(
        i: usize,
        sum: u64,
        x: &mut [u8],
        b: &Bits,
        best: &mut u64,
        count: &mut usize,
        half: &mut bool,
    ) {
        if i == x.len() {
            if sum < *best {
                *best = sum;
                *count = 1;
                *half = x.iter().all(|&v| v == 1);
            } else if sum == *best {
                *count += 1;
                *half = *half || x.iter().all(|&v| v == 1);
            }
            return;
        }
        for val in 0..=2u8 {
            let ok = (0..i).all(|j| b.nbr[i] >> j & 1 == 0 || x[j] + val >= 2);
            if ok {
                x[i] = val;
                rec(i + 1, sum + val as u64, x, b, best, count, half);
            }
        }
    }
    rec(
        0,
        0,
        &mut x,
        &b,
        &mut best,
        &mut best_count,
        &mut best_is_half,
    );
    Ok(LpOracle {
        value: best,
        all_half_unique: best_is_half && best_count == 1,
    })
}

fn min_surplus_over(b: &Bits, required: u64) -> Option<(i64, u64)> {
    let n = b.n();
    let mut best: Option<(i64, Vec<usize>, u64)> = None;
    for mask in 1u64..(1u64 << n) {
        if mask & required != required || !b.is_independent(mask) {
            continue;
        }
        let s = b.neighborhood(mask).count_ones() as i64 - mask.count_ones() as i64;
        let list: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let better = match &best {
            None => true,
            Some((bs, bl, _)) => s < *bs || (s == *bs && list < *bl),
        };
        if better {
            best = Some((s, list, mask));
        }
    }
    best.map(|(s, _, m)| (s, m))
}

/// Minimum surplus over non-empty independent sets, with the lexicographically least witness.
pub fn bf_min_surplus(g: &Graph) -> Result<Option<(i64, Vec<VertexId>)>, OracleError> {
    check("bf_min_surplus", g, OracleLimits::default().max_n_surplus)?;
    let b = Bits::new(g);
    Ok(min_surplus_over(&b, 0).map(|(s, m)| (s, b.to_set(m))))
}

/// As [`bf_min_surplus`] but restricted to sets containing `seed`. `None` if `seed` is not independent.
pub fn bf_min_surplus_containing(
    g: &Graph,
    seed: &[VertexId],
) -> Result<Option<(i64, Vec<VertexId>)>, OracleError> {
    check("bf_min_surplus", g, OracleLimits::default().max_n_surplus)?;
    let b = Bits::new(g);
    let req = b.mask_of(seed);
    if !b.is_independent(req) {
        return Ok(None);
    }
    Ok(min_surplus_over(&b, req).map(|(s, m)| (s, b.to_set(m))))
}

/// Minimum odd cycle transversal, with a lexicographically least witness.
pub fn bf_min_oct(g: &Graph) -> Result<(usize, Vec<VertexId>), OracleError> {
    check("bf_min_oct", g, OracleLimits::default().max_n_oct_svd)?;
    let b = Bits::new(g);
    let full = if b.n() == 0 {
        0
    } else {
        u64::MAX >> (64 - b.n())
    };
    let mask = smallest_subset(b.n(), &mut |m| b.bipartite(full & !m));
    Ok((mask.count_ones() as usize, b.to_set(mask)))
}

/// Minimum split vertex deletion, with a lexicographically least witness.
pub fn bf_min_svd(g: &Graph) -> Result<(usize, Vec<VertexId>), OracleError> {
    check("bf_min_svd", g, OracleLimits::default().max_n_oct_svd)?;
    let b = Bits::new(g);
    let full = if b.n() == 0 {
        0
    } else {
        u64::MAX >> (64 - b.n())
    };
    let mask = smallest_subset(b.n(), &mut |m| b.split(full & !m));
    Ok((mask.count_ones() as usize, b.to_set(mask)))
}

/// Whether `G` with vertex set `set` removed is split.
pub fn bf_is_split_after(g: &Graph, set: &[VertexId]) -> bool {
    let b = Bits::new(g);
    let full = if b.n() == 0 {
        0
    } else {
        u64::MAX >> (64 - b.n())
    };
    b.split(full & !b.mask_of(set))
}

/// Maximum matching size by memoised exhaustive recursion.
pub fn bf_max_matching(g: &Graph) -> Result<usize, OracleError> {
    check("bf_max_matching", g, OracleLimits::default().max_n_vc)?;
    let b = Bits::new(g);
    let full = if b.n() == 0 {
        0
    } else {
        u64::MAX >> (64 - b.n())
    };
    fn rec(alive: u64, b: &Bits, memo: &mut HashMap<u64, usize>) -> usize {
        if alive == 0 {
            return 0;
        }
        if let Some(&r) = memo.get(&alive) {
            return r;
        }
        let u = alive.trailing_zeros() as usize;
        let rest = alive & !(1 << u);
        let mut best = rec(rest, b, memo);
        let mut cand = b.nbr[u] & rest;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            best = best.max(1 + rec(rest & !(1 << w), b, memo));
        }
        memo.insert(alive, best);
        best
    }
    Ok(rec(full, &b, &mut HashMap::new()))
}

/// König–Egerváry test: minimum vertex cover size equals maximum matching size.
pub fn bf_is_konig(g: &Graph) -> Result<bool, OracleError> {
    check("bf_is_konig", g, OracleLimits::default().max_n_konig)?;
    Ok(bf_min_vc(g)?.0 == bf_max_matching(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn vc_values() {
        assert_eq!(bf_min_vc(&fixtures::cycle(5)).unwrap().0, 3);
        assert_eq!(bf_min_vc(&fixtures::complete(2)).unwrap().0, 1);
        assert_eq!(bf_min_vc(&fixtures::petersen()).unwrap().0, 6);
        let (_, w) = bf_min_vc(&fixtures::path(3)).unwrap();
        assert_eq!(w, vec![VertexId(1)]);
        let (_, w) = bf_min_vc(&fixtures::cycle(4)).unwrap();
        assert_eq!(w, vec![VertexId(0), VertexId(2)]);
        assert!(bf_min_vc(&Graph::with_vertices(21)).is_err());
    }

    #[test]
    fn lp_values() {
        assert_eq!(
            bf_lp(&fixtures::cycle(5)).unwrap(),
            LpOracle {
                value: 5,
                all_half_unique: true
            }
        );
        assert_eq!(
            bf_lp(&fixtures::cycle(4)).unwrap(),
            LpOracle {
                value: 4,
                all_half_unique: false
            }
        );
        assert_eq!(bf_lp(&fixtures::complete(2)).unwrap().value, 2);
        assert_eq!(bf_lp(&fixtures::petersen()).unwrap().value, 10);
    }

    #[test]
    fn surplus_values() {
        assert_eq!(bf_min_surplus(&fixtures::cycle(5)).unwrap().unwrap().0, 1);
        let (s, w) = bf_min_surplus(&fixtures::cycle(4)).unwrap().unwrap();
        assert_eq!((s, w), (0, vec![VertexId(0), VertexId(2)]));
        assert_eq!(
            bf_min_surplus(&fixtures::complete(4)).unwrap().unwrap().0,
            2
        );
        assert_eq!(bf_min_surplus(&Graph::new()).unwrap(), None);
    }

    #[test]
    fn transversal_values() {
        assert_eq!(bf_min_oct(&fixtures::cycle(5)).unwrap().0, 1);
        assert_eq!(bf_min_oct(&fixtures::petersen()).unwrap().0, 3);
        assert_eq!(bf_min_svd(&fixtures::cycle(4)).unwrap().0, 1);
        assert_eq!(bf_min_svd(&fixtures::cycle(5)).unwrap().0, 1);
        assert_eq!(bf_min_svd(&fixtures::complete(5)).unwrap().0, 0);
    }

    #[test]
    fn konig_values() {
        let mut tri = fixtures::complete(3);
        let p = tri.add_vertex(4);
        tri.add_edge(VertexId(0), p).unwrap();
        assert!(bf_is_konig(&tri).unwrap());
        assert!(!bf_is_konig(&fixtures::cycle(5)).unwrap());
        assert!(bf_is_konig(&fixtures::cube()).unwrap());
        assert_eq!(bf_max_matching(&fixtures::petersen()).unwrap(), 5);
    }
}
