//! Half-integral LP relaxation of vertex cover.
//!
//! `LPVC(G)`: minimise `sum x(v)` subject to `x(u) + x(v) >= 1` on every edge.
//! An optimal half-integral solution is read off a minimum vertex cover of the
//! bipartite double cover: `x(v) = |C ∩ {v_L, v_R}| / 2`. All values are kept in
//! integer half-units.
//!
//! Constrained queries are answered on induced subgraphs: forcing a set to 1
//! deletes it and charges one unit per vertex; forcing a vertex to 0 deletes its
//! closed neighbourhood and charges its neighbours.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId};
use crate::matching::{hopcroft_karp, konig_cover};

/// A non-negative quantity counted in halves (`HalfUnits(5)` is 5/2).
#[derive(
    Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize,
)]
pub struct HalfUnits(pub u64);

impl HalfUnits {
    pub fn halves(self) -> u64 {
        self.0
    }

    /// Smallest integer not below the value.
    pub fn ceil_whole(self) -> u64 {
        self.0.div_ceil(2)
    }
}

impl fmt::Display for HalfUnits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.0 / 2, if self.0.is_multiple_of(2) { 0 } else { 5 })
    }
}

/// Renders a signed half-unit count as a decimal with a `.0` or `.5` suffix.
pub fn format_signed_halves(h: i64) -> String {
    let sign = if h < 0 { "-" } else { "" };
    let a = h.unsigned_abs();
    format!("{sign}{}", HalfUnits(a))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LpError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("seed set is not independent")]
    SeedNotIndependent,
    #[error("seed set must have one or two vertices, got {0}")]
    SeedSize(usize),
    #[error("surplus of the empty graph is undefined")]
    EmptyGraph,
}

/// `x: V -> {0, 1/2, 1}` stored as `{0, 1, 2}` half-units, sorted by vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfIntegralSolution {
    pub assignment: Vec<(VertexId, u8)>,
    pub value: HalfUnits,
}

impl HalfIntegralSolution {
    pub fn get(&self, v: VertexId) -> Option<u8> {
        self.assignment
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| self.assignment[i].1)
    }

    fn class(&self, halves: u8) -> Vec<VertexId> {
        self.assignment
            .iter()
            .filter(|&&(_, x)| x == halves)
            .map(|&(v, _)| v)
            .collect()
    }

    pub fn zeros(&self) -> Vec<VertexId> {
        self.class(0)
    }

    pub fn halves(&self) -> Vec<VertexId> {
        self.class(1)
    }

    pub fn ones(&self) -> Vec<VertexId> {
        self.class(2)
    }

    pub fn is_feasible(&self, g: &Graph) -> bool {
        g.edges().all(|(u, v)| match (self.get(u), self.get(v)) {
            (Some(a), Some(b)) => a + b >= 2,
            _ => false,
        })
    }
}

/// Partition `(V0, V1, V1/2)` whose half part has all-1/2 as its unique LP optimum.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NtDecomposition {
    pub zeros: Vec<VertexId>,
    pub ones: Vec<VertexId>,
    pub halves: Vec<VertexId>,
}

impl NtDecomposition {
    pub fn is_trivial(&self) -> bool {
        self.zeros.is_empty() && self.ones.is_empty()
    }
}

/// An independent set together with its surplus `|N(X)| - |X|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurplusCertificate {
    pub witness: Vec<VertexId>,
    pub surplus: i64,
}

/// Membership mask over identifiers; `true` marks vertices of the working subgraph.
pub(crate) type Mask = Vec<bool>;

pub(crate) fn full_mask(g: &Graph) -> Mask {
    let mut m = vec![false; g.id_bound()];
    for v in g.vertices() {
        m[v.index()] = true;
    }
    m
}

/// Optimal half-integral solution of `LPVC(G[mask])`.
pub(crate) fn lp_on(g: &Graph, mask: &[bool]) -> HalfIntegralSolution {
    const NONE: usize = usize::MAX;
    let verts: Vec<VertexId> = g.vertices().filter(|v| mask[v.index()]).collect();
    let mut local = vec![NONE; g.id_bound()];
    for (i, v) in verts.iter().enumerate() {
        local[v.index()] = i;
    }
    let adj: Vec<Vec<usize>> = verts
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .map(|w| local[w.index()])
                .filter(|&j| j != NONE)
                .collect()
        })
        .collect();
    let m = hopcroft_karp(&adj, verts.len());
    let (cl, cr) = konig_cover(&adj, verts.len(), &m);
    let assignment: Vec<(VertexId, u8)> = verts
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, cl[i] as u8 + cr[i] as u8))
        .collect();
    debug_assert_eq!(
        assignment.iter().map(|&(_, x)| x as usize).sum::<usize>(),
        m.size
    );
    let value = HalfUnits(m.size as u64);
    HalfIntegralSolution { assignment, value }
}

/// LP value of `G[mask]` in half-units.
pub(crate) fn lp_value_on(g: &Graph, mask: &[bool]) -> u64 {
    lp_on(g, mask).value.0
}

/// Optimal half-integral solution of `LPVC(G)`.
pub fn solve_lp(g: &Graph) -> HalfIntegralSolution {
    lp_on(g, &full_mask(g))
}

/// Extremal decomposition of `G[mask]`.
pub(crate) fn extremal_on(g: &Graph, mask: &[bool]) -> NtDecomposition {
    let sol = lp_on(g, mask);
    let mut zeros = sol.zeros();
    let mut ones = sol.ones();
    let mut h: Mask = vec![false; g.id_bound()];
    for v in sol.halves() {
        h[v.index()] = true;
    }
    let mut h_size = sol.halves().len() as u64;

    'outer: loop {
        let members: Vec<VertexId> = g.vertices().filter(|v| h[v.index()]).collect();
        for &v in &members {
            let nbrs: Vec<VertexId> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|w| h[w.index()])
                .collect();
            let mut rest = h.clone();
            rest[v.index()] = false;
            for w in &nbrs {
                rest[w.index()] = false;
            }
            let sub = lp_on(g, &rest);
            if 2 * nbrs.len() as u64 + sub.value.0 == h_size {
                // an optimum of G[h] sets v to 0: fold it out
                let mut new_zeros = vec![v];
                new_zeros.extend(sub.zeros());
                let mut new_ones = nbrs;
                new_ones.extend(sub.ones());
                for x in new_zeros.iter().chain(new_ones.iter()) {
                    h[x.index()] = false;
                }
                h_size -= (new_zeros.len() + new_ones.len()) as u64;
                zeros.extend(new_zeros);
                ones.extend(new_ones);
                continue 'outer;
            }
        }
        break;
    }
    zeros.sort_unstable();
    ones.sort_unstable();
    let halves = g.vertices().filter(|v| h[v.index()]).collect();
    NtDecomposition {
        zeros,
        ones,
        halves,
    }
}

pub fn extremal_decomposition(g: &Graph) -> NtDecomposition {
    extremal_on(g, &full_mask(g))
}

/// `2|F| + LP(G \ F)`: the LP optimum with every vertex of `F` forced to 1.
pub fn lp_value_forced_ones(g: &Graph, forced: &[VertexId]) -> Result<HalfUnits, LpError> {
    let mut mask = full_mask(g);
    let mut count = 0u64;
    for &v in forced {
        if !g.contains(v) {
            return Err(GraphError::UnknownVertex(v).into());
        }
        if mask[v.index()] {
            mask[v.index()] = false;
            count += 1;
        }
    }
    Ok(HalfUnits(2 * count + lp_value_on(g, &mask)))
}

/// LP optimum with `u` forced to 0, plus the independent set of zeros it induces.
pub fn lp_value_forced_zero(g: &Graph, u: VertexId) -> Result<(HalfUnits, Vec<VertexId>), LpError> {
    if !g.contains(u) {
        return Err(GraphError::UnknownVertex(u).into());
    }
    let cert = forced_zero_on(g, &full_mask(g), &[u]);
    Ok((HalfUnits(cert.0), cert.1))
}

/// Forces `seed` to 0 inside `G[mask]`; returns (LP value, seed ∪ zeros of the remainder).
pub(crate) fn forced_zero_on(g: &Graph, mask: &[bool], seed: &[VertexId]) -> (u64, Vec<VertexId>) {
    let mut rest = mask.to_vec();
    let mut charged = 0u64;
    for &s in seed {
        rest[s.index()] = false;
    }
    for &s in seed {
        for &w in g.neighbors(s) {
            if rest[w.index()] {
                rest[w.index()] = false;
                charged += 1;
            }
        }
    }
    let dec = extremal_on(g, &rest);
    let rest_value = lp_value_on(g, &rest);
    let mut witness = seed.to_vec();
    witness.extend(dec.zeros);
    witness.sort_unstable();
    (2 * charged + rest_value, witness)
}

pub(crate) fn surplus_of(g: &Graph, set: &[VertexId]) -> i64 {
    let n = g.open_neighborhood(set).expect("live vertices").len();
    n as i64 - set.len() as i64
}

/// Minimum-surplus independent set containing `seed` (one or two vertices).
pub fn min_surplus_containing(g: &Graph, seed: &[VertexId]) -> Result<SurplusCertificate, LpError> {
    if seed.is_empty() || seed.len() > 2 {
        return Err(LpError::SeedSize(seed.len()));
    }
    for &s in seed {
        if !g.contains(s) {
            return Err(GraphError::UnknownVertex(s).into());
        }
    }
    if !g.is_independent(seed) {
        return Err(LpError::SeedNotIndependent);
    }
    let mut seed = seed.to_vec();
    seed.sort_unstable();
    seed.dedup();
    let (_, witness) = forced_zero_on(g, &full_mask(g), &seed);
    let surplus = surplus_of(g, &witness);
    Ok(SurplusCertificate { witness, surplus })
}

/// Minimum surplus over all non-empty independent sets; ties go to the smallest vertex.
pub fn graph_surplus(g: &Graph) -> Result<SurplusCertificate, LpError> {
    let mut best: Option<SurplusCertificate> = None;
    for v in g.vertices() {
        let c = min_surplus_containing(g, &[v])?;
        if best.as_ref().is_none_or(|b| c.surplus < b.surplus) {
            best = Some(c);
        }
    }
    best.ok_or(LpError::EmptyGraph)
}
