//! LP-guided reduction rules and lifting of covers back through them.
//!
//! * Rule 1 deletes the zeros and ones of the extremal decomposition and pays for the ones.
//! * Rule 2 takes a surplus-1 independent set `Z` whose neighbourhood is not
//!   independent and puts `N(Z)` into the cover.
//! * Rule 3 takes a surplus-1 independent set `Z` whose neighbourhood is
//!   independent, deletes `Z` and identifies `N(Z)` into one fresh vertex.
//!
//! Rules are tried in that order; edges and vertices are scanned in ascending
//! identifier order and the first hit wins.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::exec::{self, ExecMode};
use crate::graph::{Graph, GraphError, VertexId};
use crate::lpvc::{self, full_mask, lp_value_on};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceStep {
    ForcedOnes(Vec<VertexId>),
    ForcedZeros(Vec<VertexId>),
    StructionR2 {
        z: Vec<VertexId>,
        nz: Vec<VertexId>,
    },
    StructionR3 {
        z: Vec<VertexId>,
        nz: Vec<VertexId>,
        merged: VertexId,
    },
}

impl TraceStep {
    /// Amount this step charged against the budget.
    pub fn charge(&self) -> usize {
        match self {
            TraceStep::ForcedOnes(s) => s.len(),
            TraceStep::ForcedZeros(_) => 0,
            TraceStep::StructionR2 { nz, .. } => nz.len(),
            TraceStep::StructionR3 { z, .. } => z.len(),
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, sep: &str, set: &[VertexId]) -> fmt::Result {
    for (i, v) in set.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceStep::ForcedOnes(s) => {
                f.write_str("ONES")?;
                for v in s {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
            TraceStep::ForcedZeros(s) => {
                f.write_str("ZEROS")?;
                for v in s {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
            TraceStep::StructionR2 { z, nz } => {
                f.write_str("R2 Z=")?;
                write_list(f, ",", z)?;
                f.write_str(" N=")?;
                write_list(f, ",", nz)
            }
            TraceStep::StructionR3 { z, nz, merged } => {
                f.write_str("R3 Z=")?;
                write_list(f, ",", z)?;
                f.write_str(" N=")?;
                write_list(f, ",", nz)?;
                write!(f, " z={merged}")
            }
        }
    }
}

/// One step per line.
pub fn trace_to_text(trace: &[TraceStep]) -> String {
    trace.iter().map(|s| format!("{s}\n")).collect()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("trace line {line}: {msg}")]
pub struct TraceParseError {
    pub line: usize,
    pub msg: String,
}

fn parse_vertex(tok: &str, line: usize) -> Result<VertexId, TraceParseError> {
    tok.strip_prefix('v')
        .and_then(|t| t.parse().ok())
        .map(VertexId)
        .ok_or_else(|| TraceParseError {
            line,
            msg: format!("bad vertex `{tok}`"),
        })
}

fn parse_field(
    tok: Option<&str>,
    key: &str,
    line: usize,
) -> Result<Vec<VertexId>, TraceParseError> {
    let body = tok
        .and_then(|t| t.strip_prefix(key))
        .ok_or_else(|| TraceParseError {
            line,
            msg: format!("expected `{key}`"),
        })?;
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',').map(|t| parse_vertex(t, line)).collect()
}

pub fn parse_trace(text: &str) -> Result<Vec<TraceStep>, TraceParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        let step = match toks.next() {
            None => continue,
            Some("ONES") => TraceStep::ForcedOnes(
                toks.by_ref()
                    .map(|t| parse_vertex(t, line))
                    .collect::<Result<_, _>>()?,
            ),
            Some("ZEROS") => TraceStep::ForcedZeros(
                toks.by_ref()
                    .map(|t| parse_vertex(t, line))
                    .collect::<Result<_, _>>()?,
            ),
            Some("R2") => {
                let z = parse_field(toks.next(), "Z=", line)?;
                let nz = parse_field(toks.next(), "N=", line)?;
                TraceStep::StructionR2 { z, nz }
            }
            Some("R3") => {
                let z = parse_field(toks.next(), "Z=", line)?;
                let nz = parse_field(toks.next(), "N=", line)?;
                let m = parse_field(toks.next(), "z=", line)?;
                let [merged] = m[..] else {
                    return Err(TraceParseError {
                        line,
                        msg: "expected one merged vertex".into(),
                    });
                };
                TraceStep::StructionR3 { z, nz, merged }
            }
            Some(other) => {
                return Err(TraceParseError {
                    line,
                    msg: format!("unknown step `{other}`"),
                })
            }
        };
        if toks.next().is_some() {
            return Err(TraceParseError {
                line,
                msg: "trailing tokens".into(),
            });
        }
        out.push(step);
    }
    Ok(out)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReduceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("set is not a vertex cover of the reduced graph")]
    NotACover,
}

/// A graph with a budget, the log of rules applied so far and the current measure.
#[derive(Clone, Debug)]
pub struct ReducedInstance {
    pub graph: Graph,
    pub k: i64,
    pub trace: Vec<TraceStep>,
    /// `2k - 2 vc*` in half-units; negative means the budget is already too small.
    pub mu: i64,
}

impl ReducedInstance {
    pub fn new(graph: Graph, k: i64) -> Self {
        let lp = lp_value_on(&graph, &full_mask(&graph)) as i64;
        ReducedInstance {
            graph,
            k,
            trace: Vec::new(),
            mu: 2 * k - lp,
        }
    }

    /// `vc*` of the current graph in half-units.
    pub fn lp_half(&self) -> i64 {
        2 * self.k - self.mu
    }

    fn remeasure(&mut self) {
        let lp = lp_value_on(&self.graph, &full_mask(&self.graph)) as i64;
        self.mu = 2 * self.k - lp;
    }
}

/// Rule 1: fold the zeros and ones of the extremal decomposition.
pub fn apply_rule1(inst: &ReducedInstance) -> Result<Option<ReducedInstance>, ReduceError> {
    let d = lpvc::extremal_decomposition(&inst.graph);
    if d.is_trivial() {
        return Ok(None);
    }
    let mut gone = d.zeros.clone();
    gone.extend_from_slice(&d.ones);
    let mut out = inst.clone();
    out.graph = inst.graph.delete_vertices(&gone)?;
    out.k -= d.ones.len() as i64;
    out.trace.push(TraceStep::ForcedZeros(d.zeros));
    out.trace.push(TraceStep::ForcedOnes(d.ones));
    out.remeasure();
    if out.mu != inst.mu {
        return Err(ReduceError::Invariant(format!(
            "rule 1 changed the measure from {} to {}",
            inst.mu, out.mu
        )));
    }
    Ok(Some(out))
}

/// Edge scan for a surplus-1 set with a non-independent neighbourhood.
/// Assumes all-1/2 is the unique LP optimum.
pub(crate) fn rule2_scan(g: &Graph, mode: ExecMode) -> Result<Option<Vec<VertexId>>, ReduceError> {
    let total = g.vertex_count() as u64;
    let edges: Vec<(VertexId, VertexId)> = g.edges().collect();
    let base = full_mask(g);
    let hit = exec::find_map_first(mode, &edges, |&(u, v)| {
        let mut mask = base.clone();
        mask[u.index()] = false;
        mask[v.index()] = false;
        // forcing both endpoints to 1 costs exactly one half-unit more than the optimum
        (4 + lp_value_on(g, &mask) == total + 1).then(|| lpvc::extremal_on(g, &mask).zeros)
    });
    let Some(z) = hit else { return Ok(None) };
    let nz = g.open_neighborhood(&z)?;
    if z.is_empty() || nz.len() != z.len() + 1 || g.is_independent(&nz) || !g.is_independent(&z) {
        return Err(ReduceError::Invariant(format!(
            "rule 2 set {z:?} has neighbourhood {nz:?}"
        )));
    }
    Ok(Some(z))
}

fn require_all_half(g: &Graph, what: &str) -> Result<(), ReduceError> {
    if lpvc::extremal_decomposition(g).is_trivial() {
        Ok(())
    } else {
        Err(ReduceError::Precondition(format!(
            "{what}: rule 1 still applies"
        )))
    }
}

/// First surplus-1 independent set (by edge scan) whose neighbourhood is not independent.
pub fn find_rule2_set(g: &Graph) -> Result<Option<Vec<VertexId>>, ReduceError> {
    require_all_half(g, "find_rule2_set")?;
    rule2_scan(g, ExecMode::Sequential)
}

/// Rule 2: put `N(Z)` into the cover.
pub fn apply_rule2(inst: &ReducedInstance, z: &[VertexId]) -> Result<ReducedInstance, ReduceError> {
    let nz = inst.graph.open_neighborhood(z)?;
    let gone = inst.graph.closed_neighborhood(z)?;
    let mut out = inst.clone();
    out.graph = inst.graph.delete_vertices(&gone)?;
    out.k -= nz.len() as i64;
    out.trace.push(TraceStep::StructionR2 { z: z.to_vec(), nz });
    out.remeasure();
    if out.mu > inst.mu - 1 {
        return Err(ReduceError::Invariant(format!(
            "rule 2 dropped the measure only from {} to {}",
            inst.mu, out.mu
        )));
    }
    Ok(out)
}

/// Vertex scan for a surplus-1 set containing the vertex. Assumes rules 1 and 2 do not apply.
pub(crate) fn rule3_scan(g: &Graph, mode: ExecMode) -> Result<Option<Vec<VertexId>>, ReduceError> {
    let total = g.vertex_count() as u64;
    let verts = g.vertex_list();
    let base = full_mask(g);
    let hit = exec::find_map_first(mode, &verts, |&u| {
        let (value, witness) = lpvc::forced_zero_on(g, &base, &[u]);
        (value == total + 1).then_some(witness)
    });
    let Some(z) = hit else { return Ok(None) };
    let nz = g.open_neighborhood(&z)?;
    if nz.len() != z.len() + 1 || !g.is_independent(&nz) {
        return Err(ReduceError::Invariant(format!(
            "rule 3 set {z:?} has neighbourhood {nz:?}"
        )));
    }
    Ok(Some(z))
}

/// First vertex (ascending) whose forced-zero witness has surplus 1.
pub fn find_rule3_set(g: &Graph) -> Result<Option<Vec<VertexId>>, ReduceError> {
    require_all_half(g, "find_rule3_set")?;
    if rule2_scan(g, ExecMode::Sequential)?.is_some() {
        return Err(ReduceError::Precondition(
            "find_rule3_set: rule 2 still applies".into(),
        ));
    }
    rule3_scan(g, ExecMode::Sequential)
}

/// Rule 3: delete `Z`, identify `N(Z)` into a fresh vertex and pay `|Z|`.
pub fn apply_rule3(inst: &ReducedInstance, z: &[VertexId]) -> Result<ReducedInstance, ReduceError> {
    let g = &inst.graph;
    let nz = g.open_neighborhood(z)?;
    if !g.is_independent(z) || !g.is_independent(&nz) || nz.len() != z.len() + 1 {
        return Err(ReduceError::Precondition(format!(
            "rule 3 needs an independent Z with independent N(Z) of size |Z|+1; got Z={z:?}, N(Z)={nz:?}"
        )));
    }
    let (graph, merged) = g.delete_vertices(z)?.identify(&nz)?;
    let mut out = inst.clone();
    out.graph = graph;
    out.k -= z.len() as i64;
    out.trace.push(TraceStep::StructionR3 {
        z: z.to_vec(),
        nz,
        merged,
    });
    out.remeasure();
    if out.mu > inst.mu {
        return Err(ReduceError::Invariant(format!(
            "rule 3 raised the measure from {} to {}",
            inst.mu, out.mu
        )));
    }
    Ok(out)
}

/// Applies rules 1, 2, 3 in priority order until none applies.
pub fn reduce_exhaustively(inst: &ReducedInstance) -> Result<ReducedInstance, ReduceError> {
    reduce_with(inst, ExecMode::Sequential)
}

pub fn reduce_with(inst: &ReducedInstance, mode: ExecMode) -> Result<ReducedInstance, ReduceError> {
    let mut cur = inst.clone();
    loop {
        if let Some(next) = apply_rule1(&cur)? {
            cur = next;
            continue;
        }
        if let Some(z) = rule2_scan(&cur.graph, mode)? {
            cur = apply_rule2(&cur, &z)?;
            continue;
        }
        if let Some(z) = rule3_scan(&cur.graph, mode)? {
            cur = apply_rule3(&cur, &z)?;
            continue;
        }
        return Ok(cur);
    }
}

/// Replays `trace` backwards, turning a cover of `reduced` into a cover of the original graph.
pub fn lift_cover(
    trace: &[TraceStep],
    reduced: &Graph,
    cover: &[VertexId],
) -> Result<Vec<VertexId>, ReduceError> {
    if !reduced.is_vertex_cover(cover) {
        return Err(ReduceError::NotACover);
    }
    Ok(lift_unchecked(trace, cover))
}

pub(crate) fn lift_unchecked(trace: &[TraceStep], cover: &[VertexId]) -> Vec<VertexId> {
    let mut set: BTreeSet<VertexId> = cover.iter().copied().collect();
    for step in trace.iter().rev() {
        match step {
            TraceStep::ForcedOnes(ones) => set.extend(ones.iter().copied()),
            TraceStep::ForcedZeros(_) => {}
            TraceStep::StructionR2 { nz, .. } => set.extend(nz.iter().copied()),
            TraceStep::StructionR3 { z, nz, merged } => {
                if set.remove(merged) {
                    set.extend(nz.iter().copied());
                } else {
                    set.extend(z.iter().copied());
                }
            }
        }
    }
    set.into_iter().collect()
}

/// Total budget charged by a trace.
pub fn trace_charge(trace: &[TraceStep]) -> usize {
    trace.iter().map(TraceStep::charge).sum()
}
