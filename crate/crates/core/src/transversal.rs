//! Applications of the vertex cover solver: (X,Y)-transversals (odd cycle
//! transversal, split vertex deletion), König recognition, vertex cover with a
//! known bipartite or König deletion set, and kernelization.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId};
use crate::lpvc;
use crate::matching::maximum_matching;
use crate::reduce::{self, ReduceError, ReducedInstance, TraceStep};
use crate::solve::{SolveError, Solver, SolverConfig, Variant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PartClass {
    Clique,
    Independent,
}

/// Required classes of the two parts of the remaining graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct XYKind {
    pub x: PartClass,
    pub y: PartClass,
}

impl XYKind {
    /// Both parts independent: the remainder is bipartite.
    pub const OCT: XYKind = XYKind {
        x: PartClass::Independent,
        y: PartClass::Independent,
    };
    /// A clique and an independent set: the remainder is split.
    pub const SVD: XYKind = XYKind {
        x: PartClass::Clique,
        y: PartClass::Independent,
    };
}

/// Two copies of `V` joined by a perfect matching; copy `i` is `G` when its class is
/// independent and the complement of `G` when it is a clique.
#[derive(Clone, Debug)]
pub struct TransversalEncoding {
    pub h: Graph,
    pub map_v1: BTreeMap<VertexId, VertexId>,
    pub map_v2: BTreeMap<VertexId, VertexId>,
    pub n: usize,
    originals: Vec<VertexId>,
}

impl TransversalEncoding {
    /// Original vertex and side (1 or 2) of a vertex of `h`.
    pub fn original(&self, copy: VertexId) -> (VertexId, u8) {
        let i = copy.index();
        if i < self.n {
            (self.originals[i], 1)
        } else {
            (self.originals[i - self.n], 2)
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransversalError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("invalid deletion set: {0}")]
    InvalidDeletionSet(String),
    #[error("projected deletion set is invalid: {0}")]
    Projection(String),
    #[error("measure of the folded graph is {mu_half} half-units, above the deletion-set size {set_size}")]
    BoundViolated { mu_half: i64, set_size: usize },
    #[error("constant c must be at least 1")]
    BadConstant,
}

pub fn build_xy(g: &Graph, kind: XYKind) -> TransversalEncoding {
    let originals = g.vertex_list();
    let n = originals.len();
    let mut h = Graph::with_vertices(2 * n);
    for side in 0..2 {
        let class = if side == 0 { kind.x } else { kind.y };
        for i in 0..n {
            for j in i + 1..n {
                let adjacent = g.has_edge(originals[i], originals[j]);
                if adjacent == (class == PartClass::Independent) {
                    h.add_edge(
                        VertexId((side * n + i) as u32),
                        VertexId((side * n + j) as u32),
                    )
                    .expect("distinct");
                }
            }
        }
    }
    for i in 0..n {
        h.add_edge(VertexId(i as u32), VertexId((n + i) as u32))
            .expect("distinct");
    }
    let map_v1 = originals
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, VertexId(i as u32)))
        .collect();
    let map_v2 = originals
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, VertexId((n + i) as u32)))
        .collect();
    TransversalEncoding {
        h,
        map_v1,
        map_v2,
        n,
        originals,
    }
}

fn class_ok(g: &Graph, set: &[VertexId], class: PartClass) -> bool {
    match class {
        PartClass::Clique => g.is_clique(set),
        PartClass::Independent => g.is_independent(set),
    }
}

/// Deletion set of size at most `k` leaving an (X,Y) graph, or `None`.
pub fn solve_xy_deletion(
    g: &Graph,
    k: i64,
    kind: XYKind,
) -> Result<Option<Vec<VertexId>>, TransversalError> {
    solve_xy_deletion_with(g, k, kind, &SolverConfig::default())
}

pub fn solve_xy_deletion_with(
    g: &Graph,
    k: i64,
    kind: XYKind,
    config: &SolverConfig,
) -> Result<Option<Vec<VertexId>>, TransversalError> {
    let enc = build_xy(g, kind);
    let Some(cover) = Solver::new(config.clone())
        .decide(&enc.h, enc.n as i64 + k)?
        .cover
    else {
        return Ok(None);
    };
    let mut in_cover = vec![false; 2 * enc.n];
    for v in &cover {
        in_cover[v.index()] = true;
    }
    let (mut b1, mut b2) = (Vec::new(), Vec::new());
    for id in enc.h.vertices().filter(|v| !in_cover[v.index()]) {
        match enc.original(id) {
            (v, 1) => b1.push(v),
            (v, _) => b2.push(v),
        }
    }
    let kept: std::collections::BTreeSet<VertexId> = b1.iter().chain(b2.iter()).copied().collect();
    let deletion: Vec<VertexId> = g.vertices().filter(|v| !kept.contains(v)).collect();

    if kept.len() != b1.len() + b2.len() {
        return Err(TransversalError::Projection(
            "a vertex kept on both sides".into(),
        ));
    }
    if deletion.len() as i64 > k {
        return Err(TransversalError::Projection(format!(
            "{} deletions exceed {k}",
            deletion.len()
        )));
    }
    if !class_ok(g, &b1, kind.x) || !class_ok(g, &b2, kind.y) {
        return Err(TransversalError::Projection(
            "parts do not have the required classes".into(),
        ));
    }
    if kind == XYKind::OCT && !g.delete_vertices(&deletion)?.is_bipartite() {
        return Err(TransversalError::Projection(
            "remainder is not bipartite".into(),
        ));
    }
    Ok(Some(deletion))
}

/// A minimum vertex cover together with a matching that saturates it across the cut.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KonigCertificate {
    pub cover_side: Vec<VertexId>,
    pub matching: Vec<(VertexId, VertexId)>,
}

impl KonigCertificate {
    pub fn verify(&self, g: &Graph) -> bool {
        if !g.is_vertex_cover(&self.cover_side) || self.matching.len() != self.cover_side.len() {
            return false;
        }
        let mut used = std::collections::BTreeSet::new();
        self.matching.iter().all(|&(u, v)| {
            g.has_edge(u, v)
                && used.insert(u)
                && used.insert(v)
                && (self.cover_side.binary_search(&u).is_ok()
                    != self.cover_side.binary_search(&v).is_ok())
        })
    }
}

/// Certificate that the minimum vertex cover equals the maximum matching, or `None`.
pub fn verify_konig(g: &Graph) -> Result<Option<KonigCertificate>, TransversalError> {
    let matching = maximum_matching(g);
    let Some(cover_side) = Solver::default().decide(g, matching.len() as i64)?.cover else {
        return Ok(None);
    };
    let cert = KonigCertificate {
        cover_side,
        matching,
    };
    if !cert.verify(g) {
        return Err(TransversalError::Projection(
            "König certificate failed verification".into(),
        ));
    }
    Ok(Some(cert))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DeletionKind {
    /// Removing the set leaves a König graph.
    Kvd,
    /// Removing the set leaves a bipartite graph.
    Oct,
}

/// Vertex cover of size at most `l`, given a set whose removal leaves a König
/// (or bipartite) graph. Folds the LP-forced part, then solves the rest exactly.
pub fn vc_param_budget(
    g: &Graph,
    s: &[VertexId],
    l: i64,
    kind: DeletionKind,
) -> Result<Option<Vec<VertexId>>, TransversalError> {
    if let Some(v) = s.iter().find(|v| !g.contains(**v)) {
        return Err(TransversalError::InvalidDeletionSet(format!(
            "unknown vertex {v}"
        )));
    }
    let rest = g.delete_vertices(s)?;
    let valid = match kind {
        DeletionKind::Oct => rest.is_bipartite(),
        DeletionKind::Kvd => verify_konig(&rest)?.is_some(),
    };
    if !valid {
        return Err(TransversalError::InvalidDeletionSet(format!(
            "removing the set does not leave a {kind:?} graph"
        )));
    }
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();

    let d = lpvc::extremal_decomposition(g);
    let folded = g.induced(&d.halves);
    let sub = Solver::default()
        .minimum(&folded)?
        .cover
        .expect("minimum always answers");
    let mu_half = 2 * sub.len() as i64 - folded.vertex_count() as i64;
    if mu_half > set.len() as i64 {
        return Err(TransversalError::BoundViolated {
            mu_half,
            set_size: set.len(),
        });
    }
    let mut cover = sub;
    cover.extend_from_slice(&d.ones);
    cover.sort_unstable();
    Ok((cover.len() as i64 <= l).then_some(cover))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelStatus {
    Kernel,
    SolvedYes(Vec<VertexId>),
    SolvedNo,
}

#[derive(Clone, Debug)]
pub struct Kernel {
    pub graph: Graph,
    pub k: i64,
    pub trace: Vec<TraceStep>,
    pub status: KernelStatus,
}

/// `ceil(log2 k)` for `k >= 1`, 0 otherwise.
pub fn ceil_log2(k: i64) -> i64 {
    if k <= 1 {
        0
    } else {
        64 - (k as u64 - 1).leading_zeros() as i64
    }
}

/// Reduces, then solves outright when the measure is at most `2c * ceil(log2 k')`
/// half-units; otherwise the reduced graph has fewer than `2k' - 2c * ceil(log2 k')` vertices.
pub fn kernelize(g: &Graph, k: i64, c: i64) -> Result<Kernel, TransversalError> {
    if c < 1 {
        return Err(TransversalError::BadConstant);
    }
    let r = reduce::reduce_exhaustively(&ReducedInstance::new(g.clone(), k))?;
    let threshold = c * ceil_log2(r.k);
    let status = if r.mu < 0 {
        KernelStatus::SolvedNo
    } else if r.graph.is_empty() || r.mu <= 2 * threshold {
        let solver = Solver::new(SolverConfig::with_variant(Variant::Improved));
        match solver.decide(&r.graph, r.k)?.cover {
            Some(c) => KernelStatus::SolvedYes(reduce::lift_cover(&r.trace, &r.graph, &c)?),
            None => KernelStatus::SolvedNo,
        }
    } else {
        KernelStatus::Kernel
    };
    Ok(Kernel {
        graph: r.graph,
        k: r.k,
        trace: r.trace,
        status,
    })
}
