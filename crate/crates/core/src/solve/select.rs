//! Branching-rule selectors for the improved solver. Each expects a fully reduced graph.

use crate::exec::{self, ExecMode};
use crate::graph::{Graph, VertexId};
use crate::lpvc::{self, full_mask};
use crate::reduce::{self, ReducedInstance};

use super::SolveError;

fn nonadjacent_pairs(g: &Graph) -> Vec<(VertexId, VertexId)> {
    let verts = g.vertex_list();
    let mut out = Vec::new();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            if !g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// B1: an independent set of size at least two attaining the graph's surplus.
pub fn select_b1(g: &Graph) -> Option<Vec<VertexId>> {
    select_b1_with(g, ExecMode::Sequential)
}

pub(crate) fn select_b1_with(g: &Graph, mode: ExecMode) -> Option<Vec<VertexId>> {
    let target = lpvc::graph_surplus(g).ok()?.surplus;
    let pairs = nonadjacent_pairs(g);
    let full = full_mask(g);
    exec::find_map_first(mode, &pairs, |&(u, v)| {
        let (_, witness) = lpvc::forced_zero_on(g, &full, &[u, v]);
        (lpvc::surplus_of(g, &witness) == target).then_some(witness)
    })
}

/// Whether B1 applies, without computing the canonical set when a cheap witness exists.
pub(crate) fn b1_applies(g: &Graph, mode: ExecMode) -> bool {
    let full = full_mask(g);
    let verts = g.vertex_list();
    let seeded = exec::map_collect(mode, &verts, |&v| {
        let (_, w) = lpvc::forced_zero_on(g, &full, &[v]);
        (lpvc::surplus_of(g, &w), w.len())
    });
    let Some(target) = seeded.iter().map(|&(s, _)| s).min() else {
        return false;
    };
    if seeded.iter().any(|&(s, len)| s == target && len >= 2) {
        return true;
    }
    select_b1_with(g, mode).is_some()
}

/// B2: a vertex `v` and neighbour `u` with `N(v) \ {u}` a clique.
pub fn select_b2(g: &Graph) -> Option<(VertexId, VertexId)> {
    for v in g.vertices() {
        let nbrs = g.neighbors(v);
        for &u in nbrs {
            let rest: Vec<VertexId> = nbrs.iter().copied().filter(|&w| w != u).collect();
            if g.is_clique(&rest) {
                return Some((v, u));
            }
        }
    }
    None
}

/// B3: a vertex whose deletion makes rule 2 applicable.
pub fn select_b3(g: &Graph) -> Option<VertexId> {
    select_b3_with(g, ExecMode::Sequential).ok().flatten()
}

pub(crate) fn select_b3_with(g: &Graph, mode: ExecMode) -> Result<Option<VertexId>, SolveError> {
    let verts = g.vertex_list();
    let hits = exec::find_map_first(mode, &verts, |&v| {
        let h = g.delete_vertices(&[v]).expect("live vertex");
        match reduce::rule2_scan(&h, ExecMode::Sequential) {
            Ok(Some(_)) => Some(Ok(v)),
            Ok(None) => None,
            Err(e) => Some(Err(e)),
        }
    });
    match hits {
        None => Ok(None),
        Some(Ok(v)) => Ok(Some(v)),
        Some(Err(e)) => Err(e.into()),
    }
}

/// B4: smallest vertex of degree at least four.
pub fn select_b4(g: &Graph) -> Option<VertexId> {
    g.vertices().find(|&v| g.degree(v) >= 4)
}

/// B5: a vertex `v` such that B1, B2 or B3 applies after reducing `G \ v`.
pub fn select_b5(g: &Graph) -> Option<VertexId> {
    select_b5_with(g, ExecMode::Sequential).ok().flatten()
}

pub(crate) fn select_b5_with(g: &Graph, mode: ExecMode) -> Result<Option<VertexId>, SolveError> {
    let verts = g.vertex_list();
    let hit = exec::find_map_first(mode, &verts, |&v| {
        let probe = || -> Result<bool, SolveError> {
            let h = g.delete_vertices(&[v])?;
            let r = reduce::reduce_with(&ReducedInstance::new(h, 0), ExecMode::Sequential)?;
            if r.graph.is_empty() {
                return Ok(false);
            }
            Ok(select_b2(&r.graph).is_some()
                || select_b3_with(&r.graph, ExecMode::Sequential)?.is_some()
                || b1_applies(&r.graph, ExecMode::Sequential))
        };
        match probe() {
            Ok(true) => Some(Ok(v)),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        }
    });
    hit.transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn b2_examples() {
        assert_eq!(
            select_b2(&fixtures::complete(4)),
            Some((VertexId(0), VertexId(1)))
        );
        assert_eq!(select_b2(&fixtures::petersen()), None);
    }

    #[test]
    fn b4_examples() {
        assert_eq!(select_b4(&fixtures::complete(5)), Some(VertexId(0)));
        assert_eq!(select_b4(&fixtures::petersen()), None);
        assert_eq!(
            select_b4(&fixtures::circulant(9, &[1, 2])),
            Some(VertexId(0))
        );
    }

    #[test]
    fn b1_examples() {
        assert_eq!(select_b1(&fixtures::complete(4)), None);
        // a maximum independent set of the Petersen graph has surplus 2 = surplus(G)
        let s = select_b1(&fixtures::petersen()).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(lpvc::surplus_of(&fixtures::petersen(), &s), 2);
        let q = fixtures::cube();
        let s = select_b1(&q).unwrap();
        assert!(s.len() >= 2 && q.is_independent(&s));
        assert_eq!(
            lpvc::surplus_of(&q, &s),
            lpvc::graph_surplus(&q).unwrap().surplus
        );
    }
}
