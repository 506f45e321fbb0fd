//! Simple undirected graphs with stable vertex identifiers.
//!
//! Every mutation is exposed with value semantics: operations take `&self`
//! and return a fresh graph. Identifiers are dense small integers that are
//! never reused; vertices created by identification carry the list of
//! vertices they replaced so that covers can be expanded back.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// Where a vertex came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    /// A vertex read from input, with its label.
    Input(u64),
    /// A vertex created by identifying the listed (previously live) vertices.
    Merged(Vec<VertexId>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("identification needs at least two vertices, got {0}")]
    IdentifyTooFew(usize),
}

#[derive(Clone, Debug)]
pub struct Graph {
    /// `adj[id]` is `None` for deleted (or never live) identifiers.
    adj: Vec<Option<Vec<VertexId>>>,
    origins: Arc<Vec<Origin>>,
    live: usize,
    edges: usize,
}

impl Default for Graph {
    fn default() -> Self {
        Self::new()
    }
}

impl PartialEq for Graph {
    /// Two graphs are equal when they have the same live identifiers and edges.
    fn eq(&self, other: &Self) -> bool {
        self.live == other.live
            && self.edges == other.edges
            && self.vertices().eq(other.vertices())
            && self
                .vertices()
                .all(|v| self.neighbors(v) == other.neighbors(v))
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new() -> Self {
        Graph {
            adj: Vec::new(),
            origins: Arc::new(Vec::new()),
            live: 0,
            edges: 0,
        }
    }

    /// Graph on `n` isolated vertices labelled `1..=n` (identifiers `0..n`).
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Graph::new();
        for label in 1..=n as u64 {
            g.add_vertex(label);
        }
        g
    }

    /// Builds a graph on vertices `0..n` from 0-based index pairs.
    ///
    /// Panics on self-loops or out-of-range endpoints; meant for fixtures.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::with_vertices(n);
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge ({u},{v}) out of range for n={n}");
            g.add_edge(VertexId(u as u32), VertexId(v as u32))
                .expect("fixture edge");
        }
        g
    }

    pub fn add_vertex(&mut self, label: u64) -> VertexId {
        self.push_vertex(Origin::Input(label))
    }

    fn push_vertex(&mut self, origin: Origin) -> VertexId {
        let id = VertexId(self.adj.len() as u32);
        self.adj.push(Some(Vec::new()));
        Arc::make_mut(&mut self.origins).push(origin);
        self.live += 1;
        id
    }

    /// Inserts the edge `{u, v}`. Returns `false` if it was already present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.check(u)?;
        self.check(v)?;
        let nu = self.adj[u.index()].as_mut().expect("checked");
        match nu.binary_search(&v) {
            Ok(_) => return Ok(false),
            Err(pos) => nu.insert(pos, v),
        }
        let nv = self.adj[v.index()].as_mut().expect("checked");
        let pos = nv.binary_search(&u).unwrap_err();
        nv.insert(pos, u);
        self.edges += 1;
        Ok(true)
    }

    fn check(&self, v: VertexId) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        matches!(self.adj.get(v.index()), Some(Some(_)))
    }

    pub fn vertex_count(&self) -> usize {
        self.live
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.live == 0
    }

    /// One past the largest identifier ever issued in this graph's history.
    pub fn id_bound(&self) -> usize {
        self.adj.len()
    }

    /// Live vertices in ascending identifier order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, a)| a.is_some())
            .map(|(i, _)| VertexId(i as u32))
    }

    pub fn vertex_list(&self) -> Vec<VertexId> {
        self.vertices().collect()
    }

    /// Sorted neighbors of `v`; empty for unknown vertices.
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        match self.adj.get(v.index()) {
            Some(Some(n)) => n,
            _ => &[],
        }
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn origin(&self, v: VertexId) -> &Origin {
        &self.origins[v.index()]
    }

    /// Input labels represented by `v`, expanding merged vertices recursively.
    pub fn input_labels(&self, v: VertexId) -> Vec<u64> {
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(w) = stack.pop() {
            match &self.origins[w.index()] {
                Origin::Input(l) => out.push(*l),
                Origin::Merged(parts) => stack.extend(parts.iter().copied()),
            }
        }
        out.sort_unstable();
        out
    }

    /// Label of an input vertex, `None` for merged vertices.
    pub fn label(&self, v: VertexId) -> Option<u64> {
        match self.origins.get(v.index()) {
            Some(Origin::Input(l)) => Some(*l),
            _ => None,
        }
    }

    /// Looks up the live input vertex carrying `label`.
    pub fn vertex_by_label(&self, label: u64) -> Option<VertexId> {
        self.vertices().find(|&v| self.label(v) == Some(label))
    }

    fn marker(&self, set: &[VertexId]) -> Result<Vec<bool>, GraphError> {
        let mut mark = vec![false; self.adj.len()];
        for &v in set {
            self.check(v)?;
            mark[v.index()] = true;
        }
        Ok(mark)
    }

    /// `G[V \ set]`. The receiver is left untouched.
    pub fn delete_vertices(&self, set: &[VertexId]) -> Result<Graph, GraphError> {
        let mark = self.marker(set)?;
        let mut g = self.clone();
        g.remove_marked(&mark);
        Ok(g)
    }

    /// In-place removal of all vertices flagged in `mark`.
    pub(crate) fn remove_marked(&mut self, mark: &[bool]) {
        let mut inner_twice = 0usize;
        let mut crossing = 0usize;
        for i in 0..self.adj.len() {
            if !mark.get(i).copied().unwrap_or(false) {
                continue;
            }
            let Some(nbrs) = self.adj[i].take() else {
                continue;
            };
            self.live -= 1;
            for w in nbrs {
                if mark[w.index()] {
                    inner_twice += 1;
                } else {
                    crossing += 1;
                    let list = self.adj[w.index()].as_mut().expect("symmetric adjacency");
                    let pos = list
                        .binary_search(&VertexId(i as u32))
                        .expect("symmetric adjacency");
                    list.remove(pos);
                }
            }
        }
        self.edges -= crossing + inner_twice / 2;
    }

    /// Replaces the vertices of `set` by one fresh vertex adjacent to `N(set) \ set`.
    pub fn identify(&self, set: &[VertexId]) -> Result<(Graph, VertexId), GraphError> {
        let mut members = set.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.len() < 2 {
            return Err(GraphError::IdentifyTooFew(members.len()));
        }
        let outside = self.open_neighborhood(&members)?;
        let mark = self.marker(&members)?;
        let mut g = self.clone();
        g.remove_marked(&mark);
        let z = g.push_vertex(Origin::Merged(members));
        for w in outside {
            g.add_edge(z, w).expect("live endpoints");
        }
        Ok((g, z))
    }

    /// `N(set) \ set`, sorted.
    pub fn open_neighborhood(&self, set: &[VertexId]) -> Result<Vec<VertexId>, GraphError> {
        let mark = self.marker(set)?;
        let mut seen = vec![false; self.adj.len()];
        let mut out = Vec::new();
        for &v in set {
            for &w in self.neighbors(v) {
                if !mark[w.index()] && !seen[w.index()] {
                    seen[w.index()] = true;
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// `N[set]`, sorted.
    pub fn closed_neighborhood(&self, set: &[VertexId]) -> Result<Vec<VertexId>, GraphError> {
        let mut out = self.open_neighborhood(set)?;
        out.extend_from_slice(set);
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn is_independent(&self, set: &[VertexId]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, set: &[VertexId]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    pub fn is_vertex_cover(&self, cover: &[VertexId]) -> bool {
        let mut mark = vec![false; self.adj.len()];
        for &v in cover {
            if let Some(m) = mark.get_mut(v.index()) {
                *m = true;
            }
        }
        self.edges()
            .all(|(u, v)| mark[u.index()] || mark[v.index()])
    }

    /// Induced subgraph on `set` (identifiers preserved). Unknown vertices are ignored.
    pub fn induced(&self, set: &[VertexId]) -> Graph {
        let mut keep = vec![false; self.adj.len()];
        for &v in set {
            if self.contains(v) {
                keep[v.index()] = true;
            }
        }
        let mut adj: Vec<Option<Vec<VertexId>>> = vec![None; self.adj.len()];
        let mut live = 0;
        let mut twice = 0;
        for (i, slot) in adj.iter_mut().enumerate() {
            if keep[i] {
                let list: Vec<VertexId> = self
                    .neighbors(VertexId(i as u32))
                    .iter()
                    .copied()
                    .filter(|w| keep[w.index()])
                    .collect();
                twice += list.len();
                live += 1;
                *slot = Some(list);
            }
        }
        Graph {
            adj,
            origins: Arc::clone(&self.origins),
            live,
            edges: twice / 2,
        }
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn component_sets(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.adj.len()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s.index()] {
                continue;
            }
            seen[s.index()] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if !seen[w.index()] {
                        seen[w.index()] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Graph> {
        self.component_sets()
            .iter()
            .map(|c| self.induced(c))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_sets().len() <= 1
    }

    /// Complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let verts = self.vertex_list();
        let mut g = self.induced(&verts);
        for &u in &verts {
            let list: Vec<VertexId> = verts
                .iter()
                .copied()
                .filter(|&v| v != u && !self.has_edge(u, v))
                .collect();
            g.adj[u.index()] = Some(list);
        }
        let n = verts.len();
        g.edges = n * n.saturating_sub(1) / 2 - self.edges;
        g
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.adj.len()];
        let mut parent = vec![VertexId(u32::MAX); self.adj.len()];
        for s in self.vertices() {
            let mut touched = vec![s];
            dist[s.index()] = 0;
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if dist[w.index()] == usize::MAX {
                        dist[w.index()] = dist[u.index()] + 1;
                        parent[w.index()] = u;
                        touched.push(w);
                        queue.push_back(w);
                    } else if parent[u.index()] != w {
                        let len = dist[u.index()] + dist[w.index()] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                        if dist[u.index()] * 2 + 1 >= best.unwrap_or(usize::MAX) {
                            break 'bfs;
                        }
                    }
                }
            }
            for t in touched {
                dist[t.index()] = usize::MAX;
            }
        }
        best
    }

    /// Proper 2-colouring if one exists (colour `false`/`true` per identifier).
    pub fn two_coloring(&self) -> Option<Vec<Option<bool>>> {
        let mut color: Vec<Option<bool>> = vec![None; self.adj.len()];
        for s in self.vertices() {
            if color[s.index()].is_some() {
                continue;
            }
            color[s.index()] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u.index()].expect("coloured");
                for &w in self.neighbors(u) {
                    match color[w.index()] {
                        None => {
                            color[w.index()] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn duplicate_edges_collapse_and_loops_fail() {
        let mut g = Graph::with_vertices(2);
        assert!(g.add_edge(v(0), v(1)).unwrap());
        assert!(!g.add_edge(v(1), v(0)).unwrap());
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.add_edge(v(0), v(0)), Err(GraphError::SelfLoop(v(0))));
        assert_eq!(g.add_edge(v(0), v(7)), Err(GraphError::UnknownVertex(v(7))));
    }

    #[test]
    fn delete_from_cycle_leaves_path() {
        let c5 = fixtures::cycle(5);
        let p = c5.delete_vertices(&[v(0)]).unwrap();
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.edge_count(), 3);
        assert_eq!(p.degree(v(1)), 1);
        assert_eq!(p.degree(v(4)), 1);
        assert_eq!(c5.edge_count(), 5, "input untouched");
        assert_eq!(
            c5.delete_vertices(&[v(9)]).unwrap_err(),
            GraphError::UnknownVertex(v(9))
        );
    }

    #[test]
    fn delete_both_endpoints_of_k2() {
        let k2 = fixtures::complete(2);
        let g = k2.delete_vertices(&[v(0), v(1)]).unwrap();
        assert!(g.is_empty());
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn petersen_minus_vertex() {
        let p = fixtures::petersen();
        let g = p.delete_vertices(&[v(0)]).unwrap();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.vertices().filter(|&x| g.degree(x) == 2).count(), 3);
        assert_eq!(g.edge_count(), 12);
    }

    #[test]
    fn identify_endpoints_of_p4() {
        // a-b-c-d, identify {a, d}
        let p4 = fixtures::path(4);
        let (g, z) = p4.identify(&[v(0), v(3)]).unwrap();
        assert_eq!(g.vertex_list(), vec![v(1), v(2), z]);
        assert!(g.has_edge(z, v(1)) && g.has_edge(z, v(2)) && g.has_edge(v(1), v(2)));
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.origin(z), &Origin::Merged(vec![v(0), v(3)]));
        assert_eq!(g.input_labels(z), vec![1, 4]);
    }

    #[test]
    fn identify_in_c5_after_deletion() {
        // C5 on labels 1..5: delete 1, identify {2, 5}
        let c5 = fixtures::cycle(5);
        let g = c5.delete_vertices(&[v(0)]).unwrap();
        let (t, z) = g.identify(&[v(1), v(4)]).unwrap();
        assert_eq!(t.vertex_count(), 3);
        assert_eq!(t.edge_count(), 3);
        assert!(t.is_clique(&[z, v(2), v(3)]));
        assert_eq!(z, v(5), "fresh identifier, never reused");
    }

    #[test]
    fn identify_pair_of_k4() {
        let (t, _) = fixtures::complete(4).identify(&[v(1), v(2)]).unwrap();
        assert_eq!((t.vertex_count(), t.edge_count()), (3, 3));
        assert_eq!(
            fixtures::complete(4).identify(&[v(1)]).unwrap_err(),
            GraphError::IdentifyTooFew(1)
        );
    }

    #[test]
    fn components_in_order() {
        let mut g = fixtures::disjoint_union(&fixtures::complete(2), &fixtures::complete(3));
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!((comps[0].vertex_count(), comps[0].edge_count()), (2, 1));
        assert_eq!((comps[1].vertex_count(), comps[1].edge_count()), (3, 3));
        assert_eq!(fixtures::petersen().components().len(), 1);
        g = Graph::new();
        assert!(g.components().is_empty());
    }

    #[test]
    fn complements() {
        let k3c = fixtures::complete(3).complement();
        assert_eq!((k3c.vertex_count(), k3c.edge_count()), (3, 0));
        let c5c = fixtures::cycle(5).complement();
        assert_eq!(c5c.edge_count(), 5);
        assert!(c5c.vertices().all(|x| c5c.degree(x) == 2));
        assert!(c5c.is_connected());
        let c4c = fixtures::cycle(4).complement();
        assert_eq!(c4c.edge_count(), 2);
        assert_eq!(c4c.components().len(), 2);
    }

    #[test]
    fn girth_of_named_graphs() {
        assert_eq!(fixtures::complete(4).girth(), Some(3));
        assert_eq!(fixtures::cube().girth(), Some(4));
        assert_eq!(fixtures::petersen().girth(), Some(5));
        assert_eq!(fixtures::heawood().girth(), Some(6));
        assert_eq!(fixtures::mcgee().girth(), Some(7));
        assert_eq!(fixtures::path(5).girth(), None);
    }
}
