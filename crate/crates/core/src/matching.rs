//! Maximum matchings: Hopcroft–Karp for bipartite graphs (with König cover
//! extraction) and a general-graph matching used for the matching lower bound.

use std::collections::VecDeque;

use petgraph::graph::{NodeIndex, UnGraph};

use crate::graph::{Graph, VertexId};

const NONE: usize = usize::MAX;

/// A matching between `left` vertices `0..adj.len()` and right vertices `0..right`.
#[derive(Clone, Debug)]
pub struct BipartiteMatching {
    pub mate_left: Vec<usize>,
    pub mate_right: Vec<usize>,
    pub size: usize,
}

impl BipartiteMatching {
    pub fn left_mate(&self, u: usize) -> Option<usize> {
        (self.mate_left[u] != NONE).then_some(self.mate_left[u])
    }
}

/// Hopcroft–Karp. Deterministic given the adjacency order.
pub fn hopcroft_karp(adj: &[Vec<usize>], right: usize) -> BipartiteMatching {
    let left = adj.len();
    let mut mate_left = vec![NONE; left];
    let mut mate_right = vec![NONE; right];
    let mut dist = vec![0usize; left];
    let mut size = 0;

    // greedy warm start
    for u in 0..left {
        if let Some(&v) = adj[u].iter().find(|&&v| mate_right[v] == NONE) {
            mate_left[u] = v;
            mate_right[v] = u;
            size += 1;
        }
    }

    loop {
        let mut queue = VecDeque::new();
        let mut found = false;
        for u in 0..left {
            if mate_left[u] == NONE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = NONE;
            }
        }
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = mate_right[v];
                if w == NONE {
                    found = true;
                } else if dist[w] == NONE {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            break;
        }
        let mut next = vec![0usize; left];
        for u in 0..left {
            if mate_left[u] == NONE
                && augment(
                    u,
                    adj,
                    &mut mate_left,
                    &mut mate_right,
                    &mut dist,
                    &mut next,
                )
            {
                size += 1;
            }
        }
    }
    BipartiteMatching {
        mate_left,
        mate_right,
        size,
    }
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    mate_left: &mut [usize],
    mate_right: &mut [usize],
    dist: &mut [usize],
    next: &mut [usize],
) -> bool {
    while next[u] < adj[u].len() {
        let v = adj[u][next[u]];
        next[u] += 1;
        let w = mate_right[v];
        if w == NONE
            || (dist[w] == dist[u] + 1 && augment(w, adj, mate_left, mate_right, dist, next))
        {
            mate_left[u] = v;
            mate_right[v] = u;
            return true;
        }
    }
    dist[u] = NONE;
    false
}

/// Minimum vertex cover from a maximum matching (König's construction).
///
/// Returns `(cover_left, cover_right)`; the cover has exactly `matching.size` vertices.
pub fn konig_cover(
    adj: &[Vec<usize>],
    right: usize,
    m: &BipartiteMatching,
) -> (Vec<bool>, Vec<bool>) {
    let left = adj.len();
    let mut reach_left = vec![false; left];
    let mut reach_right = vec![false; right];
    let mut queue: VecDeque<usize> = (0..left).filter(|&u| m.mate_left[u] == NONE).collect();
    for &u in &queue {
        reach_left[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if reach_right[v] || m.mate_left[u] == v {
                continue;
            }
            reach_right[v] = true;
            let w = m.mate_right[v];
            if w != NONE && !reach_left[w] {
                reach_left[w] = true;
                queue.push_back(w);
            }
        }
    }
    (reach_left.iter().map(|r| !r).collect(), reach_right)
}

/// Maximum matching of a general graph, as sorted vertex pairs `(u, v)` with `u < v`.
pub fn maximum_matching(g: &Graph) -> Vec<(VertexId, VertexId)> {
    let verts = g.vertex_list();
    let mut pg: UnGraph<(), ()> = UnGraph::with_capacity(verts.len(), g.edge_count());
    let idx: Vec<NodeIndex> = verts.iter().map(|_| pg.add_node(())).collect();
    let pos = |v: VertexId| verts.binary_search(&v).expect("live vertex");
    for (u, v) in g.edges() {
        pg.add_edge(idx[pos(u)], idx[pos(v)], ());
    }
    let m = petgraph::algo::maximum_matching(&pg);
    let mut out: Vec<(VertexId, VertexId)> = m
        .edges()
        .map(|(a, b)| {
            let (x, y) = (verts[a.index()], verts[b.index()]);
            if x < y {
                (x, y)
            } else {
                (y, x)
            }
        })
        .collect();
    out.sort_unstable();
    out
}
