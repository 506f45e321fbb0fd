//! Exhaustive minimum vertex cover for small components.

use crate::graph::{Graph, VertexId};

/// Minimum vertex cover by edge branching with a size bound. Meant for a handful of vertices.
pub fn exact_small_cover(g: &Graph) -> Vec<VertexId> {
    let verts = g.vertex_list();
    let n = verts.len();
    assert!(n <= 64, "exact_small_cover is for small components");
    let pos = |v: VertexId| verts.binary_search(&v).expect("live");
    let adj: Vec<u64> = verts
        .iter()
        .map(|&v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << pos(w)))
        .collect();

    fn go(chosen: u64, removed: u64, adj: &[u64], best: &mut (u32, u64)) {
        if chosen.count_ones() >= best.0 {
            return;
        }
        // first vertex with an edge into the remaining graph
        let Some(u) = (0..adj.len()).find(|&u| removed >> u & 1 == 0 && adj[u] & !removed != 0)
        else {
            *best = (chosen.count_ones(), chosen);
            return;
        };
        let nu = adj[u] & !removed;
        // take u, or take all of its remaining neighbours
        go(chosen | 1 << u, removed | 1 << u, adj, best);
        go(chosen | nu, removed | nu | 1 << u, adj, best);
    }

    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = (n as u32 + 1, all);
    go(0, 0, &adj, &mut best);
    (0..n)
        .filter(|&i| best.1 >> i & 1 == 1)
        .map(|i| verts[i])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn small_covers() {
        assert_eq!(exact_small_cover(&fixtures::cycle(5)).len(), 3);
        assert_eq!(exact_small_cover(&fixtures::petersen()).len(), 6);
        assert_eq!(exact_small_cover(&fixtures::complete(6)).len(), 5);
        assert!(exact_small_cover(&Graph::with_vertices(3)).is_empty());
        let g = fixtures::cube();
        assert!(g.is_vertex_cover(&exact_small_cover(&g)));
    }
}
