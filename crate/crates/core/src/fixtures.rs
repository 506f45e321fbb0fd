//! Named graphs and seeded random generators used by tests, benches and the CLI.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexId};

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// `K_{1,leaves}` with the center at identifier 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::from_edges(a + b, &edges)
}

/// The 3-cube `Q3`.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(8, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges)
}

/// Cubic graph from LCF notation: a Hamiltonian cycle plus chords `i -> i + shift`.
pub fn lcf(n: usize, shifts: &[i64]) -> Graph {
    let mut g = cycle(n);
    for i in 0..n {
        let s = shifts[i % shifts.len()];
        let j = (i as i64 + s).rem_euclid(n as i64) as usize;
        g.add_edge(VertexId(i as u32), VertexId(j as u32))
            .expect("lcf chord");
    }
    g
}

/// Heawood graph: 14 vertices, cubic, girth 6.
pub fn heawood() -> Graph {
    lcf(14, &[5, -5])
}

/// McGee graph: 24 vertices, cubic, girth 7.
pub fn mcgee() -> Graph {
    lcf(24, &[12, 7, -7])
}

/// Tietze graph: Petersen with one vertex blown up into a triangle (12 vertices, girth 3).
pub fn tietze() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend_from_slice(&[(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]);
    edges.extend_from_slice(&[(5, 7), (6, 8), (8, 5)]);
    edges.extend_from_slice(&[(9, 10), (10, 11), (11, 9), (10, 6), (11, 7)]);
    Graph::from_edges(12, &edges)
}

/// Circulant graph on `n` vertices with the given jumps.
pub fn circulant(n: usize, jumps: &[usize]) -> Graph {
    let mut g = Graph::with_vertices(n);
    for i in 0..n {
        for &j in jumps {
            let w = (i + j) % n;
            if w != i {
                let _ = g.add_edge(VertexId(i as u32), VertexId(w as u32));
            }
        }
    }
    g
}

/// Vertices of `b` are appended after those of `a`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let na = a.vertex_count();
    let ia: Vec<_> = a.vertex_list();
    let ib: Vec<_> = b.vertex_list();
    let pos = |list: &[VertexId], v: VertexId| list.binary_search(&v).expect("live");
    let mut edges = Vec::new();
    for (u, v) in a.edges() {
        edges.push((pos(&ia, u), pos(&ia, v)));
    }
    for (u, v) in b.edges() {
        edges.push((na + pos(&ib, u), na + pos(&ib, v)));
    }
    Graph::from_edges(na + ib.len(), &edges)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Uniform-ish random simple cubic graph via the pairing model with restarts.
pub fn random_cubic<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 4 && n.is_multiple_of(2), "cubic graphs need an even order >= 4");
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(rng);
        let mut g = Graph::with_vertices(n);
        let mut ok = true;
        for pair in points.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v
                || !g
                    .add_edge(VertexId(u as u32), VertexId(v as u32))
                    .unwrap_or(false)
            {
                ok = false;
                break;
            }
        }
        if ok {
            return g;
        }
    }
}

/// Named fixtures used across the test suites.
pub fn named() -> Vec<(&'static str, Graph)> {
    vec![
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("C6", cycle(6)),
        ("C7", cycle(7)),
        ("K4", complete(4)),
        ("K5", complete(5)),
        ("K1,3", star(3)),
        ("Q3", cube()),
        ("Petersen", petersen()),
        ("Heawood", heawood()),
        ("McGee", mcgee()),
    ]
}
