#![allow(dead_code)]

use abfactor::graph::Graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Graphs on `min..=max` vertices with independent fair-coin edges.
pub fn graphs(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let edges: Vec<_> = pairs(n).zip(bits).filter(|(_, keep)| *keep).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = pairs(n).filter(|_| rng.random_bool(p)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connectivity by breadth-first search over the vertices flagged `alive`.
pub fn connected_among(g: &Graph, alive: &[bool]) -> bool {
    let Some(start) = (0..g.vertex_count()).find(|&v| alive[v]) else {
        return true;
    };
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if alive[w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (0..g.vertex_count()).all(|v| !alive[v] || seen[v])
}

/// min |[X, V − X]| over non-empty proper subsets X.
pub fn brute_edge_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    (1..(1u32 << n) - 1)
        .map(|x| g.edges().filter(|&(u, v)| (x >> u & 1) != (x >> v & 1)).count())
        .min()
        .unwrap()
}

/// Smallest separating set, or n − 1 for complete graphs.
pub fn brute_vertex_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut best = n - 1;
    for removed in 0u32..1 << n {
        let size = removed.count_ones() as usize;
        if size >= best || n - size < 2 {
            continue;
        }
        let alive: Vec<bool> = (0..n).map(|v| removed >> v & 1 == 0).collect();
        if !connected_among(g, &alive) {
            best = size;
        }
    }
    best
}

/// Maximum matching size by exhaustive recursion over edges.
pub fn brute_matching(nodes: usize, edges: &[(usize, usize)]) -> usize {
    fn go(edges: &[(usize, usize)], used: &mut Vec<bool>) -> usize {
        let Some((&(u, v), rest)) = edges.split_first() else {
            return 0;
        };
        let skip = go(rest, used);
        if used[u] || used[v] {
            return skip;
        }
        used[u] = true;
        used[v] = true;
        let take = 1 + go(rest, used);
        used[u] = false;
        used[v] = false;
        skip.max(take)
    }
    go(edges, &mut vec![false; nodes])
}
