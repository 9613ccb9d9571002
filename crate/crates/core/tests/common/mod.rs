//! Independent brute-force oracles and instance sources shared by the
//! integration tests. Nothing here calls into the flow or tree code.

#![allow(dead_code)]

use immersion::generate::{random_eulerian_digraph, random_multigraph};
use immersion::{MultiGraph, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Edges with exactly one end in the subset encoded by `mask` (both directions).
pub fn crossing(g: &MultiGraph, mask: u32) -> usize {
    g.edges()
        .iter()
        .filter(|e| ((mask >> e.tail) & 1) != ((mask >> e.head) & 1))
        .count()
}

/// Edges leaving the subset encoded by `mask`.
pub fn leaving(g: &MultiGraph, mask: u32) -> usize {
    g.edges()
        .iter()
        .filter(|e| (mask >> e.tail) & 1 == 1 && (mask >> e.head) & 1 == 0)
        .count()
}

/// Minimum `|δ(X)|` over all `X` with `u ∈ X`, `v ∉ X`, by enumeration.
pub fn brute_min_cut(g: &MultiGraph, u: VertexId, v: VertexId) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|m| (m >> u) & 1 == 1 && (m >> v) & 1 == 0)
        .map(|m| crossing(g, m))
        .min()
        .expect("at least one separating set")
}

/// Minimum number of edges leaving `X` over all `X` with `u ∈ X`, `v ∉ X`.
pub fn brute_directed_cut(d: &MultiGraph, u: VertexId, v: VertexId) -> usize {
    let n = d.vertex_count();
    (0u32..1 << n)
        .filter(|m| (m >> u) & 1 == 1 && (m >> v) & 1 == 0)
        .map(|m| leaving(d, m))
        .min()
        .expect("at least one separating set")
}

pub fn small_multigraph(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize) -> MultiGraph {
    let n = rng.random_range(1..=max_n);
    let m = rng.random_range(0..=max_m);
    random_multigraph(n, m, rng).unwrap()
}

pub fn small_eulerian(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize, max_m: usize) -> MultiGraph {
    let n = rng.random_range(min_n..=max_n);
    let m = rng.random_range(0..=max_m);
    random_eulerian_digraph(n, m, rng).unwrap()
}

pub fn complete(n: usize) -> MultiGraph {
    let mut g = MultiGraph::undirected(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}
