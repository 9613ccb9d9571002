//! Seeded fixtures shared by the benchmarks.

use immersion::generate::{random_eulerian_digraph, random_multigraph, simple_eulerian_min_outdeg};
use immersion::MultiGraph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn multigraph(n: usize, m: usize, seed: u64) -> MultiGraph {
    random_multigraph(n, m, &mut ChaCha8Rng::seed_from_u64(seed)).expect("n > 0")
}

pub fn eulerian(n: usize, m: usize, seed: u64) -> MultiGraph {
    random_eulerian_digraph(n, m, &mut ChaCha8Rng::seed_from_u64(seed)).expect("n > 0")
}

pub fn dense_simple(n: usize, floor: usize, seed: u64) -> MultiGraph {
    simple_eulerian_min_outdeg(n, floor, &mut ChaCha8Rng::seed_from_u64(seed)).expect("floor < n")
}

/// `k` vertices spread evenly over `0..n`.
pub fn spread_terminals(n: usize, k: usize) -> Vec<usize> {
    (0..k).map(|i| i * n / k).collect()
}
