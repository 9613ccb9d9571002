//! Seeded random instance families for tests, benchmarks and the CLI.

use std::fmt;
use std::str::FromStr;

use rand::seq::{index, SliceRandom};
use rand::Rng;
use thiserror::Error;

use crate::graph::MultiGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    RandomMultigraph,
    RandomEulerianDigraph,
    SimpleEulerianMinOutdeg,
}

impl Family {
    pub const ALL: [Family; 3] = [
        Family::RandomMultigraph,
        Family::RandomEulerianDigraph,
        Family::SimpleEulerianMinOutdeg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::RandomMultigraph => "random-multigraph",
            Family::RandomEulerianDigraph => "random-eulerian-digraph",
            Family::SimpleEulerianMinOutdeg => "simple-eulerian-min-outdeg",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| GenerateError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

/// `m` edges with endpoints drawn uniformly; loops and parallels may occur.
pub fn random_multigraph<R: Rng>(n: usize, m: usize, rng: &mut R) -> Result<MultiGraph, GenerateError> {
    if n == 0 && m > 0 {
        return Err(GenerateError::Infeasible("edges need at least one vertex".into()));
    }
    let mut g = MultiGraph::undirected(n);
    for _ in 0..m {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        g.add_edge(u, v).expect("in range");
    }
    Ok(g)
}

/// Superposition of random directed cycles on distinct vertices with exactly
/// `m` edges in total. A single leftover edge becomes a loop.
pub fn random_eulerian_digraph<R: Rng>(
    n: usize,
    m: usize,
    rng: &mut R,
) -> Result<MultiGraph, GenerateError> {
    if n == 0 && m > 0 {
        return Err(GenerateError::Infeasible("edges need at least one vertex".into()));
    }
    let mut d = MultiGraph::directed(n);
    while d.edge_count() < m {
        let remaining = m - d.edge_count();
        let longest = n.min(remaining);
        if longest < 2 {
            let v = rng.random_range(0..n);
            d.add_edge(v, v).expect("in range");
            continue;
        }
        let len = rng.random_range(2..=longest);
        let cycle = index::sample(rng, n, len).into_vec();
        for (i, &u) in cycle.iter().enumerate() {
            d.add_edge(u, cycle[(i + 1) % len]).expect("in range");
        }
    }
    debug_assert!(d.is_eulerian());
    Ok(d)
}

/// Simple Eulerian digraph on `n` vertices with every out-degree equal to
/// `floor`, built from `floor` arc-disjoint random Hamiltonian cycles.
///
/// Each cycle is drawn by randomized backtracking over the arcs not used by
/// earlier cycles; if a draw gets stuck the whole attempt restarts.
pub fn simple_eulerian_min_outdeg<R: Rng>(
    n: usize,
    floor: usize,
    rng: &mut R,
) -> Result<MultiGraph, GenerateError> {
    if floor >= n {
        return Err(GenerateError::Infeasible(format!(
            "min out-degree {floor} needs more than {n} vertices in a simple digraph"
        )));
    }
    if floor > 0 && n < 2 {
        return Err(GenerateError::Infeasible("need at least two vertices".into()));
    }
    const ATTEMPTS: usize = 200;
    for _ in 0..ATTEMPTS {
        let mut used = vec![vec![false; n]; n];
        let mut cycles = Vec::with_capacity(floor);
        for _ in 0..floor {
            match random_hamiltonian_cycle(n, &used, rng) {
                Some(cycle) => {
                    for i in 0..n {
                        used[cycle[i]][cycle[(i + 1) % n]] = true;
                    }
                    cycles.push(cycle);
                }
                None => break,
            }
        }
        if cycles.len() == floor {
            let mut d = MultiGraph::directed(n);
            for cycle in &cycles {
                for i in 0..n {
                    d.add_edge(cycle[i], cycle[(i + 1) % n]).expect("in range");
                }
            }
            debug_assert!(d.is_eulerian());
            return Ok(d);
        }
    }
    Err(GenerateError::Infeasible(format!(
        "no {floor} arc-disjoint Hamiltonian cycles found on {n} vertices"
    )))
}

fn random_hamiltonian_cycle<R: Rng>(n: usize, used: &[Vec<bool>], rng: &mut R) -> Option<Vec<usize>> {
    // node budget keeps hopeless draws short
    let mut budget = 20_000usize;
    let start = rng.random_range(0..n);
    let mut path = vec![start];
    let mut on_path = vec![false; n];
    on_path[start] = true;
    if extend_cycle(n, used, rng, &mut path, &mut on_path, &mut budget) {
        Some(path)
    } else {
        None
    }
}

fn extend_cycle<R: Rng>(
    n: usize,
    used: &[Vec<bool>],
    rng: &mut R,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    budget: &mut usize,
) -> bool {
    let last = *path.last().expect("nonempty");
    if path.len() == n {
        return !used[last][path[0]];
    }
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    let mut next: Vec<usize> = (0..n).filter(|&v| !on_path[v] && !used[last][v]).collect();
    next.shuffle(rng);
    for v in next {
        path.push(v);
        on_path[v] = true;
        if extend_cycle(n, used, rng, path, on_path, budget) {
            return true;
        }
        on_path[v] = false;
        path.pop();
    }
    false
}
