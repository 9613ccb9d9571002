//! Exhaustive immersion search for tiny hosts, used as an independent check.

use itertools::Itertools;

use super::{check_order, pattern_edges, EngineError, ImmersionCertificate, PatternTrail};
use crate::graph::{EdgeId, GraphError, MultiGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest number of non-loop host edges the search accepts.
    pub max_edges: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_edges: 12 }
    }
}

struct Search<'a> {
    // per vertex: (edge slot, neighbour), ascending edge id
    adjacency: Vec<Vec<(usize, VertexId)>>,
    ids: Vec<EdgeId>,
    used: Vec<bool>,
    pattern: &'a [(usize, usize)],
    terminals: Vec<VertexId>,
    chosen: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn assign(&mut self, k: usize) -> bool {
        if k == self.pattern.len() {
            return true;
        }
        let (from, to) = self.pattern[k];
        let (s, t) = (self.terminals[from], self.terminals[to]);
        let mut on_path = vec![false; self.adjacency.len()];
        on_path[s] = true;
        let mut path = Vec::new();
        self.extend(k, s, t, &mut on_path, &mut path)
    }

    /// Enumerates vertex-simple paths from `at` to `target` over unused edges,
    /// recursing into the next pattern edge for each complete path.
    fn extend(
        &mut self,
        k: usize,
        at: VertexId,
        target: VertexId,
        on_path: &mut Vec<bool>,
        path: &mut Vec<usize>,
    ) -> bool {
        if at == target {
            self.chosen.push(path.clone());
            if self.assign(k + 1) {
                return true;
            }
            self.chosen.pop();
            return false;
        }
        for idx in 0..self.adjacency[at].len() {
            let (slot, next) = self.adjacency[at][idx];
            if self.used[slot] || on_path[next] {
                continue;
            }
            self.used[slot] = true;
            on_path[next] = true;
            path.push(slot);
            if self.extend(k, next, target, on_path, path) {
                return true;
            }
            path.pop();
            on_path[next] = false;
            self.used[slot] = false;
        }
        false
    }
}

/// Searches every terminal set and every assignment of edge-disjoint paths
/// to the edges of `K_t` (bidirected `K_t` when `directed`).
///
/// Returns `Ok(None)` only after exhausting the search. Both patterns are
/// vertex-transitive, so terminal sets are enumerated as ascending subsets.
pub fn brute_force_immersion(
    t: usize,
    host: &MultiGraph,
    directed: bool,
    limits: OracleLimits,
) -> Result<Option<ImmersionCertificate>, EngineError> {
    check_order(t)?;
    if directed != host.is_directed() {
        return Err(if directed {
            GraphError::ExpectedDirected
        } else {
            GraphError::ExpectedUndirected
        }
        .into());
    }
    let edges: Vec<_> = host.edges().iter().filter(|e| !e.is_loop()).copied().collect();
    if edges.len() > limits.max_edges {
        return Err(EngineError::TooLarge {
            edges: edges.len(),
            limit: limits.max_edges,
        });
    }
    let pattern = pattern_edges(t, directed);
    if edges.len() < pattern.len() || host.vertex_count() < t {
        return Ok(None);
    }

    let n = host.vertex_count();
    let mut adjacency = vec![Vec::new(); n];
    let mut out_deg = vec![0; n];
    let mut in_deg = vec![0; n];
    for (slot, e) in edges.iter().enumerate() {
        adjacency[e.tail].push((slot, e.head));
        out_deg[e.tail] += 1;
        in_deg[e.head] += 1;
        if !directed {
            adjacency[e.head].push((slot, e.tail));
        }
    }
    // each terminal needs t-1 edges leaving (and, directed, entering) it
    let eligible: Vec<VertexId> = (0..n)
        .filter(|&v| {
            if directed {
                out_deg[v] >= t - 1 && in_deg[v] >= t - 1
            } else {
                out_deg[v] + in_deg[v] >= t - 1
            }
        })
        .collect();

    for terminals in eligible.into_iter().combinations(t) {
        let mut search = Search {
            adjacency: adjacency.clone(),
            ids: edges.iter().map(|e| e.id).collect(),
            used: vec![false; edges.len()],
            pattern: &pattern,
            terminals,
            chosen: Vec::new(),
        };
        if search.assign(0) {
            let trails = pattern
                .iter()
                .zip(&search.chosen)
                .map(|(&(from, to), slots)| PatternTrail {
                    from,
                    to,
                    edges: slots.iter().map(|&s| search.ids[s]).collect(),
                })
                .collect();
            return Ok(Some(ImmersionCertificate {
                t,
                directed,
                terminals: search.terminals,
                trails,
            }));
        }
    }
    Ok(None)
}
