use std::collections::BTreeSet;

use super::TransformError;
use crate::flow::bounded_flow;
use crate::graph::{EdgeId, MultiGraph, ProvenanceMap, VertexId};

/// Finds an incoming/outgoing edge pair at `v` whose split keeps the directed
/// local connectivity of every ordered pair in `guard`.
///
/// Candidates are tried in ascending `(in, out)` id order and each trial
/// split is re-verified exactly; the first admissible pair is returned.
pub fn admissible_split(
    d: &MultiGraph,
    v: VertexId,
    guard: &[(VertexId, VertexId)],
) -> Result<(EdgeId, EdgeId), TransformError> {
    if !d.is_directed() || !d.is_eulerian() {
        return Err(TransformError::NotEulerian);
    }
    d.check_vertex(v)?;
    for &(a, b) in guard {
        d.check_vertex(a)?;
        d.check_vertex(b)?;
        if a == b || a == v || b == v {
            return Err(TransformError::BadGuardPair(a, b));
        }
    }
    let baseline: Vec<usize> = guard
        .iter()
        .map(|&(a, b)| bounded_flow(d, a, b, usize::MAX))
        .collect();
    find_admissible(d, v, guard, &baseline)
}

fn find_admissible(
    d: &MultiGraph,
    v: VertexId,
    guard: &[(VertexId, VertexId)],
    baseline: &[usize],
) -> Result<(EdgeId, EdgeId), TransformError> {
    let ins: Vec<EdgeId> = d.in_edges(v).filter(|e| !e.is_loop()).map(|e| e.id).collect();
    let outs: Vec<EdgeId> = d.out_edges(v).filter(|e| !e.is_loop()).map(|e| e.id).collect();
    if ins.is_empty() || outs.is_empty() {
        return Err(TransformError::NothingToSplit(v));
    }
    for &e_in in &ins {
        for &e_out in &outs {
            let trial = d.split_off_at(e_in, e_out, v)?.graph;
            let preserved = guard
                .iter()
                .zip(baseline)
                .all(|(&(a, b), &need)| bounded_flow(&trial, a, b, need) >= need);
            if preserved {
                return Ok((e_in, e_out));
            }
        }
    }
    Err(TransformError::NoAdmissiblePair(v))
}

/// A digraph on a terminal set together with the trails its edges stand for.
#[derive(Debug, Clone)]
pub struct ReducedDigraph {
    /// Vertex `i` is `terminals[i]` of the original digraph.
    pub graph: MultiGraph,
    /// Ascending original vertex ids.
    pub terminals: Vec<VertexId>,
    /// Edge ids of `graph` to trails of original edge ids.
    pub provenance: ProvenanceMap,
}

impl ReducedDigraph {
    pub fn local(&self, original: VertexId) -> Option<VertexId> {
        self.terminals.binary_search(&original).ok()
    }

    pub fn lift(&self, edge: EdgeId) -> Vec<EdgeId> {
        self.provenance.lift(edge)
    }
}

/// Splits every non-terminal vertex off completely while preserving the
/// directed local connectivity between all ordered terminal pairs.
///
/// Non-terminals are processed in ascending id order. Loops created by a
/// split are discarded together with their provenance.
pub fn reduce_to_terminals(
    d: &MultiGraph,
    terminals: &[VertexId],
) -> Result<ReducedDigraph, TransformError> {
    if !d.is_directed() || !d.is_eulerian() {
        return Err(TransformError::NotEulerian);
    }
    let mut seen = BTreeSet::new();
    for &s in terminals {
        d.check_vertex(s)?;
        if !seen.insert(s) {
            return Err(TransformError::DuplicateTerminal(s));
        }
    }
    if seen.len() < 2 {
        return Err(TransformError::TooFewTerminals(seen.len()));
    }
    let terminals: Vec<VertexId> = seen.iter().copied().collect();
    let guard: Vec<(VertexId, VertexId)> = terminals
        .iter()
        .flat_map(|&a| terminals.iter().filter(move |&&b| b != a).map(move |&b| (a, b)))
        .collect();
    let baseline: Vec<usize> = guard
        .iter()
        .map(|&(a, b)| bounded_flow(d, a, b, usize::MAX))
        .collect();

    let mut work = d.clone();
    let mut provenance = ProvenanceMap::new();
    for v in d.vertices().filter(|v| !seen.contains(v)) {
        while work.incident_edges(v).any(|e| !e.is_loop()) {
            let (e_in, e_out) = find_admissible(&work, v, &guard, &baseline)?;
            let split = work.split_off_at(e_in, e_out, v)?;
            provenance.absorb(&split.provenance);
            work = split.graph;
            if work.edge(split.edge).is_some_and(|e| e.is_loop()) {
                work = work.without_edges(&[split.edge]);
                provenance.forget(split.edge);
            }
        }
    }

    let graph = work.induced(&terminals)?;
    provenance.retain(|e| graph.edge(e).is_some());
    Ok(ReducedDigraph {
        graph,
        terminals,
        provenance,
    })
}
