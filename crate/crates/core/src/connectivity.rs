//! Exact local edge-connectivity, minimum cuts and Menger path systems.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::flow::{bounded_flow, FlowNetwork};
use crate::graph::{GraphError, MultiGraph, VertexId};
use crate::trail::Trail;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("source and sink are the same vertex {0}")]
    SameVertex(VertexId),
    #[error("the source {0} cannot also carry a demand")]
    DemandAtSource(VertexId),
    #[error("fan needs {required} edge-disjoint paths but only {achieved} exist; cut {side:?} has {cut_size} edges")]
    FanInfeasible {
        required: usize,
        achieved: usize,
        /// Source side of a cut that blocks the fan.
        side: BTreeSet<VertexId>,
        /// Number of host edges crossing `side`.
        cut_size: usize,
    },
}

/// Edge-cut `δ(side)` with the source inside `side`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    pub value: usize,
    pub side: BTreeSet<VertexId>,
}

/// Pairwise edge-disjoint trails.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PathSystem {
    pub trails: Vec<Trail>,
}

impl PathSystem {
    pub fn len(&self) -> usize {
        self.trails.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trails.is_empty()
    }

    /// Trails that end at `v`, in output order.
    pub fn ending_at(&self, v: VertexId) -> impl Iterator<Item = &Trail> + '_ {
        self.trails.iter().filter(move |t| t.end == v)
    }
}

fn check_pair(g: &MultiGraph, u: VertexId, v: VertexId) -> Result<(), FlowError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(FlowError::SameVertex(u));
    }
    Ok(())
}

/// Size of a smallest edge-cut separating `u` from `v` in an undirected graph.
pub fn edge_connectivity(g: &MultiGraph, u: VertexId, v: VertexId) -> Result<usize, FlowError> {
    if g.is_directed() {
        return Err(GraphError::ExpectedUndirected.into());
    }
    check_pair(g, u, v)?;
    Ok(bounded_flow(g, u, v, usize::MAX))
}

/// Maximum number of edge-disjoint directed paths from `u` to `v`.
pub fn directed_local_connectivity(
    d: &MultiGraph,
    u: VertexId,
    v: VertexId,
) -> Result<usize, FlowError> {
    if !d.is_directed() {
        return Err(GraphError::ExpectedDirected.into());
    }
    check_pair(d, u, v)?;
    Ok(bounded_flow(d, u, v, usize::MAX))
}

/// Minimum `u`-`v` cut of an undirected graph. The side is the set reachable
/// from `u` in the residual network of a maximum flow.
pub fn min_cut(g: &MultiGraph, u: VertexId, v: VertexId) -> Result<CutResult, FlowError> {
    if g.is_directed() {
        return Err(GraphError::ExpectedUndirected.into());
    }
    check_pair(g, u, v)?;
    let mut net = FlowNetwork::from_graph(g, 0);
    let value = net.max_flow(u, v, usize::MAX);
    let reach = net.residual_reach(u);
    let side: BTreeSet<VertexId> = g.vertices().filter(|&x| reach[x]).collect();
    debug_assert_eq!(g.cut_size(&reach[..g.vertex_count()]), value);
    Ok(CutResult { value, side })
}

/// A maximum system of edge-disjoint `u`-`v` paths (directed paths for digraphs).
pub fn edge_disjoint_paths(
    g: &MultiGraph,
    u: VertexId,
    v: VertexId,
) -> Result<PathSystem, FlowError> {
    check_pair(g, u, v)?;
    let mut net = FlowNetwork::from_graph(g, 0);
    net.max_flow(u, v, usize::MAX);
    let trails = net
        .decompose(u, v)
        .into_iter()
        .map(|(_, labels)| Trail {
            start: u,
            end: v,
            edges: labels.into_iter().map(|l| l.expect("no auxiliary arcs")).collect(),
        })
        .collect();
    Ok(PathSystem { trails })
}

/// Edge-disjoint paths from `source` with exactly `demands[v]` of them ending
/// at each demanded vertex `v`.
///
/// An auxiliary sink joined to every demanded vertex `v` by `demands[v]`
/// parallel arcs turns this into a single max-flow problem. The auxiliary
/// arcs never appear in the output. Trails are grouped by end vertex in
/// ascending order.
pub fn menger_fan(
    g: &MultiGraph,
    source: VertexId,
    demands: &BTreeMap<VertexId, usize>,
) -> Result<PathSystem, FlowError> {
    g.check_vertex(source)?;
    for &v in demands.keys() {
        g.check_vertex(v)?;
    }
    if demands.get(&source).is_some_and(|&d| d > 0) {
        return Err(FlowError::DemandAtSource(source));
    }
    let required: usize = demands.values().sum();
    let sink = g.vertex_count();
    let mut net = FlowNetwork::from_graph(g, 1);
    for (&v, &d) in demands {
        if d > 0 && v != source {
            net.add_arc(v, sink, d as u32);
        }
    }
    let achieved = net.max_flow(source, sink, required);
    if achieved < required {
        let reach = net.residual_reach(source);
        let mask = &reach[..g.vertex_count()];
        return Err(FlowError::FanInfeasible {
            required,
            achieved,
            side: g.vertices().filter(|&x| mask[x]).collect(),
            cut_size: g.cut_size(mask),
        });
    }
    let mut trails: Vec<Trail> = net
        .decompose(source, sink)
        .into_iter()
        .map(|(nodes, mut labels)| {
            // drop the auxiliary arc into the sink
            labels.pop();
            Trail {
                start: source,
                end: nodes[nodes.len() - 2],
                edges: labels.into_iter().map(|l| l.expect("graph arc")).collect(),
            }
        })
        .collect();
    trails.sort_by_key(|t| t.end);
    Ok(PathSystem { trails })
}

/// Smallest directed local connectivity over ordered vertex pairs, or `None`
/// for digraphs with fewer than two vertices.
pub fn strong_edge_connectivity(d: &MultiGraph) -> Result<Option<usize>, FlowError> {
    if !d.is_directed() {
        return Err(GraphError::ExpectedDirected.into());
    }
    if d.vertex_count() < 2 {
        return Ok(None);
    }
    // every cut separates vertex 0 from something, in one direction or the other
    let best = (1..d.vertex_count())
        .flat_map(|v| [(0, v), (v, 0)])
        .map(|(a, b)| bounded_flow(d, a, b, usize::MAX))
        .min();
    Ok(best)
}
