//! Edge-id trails: walking them through a host graph and shortening them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeId, MultiGraph, VertexId};

/// An edge-id sequence from `start` to `end`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trail {
    pub start: VertexId,
    pub end: VertexId,
    pub edges: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("edge {0} is not in the host")]
    UnknownEdge(EdgeId),
    #[error("edge {edge} is not incident to vertex {at}")]
    NotIncident { edge: EdgeId, at: VertexId },
    #[error("edge {edge} is traversed against its direction at vertex {at}")]
    WrongDirection { edge: EdgeId, at: VertexId },
}

/// Vertex sequence visited by following `edges` from `start`.
/// Digraph edges must be traversed tail to head.
pub fn walk(g: &MultiGraph, start: VertexId, edges: &[EdgeId]) -> Result<Vec<VertexId>, WalkError> {
    let mut vertices = Vec::with_capacity(edges.len() + 1);
    vertices.push(start);
    let mut at = start;
    for &id in edges {
        let e = g.edge(id).ok_or(WalkError::UnknownEdge(id))?;
        at = if g.is_directed() {
            if e.tail == at {
                e.head
            } else if e.head == at {
                return Err(WalkError::WrongDirection { edge: id, at });
            } else {
                return Err(WalkError::NotIncident { edge: id, at });
            }
        } else {
            e.opposite(at)
                .ok_or(WalkError::NotIncident { edge: id, at })?
        };
        vertices.push(at);
    }
    Ok(vertices)
}

/// Removes closed sub-walks so that no vertex repeats. The result uses a
/// subset of the input edges and has the same endpoints.
pub fn shortcut(vertices: &[VertexId], edges: &[EdgeId]) -> Vec<EdgeId> {
    debug_assert_eq!(vertices.len(), edges.len() + 1);
    let mut kept_vertices = vec![vertices[0]];
    let mut kept_edges = Vec::new();
    for (&e, &v) in edges.iter().zip(&vertices[1..]) {
        if let Some(pos) = kept_vertices.iter().position(|&x| x == v) {
            kept_vertices.truncate(pos + 1);
            kept_edges.truncate(pos);
        } else {
            kept_vertices.push(v);
            kept_edges.push(e);
        }
    }
    kept_edges
}

/// Reverses an undirected walk given by its vertices and edges.
pub(crate) fn reversed(vertices: &[VertexId], edges: &[EdgeId]) -> (Vec<VertexId>, Vec<EdgeId>) {
    (
        vertices.iter().rev().copied().collect(),
        edges.iter().rev().copied().collect(),
    )
}
