//! Digraph reductions: connectivity-preserving splitting off and packings
//! of edge-disjoint arborescences.

mod arborescence;
mod splitting;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::connectivity::FlowError;
use crate::graph::{EdgeId, GraphError, VertexId};

pub use arborescence::{arborescence_path, pack_arborescences, Arborescence};
pub use splitting::{admissible_split, reduce_to_terminals, ReducedDigraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Flow(#[from] FlowError),
    #[error("digraph is not Eulerian")]
    NotEulerian,
    #[error("vertex {0} has no non-loop edges to split off")]
    NothingToSplit(VertexId),
    #[error("guard pair ({0}, {1}) must avoid the split vertex and use distinct vertices")]
    BadGuardPair(VertexId, VertexId),
    #[error("internal invariant violated: no admissible split exists at vertex {0}")]
    NoAdmissiblePair(VertexId),
    #[error("need at least two terminals, got {0}")]
    TooFewTerminals(usize),
    #[error("terminal {0} listed twice")]
    DuplicateTerminal(VertexId),
    #[error("cannot pack the arborescences: {in_degree} edges enter {side:?} but {required} arborescences must")]
    PackingInfeasible {
        side: BTreeSet<VertexId>,
        in_degree: usize,
        required: usize,
    },
    #[error("internal invariant violated: arborescence {0} cannot be extended")]
    PackingStalled(usize),
    #[error("target {0} is the root of the arborescence")]
    TargetIsRoot(VertexId),
    #[error("vertex {0} is not spanned by the arborescence")]
    NotSpanned(VertexId),
    #[error("invalid arborescence: {0}")]
    InvalidArborescence(String),
    #[error("edge {0} is used twice")]
    SharedEdge(EdgeId),
}
