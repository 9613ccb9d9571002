//! Decompose-or-certify pipelines for clique immersions.
//!
//! For an undirected multigraph and `t >= 2` the pipeline either returns a
//! laminar family of Gomory-Hu cuts of size below `(t-1)^2` whose blocks all
//! have fewer than `t` vertices, or a `K_t` immersion certificate. Eulerian
//! digraphs get the same treatment with threshold `2t(t-1)` and a
//! bidirected `K_t` certificate.

mod certificate;
mod decomposition;
mod extract;
mod ht;
mod oracle;
mod pipeline;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::connectivity::FlowError;
use crate::graph::{GraphError, VertexId};
use crate::transform::TransformError;

pub use certificate::{verify_certificate, CertificateViolation, ImmersionCertificate, PatternTrail};
pub use decomposition::{
    verify_decomposition, DecompositionViolation, LaminarDecomposition, SelectedCut,
};
pub use extract::{extract_clique_immersion, extract_directed_clique_immersion};
pub use ht::{h_t_route, HtGraph};
pub use oracle::{brute_force_immersion, OracleLimits};
pub use pipeline::{decompose_directed, decompose_undirected};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Undirected,
    Directed,
}

impl Mode {
    pub fn of(directed: bool) -> Mode {
        if directed {
            Mode::Directed
        } else {
            Mode::Undirected
        }
    }

    pub fn is_directed(self) -> bool {
        self == Mode::Directed
    }

    /// Cut-size bound: `(t-1)^2` undirected, `2t(t-1)` directed.
    pub fn threshold(self, t: usize) -> usize {
        match self {
            Mode::Undirected => (t - 1) * (t - 1),
            Mode::Directed => 2 * t * (t - 1),
        }
    }
}

/// What a decompose pipeline returns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Decomposition(LaminarDecomposition),
    Certificate(ImmersionCertificate),
}

impl Outcome {
    pub fn is_certificate(&self) -> bool {
        matches!(self, Outcome::Certificate(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Flow(#[from] FlowError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error("clique order must be at least 2, got {0}")]
    PatternTooSmall(usize),
    #[error("digraph is not Eulerian")]
    NotEulerian,
    #[error("expected {expected} terminals, got {found}")]
    TerminalCount { expected: usize, found: usize },
    #[error("terminal {0} listed twice")]
    DuplicateTerminal(VertexId),
    #[error("cut {side:?} has {size} edges, below the required {required}")]
    ViolatedCut {
        side: BTreeSet<VertexId>,
        size: usize,
        required: usize,
    },
    #[error("host has {edges} edges, above the brute-force limit of {limit}")]
    TooLarge { edges: usize, limit: usize },
}

pub(crate) fn check_order(t: usize) -> Result<(), EngineError> {
    if t < 2 {
        Err(EngineError::PatternTooSmall(t))
    } else {
        Ok(())
    }
}

/// Pattern edges of `K_t` (unordered, `i < j`) or the bidirected `K_t`
/// (all ordered pairs).
pub(crate) fn pattern_edges(t: usize, directed: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..t {
        for j in 0..t {
            if i != j && (directed || i < j) {
                out.push((i, j));
            }
        }
    }
    out
}
