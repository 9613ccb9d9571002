use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::pattern_edges;
use crate::graph::{EdgeId, MultiGraph, VertexId};
use crate::trail::{walk, WalkError};

/// A trail realizing pattern edge `from`-`to` (pattern vertex indices).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternTrail {
    pub from: usize,
    pub to: usize,
    pub edges: Vec<EdgeId>,
}

/// Immersion of `K_t` (or the bidirected `K_t` when `directed`) in a host.
///
/// Pattern vertex `i` maps to host vertex `terminals[i]`. Trails are stored
/// as host edge ids because parallel edges make vertex walks ambiguous.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImmersionCertificate {
    pub t: usize,
    pub directed: bool,
    pub terminals: Vec<VertexId>,
    pub trails: Vec<PatternTrail>,
}

impl ImmersionCertificate {
    pub fn trail(&self, from: usize, to: usize) -> Option<&PatternTrail> {
        self.trails.iter().find(|p| {
            (p.from, p.to) == (from, to) || (!self.directed && (p.from, p.to) == (to, from))
        })
    }

    /// Total number of host edges used by all trails.
    pub fn edge_count(&self) -> usize {
        self.trails.iter().map(|p| p.edges.len()).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateViolation {
    #[error("clique order {0} is below 2")]
    PatternTooSmall(usize),
    #[error("certificate directed={certificate} but host directed={host}")]
    DirectionMismatch { certificate: bool, host: bool },
    #[error("expected {expected} terminals, found {found}")]
    TerminalCount { expected: usize, found: usize },
    #[error("terminal {0} is not a host vertex")]
    UnknownTerminal(VertexId),
    #[error("terminal map is not injective: host vertex {0} used twice")]
    NotInjective(VertexId),
    #[error("({from}, {to}) is not an edge of the pattern")]
    NotAPatternEdge { from: usize, to: usize },
    #[error("pattern edge ({from}, {to}) has two trails")]
    DuplicatePatternEdge { from: usize, to: usize },
    #[error("pattern edge ({from}, {to}) has no trail")]
    MissingPatternEdge { from: usize, to: usize },
    #[error("trail for ({from}, {to}) is broken: {cause}")]
    BrokenTrail {
        from: usize,
        to: usize,
        cause: WalkError,
    },
    #[error("trail for ({from}, {to}) ends at {reached} instead of {expected}")]
    WrongEndpoint {
        from: usize,
        to: usize,
        reached: VertexId,
        expected: VertexId,
    },
    #[error("edge {edge} is used by trails for {first:?} and {second:?}")]
    SharedEdge {
        edge: EdgeId,
        first: (usize, usize),
        second: (usize, usize),
    },
}

/// Checks the terminal map, every trail, pairwise edge-disjointness and
/// pattern completeness, in that order. Returns the first violation.
pub fn verify_certificate(
    host: &MultiGraph,
    cert: &ImmersionCertificate,
) -> Result<(), CertificateViolation> {
    use CertificateViolation as V;

    if cert.t < 2 {
        return Err(V::PatternTooSmall(cert.t));
    }
    if cert.directed != host.is_directed() {
        return Err(V::DirectionMismatch {
            certificate: cert.directed,
            host: host.is_directed(),
        });
    }
    if cert.terminals.len() != cert.t {
        return Err(V::TerminalCount {
            expected: cert.t,
            found: cert.terminals.len(),
        });
    }
    let mut images = BTreeSet::new();
    for &v in &cert.terminals {
        if !host.contains_vertex(v) {
            return Err(V::UnknownTerminal(v));
        }
        if !images.insert(v) {
            return Err(V::NotInjective(v));
        }
    }

    let key = |from: usize, to: usize| {
        if cert.directed {
            (from, to)
        } else {
            (from.min(to), from.max(to))
        }
    };
    let mut owner: BTreeMap<EdgeId, (usize, usize)> = BTreeMap::new();
    let mut covered = BTreeSet::new();
    for p in &cert.trails {
        let (from, to) = (p.from, p.to);
        if from >= cert.t || to >= cert.t || from == to {
            return Err(V::NotAPatternEdge { from, to });
        }
        if !covered.insert(key(from, to)) {
            return Err(V::DuplicatePatternEdge { from, to });
        }
        let start = cert.terminals[from];
        let expected = cert.terminals[to];
        let vertices =
            walk(host, start, &p.edges).map_err(|cause| V::BrokenTrail { from, to, cause })?;
        let reached = *vertices.last().expect("walk includes its start");
        if reached != expected {
            return Err(V::WrongEndpoint {
                from,
                to,
                reached,
                expected,
            });
        }
        for &e in &p.edges {
            if let Some(&first) = owner.get(&e) {
                return Err(V::SharedEdge {
                    edge: e,
                    first,
                    second: (from, to),
                });
            }
            owner.insert(e, (from, to));
        }
    }

    for (from, to) in pattern_edges(cert.t, cert.directed) {
        if !covered.contains(&(from, to)) {
            return Err(V::MissingPatternEdge { from, to });
        }
    }
    Ok(())
}
