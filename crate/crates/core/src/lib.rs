//! Laminar cut decompositions and clique immersion certificates.
//!
//! Given a multigraph and `t >= 2`, [`decompose_undirected`] either returns a
//! laminar family of small Gomory-Hu cuts whose blocks have fewer than `t`
//! vertices, or an explicit `K_t` immersion. [`decompose_directed`] does the
//! same for Eulerian digraphs and bidirected cliques. Both outcomes come with
//! independent verifiers, and [`brute_force_immersion`] provides an
//! exhaustive oracle for tiny hosts.

pub mod connectivity;
mod flow;
pub mod generate;
pub mod gomory_hu;
pub mod graph;
pub mod immersion;
pub mod laminar;
pub mod trail;
pub mod transform;

pub use connectivity::{
    directed_local_connectivity, edge_connectivity, edge_disjoint_paths, menger_fan, min_cut,
    strong_edge_connectivity, CutResult, FlowError, PathSystem,
};
pub use gomory_hu::{build_gomory_hu, GomoryHuTree, TreeEdge};
pub use graph::{
    parse_graph, EdgeId, EdgeRecord, GraphError, MultiGraph, ParseError, ProvenanceMap, VertexId,
};
pub use immersion::{
    brute_force_immersion, decompose_directed, decompose_undirected, extract_clique_immersion,
    extract_directed_clique_immersion, h_t_route, verify_certificate, verify_decomposition,
    EngineError, ImmersionCertificate, LaminarDecomposition, Mode, OracleLimits, Outcome,
};
pub use trail::Trail;
pub use transform::{
    admissible_split, pack_arborescences, reduce_to_terminals, Arborescence, ReducedDigraph,
};
