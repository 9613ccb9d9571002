use std::collections::{BTreeMap, BTreeSet};

use super::{check_order, EngineError, ImmersionCertificate, Mode, PatternTrail};
use crate::connectivity::{edge_connectivity, menger_fan, min_cut, FlowError};
use crate::graph::{EdgeId, GraphError, MultiGraph, VertexId};
use crate::trail::{reversed, shortcut, walk};
use crate::transform::{pack_arborescences, reduce_to_terminals};

fn check_terminals(g: &MultiGraph, terminals: &[VertexId]) -> Result<usize, EngineError> {
    let t = terminals.len();
    check_order(t)?;
    let mut seen = BTreeSet::new();
    for &v in terminals {
        g.check_vertex(v)?;
        if !seen.insert(v) {
            return Err(EngineError::DuplicateTerminal(v));
        }
    }
    Ok(t)
}

/// `K_t` immersion on the given terminals of an undirected multigraph whose
/// terminals are pairwise `(t-1)^2`-edge-connected.
///
/// A Menger fan from `terminals[0]` with `t-1` paths to every other terminal
/// realizes `H_t`; the paths are then composed as in the `H_t` routing:
/// `Q(j, i)` denotes the fan path to terminal `j` labelled `i`, pattern edge
/// `(0, j)` is `Q(j, 0)` and `(i, j)` is `Q(i, j)` reversed followed by
/// `Q(j, i)`, shortcut to a path.
pub fn extract_clique_immersion(
    g: &MultiGraph,
    terminals: &[VertexId],
) -> Result<ImmersionCertificate, EngineError> {
    if g.is_directed() {
        return Err(GraphError::ExpectedUndirected.into());
    }
    let t = check_terminals(g, terminals)?;
    let source = terminals[0];
    let demands: BTreeMap<VertexId, usize> = terminals[1..].iter().map(|&v| (v, t - 1)).collect();
    let fan = match menger_fan(g, source, &demands) {
        Ok(fan) => fan,
        Err(FlowError::FanInfeasible { side, cut_size, .. }) => {
            return Err(EngineError::ViolatedCut {
                side,
                size: cut_size,
                required: Mode::Undirected.threshold(t),
            })
        }
        Err(e) => return Err(e.into()),
    };

    // q[(j, i)]: fan path to terminal j carrying label i, as (vertices, edges)
    let mut q: BTreeMap<(usize, usize), (Vec<VertexId>, Vec<EdgeId>)> = BTreeMap::new();
    for j in 1..t {
        let labels = (0..t).filter(|&i| i != j);
        for (i, trail) in labels.zip(fan.ending_at(terminals[j])) {
            let vertices = walk(g, source, &trail.edges).expect("fan trails are walks");
            q.insert((j, i), (vertices, trail.edges.clone()));
        }
    }

    let mut trails = Vec::new();
    for i in 0..t {
        for j in i + 1..t {
            let edges = if i == 0 {
                q[&(j, 0)].1.clone()
            } else {
                let (vi, ei) = &q[&(i, j)];
                let (vj, ej) = &q[&(j, i)];
                let (mut vertices, mut edges) = reversed(vi, ei);
                vertices.extend_from_slice(&vj[1..]);
                edges.extend_from_slice(ej);
                shortcut(&vertices, &edges)
            };
            trails.push(PatternTrail { from: i, to: j, edges });
        }
    }
    Ok(ImmersionCertificate {
        t,
        directed: false,
        terminals: terminals.to_vec(),
        trails,
    })
}

/// Bidirected `K_t` immersion on the given terminals of an Eulerian digraph
/// in which every underlying cut separating two terminals has at least
/// `2t(t-1)` edges.
///
/// All other vertices are split off, `t(t-1)` arborescences are packed with
/// every terminal rooting `t-1` of them, and the `k`-th arborescence of
/// terminal `i` supplies the path to the `k`-th other terminal in ascending
/// id order. Paths are lifted back through the split provenance.
pub fn extract_directed_clique_immersion(
    d: &MultiGraph,
    terminals: &[VertexId],
) -> Result<ImmersionCertificate, EngineError> {
    if !d.is_directed() || !d.is_eulerian() {
        return Err(EngineError::NotEulerian);
    }
    let t = check_terminals(d, terminals)?;
    let required = Mode::Directed.threshold(t);
    let underlying = d.underlying();
    for (a, &u) in terminals.iter().enumerate() {
        for &v in &terminals[a + 1..] {
            if edge_connectivity(&underlying, u, v)? < required {
                let cut = min_cut(&underlying, u, v)?;
                return Err(EngineError::ViolatedCut {
                    side: cut.side,
                    size: cut.value,
                    required,
                });
            }
        }
    }

    let reduced = reduce_to_terminals(d, terminals)?;
    let local: Vec<VertexId> = terminals
        .iter()
        .map(|&v| reduced.local(v).expect("terminal survives reduction"))
        .collect();
    let roots: Vec<VertexId> = local
        .iter()
        .flat_map(|&r| std::iter::repeat_n(r, t - 1))
        .collect();
    let arborescences = pack_arborescences(&reduced.graph, &roots)?;

    let mut trails = Vec::new();
    for i in 0..t {
        let mut targets: Vec<usize> = (0..t).filter(|&j| j != i).collect();
        targets.sort_by_key(|&j| terminals[j]);
        let own = &arborescences[i * (t - 1)..(i + 1) * (t - 1)];
        for (arb, &j) in own.iter().zip(&targets) {
            let path = arb.path_to(&reduced.graph, local[j])?;
            let lifted: Vec<EdgeId> = path.iter().flat_map(|&e| reduced.lift(e)).collect();
            let vertices = walk(d, terminals[i], &lifted).expect("lifted paths are directed trails");
            trails.push(PatternTrail {
                from: i,
                to: j,
                edges: shortcut(&vertices, &lifted),
            });
        }
    }
    trails.sort_by_key(|p| (p.from, p.to));
    Ok(ImmersionCertificate {
        t,
        directed: true,
        terminals: terminals.to_vec(),
        trails,
    })
}
