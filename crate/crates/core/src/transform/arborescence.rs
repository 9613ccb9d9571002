use std::collections::BTreeSet;

use super::TransformError;
use crate::flow::FlowNetwork;
use crate::graph::{EdgeId, MultiGraph, VertexId};

/// Spanning arborescence of a host digraph, directed away from `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arborescence {
    pub root: VertexId,
    pub edges: BTreeSet<EdgeId>,
}

impl Arborescence {
    /// Checks that the edges form a spanning arborescence of `host` rooted at `root`.
    pub fn validate(&self, host: &MultiGraph) -> Result<(), TransformError> {
        let n = host.vertex_count();
        host.check_vertex(self.root)?;
        let mut parent = vec![None; n];
        for &id in &self.edges {
            let e = host
                .edge(id)
                .ok_or_else(|| TransformError::InvalidArborescence(format!("unknown edge {id}")))?;
            if e.head == self.root {
                return Err(TransformError::InvalidArborescence(format!(
                    "edge {id} enters the root"
                )));
            }
            if parent[e.head].replace(e.tail).is_some() {
                return Err(TransformError::InvalidArborescence(format!(
                    "vertex {} has two incoming edges",
                    e.head
                )));
            }
        }
        for v in host.vertices() {
            if v == self.root {
                continue;
            }
            // climb to the root; more than n steps means a cycle
            let mut x = v;
            let mut steps = 0;
            while x != self.root {
                x = parent[x].ok_or(TransformError::NotSpanned(v))?;
                steps += 1;
                if steps > n {
                    return Err(TransformError::InvalidArborescence(format!(
                        "vertex {v} lies on a cycle"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The unique directed path from the root to `target` inside the arborescence.
    pub fn path_to(&self, host: &MultiGraph, target: VertexId) -> Result<Vec<EdgeId>, TransformError> {
        arborescence_path(self, host, target)
    }
}

/// The unique root-to-`target` path of `arb`, as host edge ids in path order.
pub fn arborescence_path(
    arb: &Arborescence,
    host: &MultiGraph,
    target: VertexId,
) -> Result<Vec<EdgeId>, TransformError> {
    host.check_vertex(target)?;
    if target == arb.root {
        return Err(TransformError::TargetIsRoot(target));
    }
    let mut into = vec![None; host.vertex_count()];
    for &id in &arb.edges {
        let e = host.edge(id).ok_or(crate::graph::GraphError::UnknownEdge(id))?;
        into[e.head] = Some(*e);
    }
    let mut path = Vec::new();
    let mut x = target;
    while x != arb.root {
        let e = into[x].ok_or(TransformError::NotSpanned(target))?;
        path.push(e.id);
        x = e.tail;
        if path.len() > host.vertex_count() {
            return Err(TransformError::InvalidArborescence(format!(
                "no root path to {target}"
            )));
        }
    }
    path.reverse();
    Ok(path)
}

struct Packing<'a> {
    host: &'a MultiGraph,
    roots: &'a [VertexId],
    spanned: Vec<Vec<bool>>,
    used: Vec<bool>,
}

impl Packing<'_> {
    /// Branching condition for completing the partial packing: every
    /// nonempty `X` receives, from unused edges, at least as many edges as
    /// there are partial arborescences disjoint from `X`. Checked per sink
    /// `x` by one max-flow from a super-source through one node per
    /// arborescence. Returns a violating `X` if any.
    fn violation(&self) -> Option<(BTreeSet<VertexId>, usize, usize)> {
        let n = self.host.vertex_count();
        let k = self.roots.len();
        for x in 0..n {
            if self.spanned.iter().all(|s| s[x]) {
                continue;
            }
            let source = n + k;
            let mut net = FlowNetwork::with_nodes(n + k + 1);
            for (pos, e) in self.host.edges().iter().enumerate() {
                if !self.used[pos] && !e.is_loop() {
                    net.add_arc(e.tail, e.head, 1);
                }
            }
            for (i, spanned) in self.spanned.iter().enumerate() {
                net.add_arc(source, n + i, 1);
                for v in 0..n {
                    if spanned[v] {
                        net.add_arc(n + i, v, k as u32 + 1);
                    }
                }
            }
            if net.max_flow(source, x, k) < k {
                let reach = net.residual_reach(source);
                let side: BTreeSet<VertexId> = (0..n).filter(|&v| !reach[v]).collect();
                let in_degree = self
                    .host
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|(pos, e)| {
                        !self.used[*pos] && !side.contains(&e.tail) && side.contains(&e.head)
                    })
                    .count();
                let required = self
                    .spanned
                    .iter()
                    .filter(|s| side.iter().all(|&v| !s[v]))
                    .count();
                return Some((side, in_degree, required));
            }
        }
        None
    }
}

/// Packs pairwise edge-disjoint spanning arborescences, the `i`-th rooted at
/// `roots[i]`.
///
/// The arborescences are grown one edge at a time; an edge is kept only if
/// the partial packing can still be completed, which is re-checked exactly
/// with max-flow. Feasibility holds whenever the digraph is strongly
/// `roots.len()`-edge-connected; otherwise a cut with too few entering
/// edges is reported.
pub fn pack_arborescences(
    d: &MultiGraph,
    roots: &[VertexId],
) -> Result<Vec<Arborescence>, TransformError> {
    if !d.is_directed() {
        return Err(crate::graph::GraphError::ExpectedDirected.into());
    }
    for &r in roots {
        d.check_vertex(r)?;
    }
    let n = d.vertex_count();
    let mut packing = Packing {
        host: d,
        roots,
        spanned: roots
            .iter()
            .map(|&r| (0..n).map(|v| v == r).collect())
            .collect(),
        used: vec![false; d.edge_count()],
    };
    if let Some((side, in_degree, required)) = packing.violation() {
        return Err(TransformError::PackingInfeasible {
            side,
            in_degree,
            required,
        });
    }

    let mut chosen: Vec<BTreeSet<EdgeId>> = vec![BTreeSet::new(); roots.len()];
    for i in 0..roots.len() {
        while packing.spanned[i].iter().any(|&s| !s) {
            let mut grown = false;
            for (pos, e) in d.edges().iter().enumerate() {
                if packing.used[pos] || !packing.spanned[i][e.tail] || packing.spanned[i][e.head] {
                    continue;
                }
                packing.used[pos] = true;
                packing.spanned[i][e.head] = true;
                if packing.violation().is_none() {
                    chosen[i].insert(e.id);
                    grown = true;
                    break;
                }
                packing.used[pos] = false;
                packing.spanned[i][e.head] = false;
            }
            if !grown {
                return Err(TransformError::PackingStalled(i));
            }
        }
    }

    Ok(roots
        .iter()
        .zip(chosen)
        .map(|(&root, edges)| Arborescence { root, edges })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_packing(d: &MultiGraph, roots: &[VertexId], arbs: &[Arborescence]) {
        assert_eq!(arbs.len(), roots.len());
        let mut used = BTreeSet::new();
        for (a, &r) in arbs.iter().zip(roots) {
            assert_eq!(a.root, r);
            a.validate(d).unwrap();
            for &e in &a.edges {
                assert!(used.insert(e), "edge {e} shared");
            }
        }
    }

    #[test]
    fn bidirected_triangle_two_roots() {
        let d = MultiGraph::from_edges(3, true, &[(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)])
            .unwrap();
        let arbs = pack_arborescences(&d, &[0, 1]).unwrap();
        assert_packing(&d, &[0, 1], &arbs);
    }

    #[test]
    fn cycle_minus_edge_into_root() {
        let d = MultiGraph::from_edges(4, true, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let arbs = pack_arborescences(&d, &[0]).unwrap();
        assert_eq!(arbs[0].edges, BTreeSet::from([EdgeId(0), EdgeId(1), EdgeId(2)]));
        assert_eq!(
            arbs[0].path_to(&d, 3).unwrap(),
            vec![EdgeId(0), EdgeId(1), EdgeId(2)]
        );
        assert_eq!(arbs[0].path_to(&d, 1).unwrap(), vec![EdgeId(0)]);
    }

    #[test]
    fn single_digon() {
        let d = MultiGraph::from_edges(2, true, &[(0, 1), (1, 0)]).unwrap();
        let arbs = pack_arborescences(&d, &[0, 1]).unwrap();
        assert_eq!(arbs[0].edges, BTreeSet::from([EdgeId(0)]));
        assert_eq!(arbs[1].edges, BTreeSet::from([EdgeId(1)]));
    }

    #[test]
    fn repeated_roots() {
        // two digons between 0 and 1 support two arborescences rooted at 0
        let d = MultiGraph::from_edges(2, true, &[(0, 1), (1, 0), (0, 1), (1, 0)]).unwrap();
        let arbs = pack_arborescences(&d, &[0, 0]).unwrap();
        assert_packing(&d, &[0, 0], &arbs);
    }

    #[test]
    fn infeasible_reports_cut() {
        let d = MultiGraph::from_edges(3, true, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        match pack_arborescences(&d, &[0, 1]) {
            Err(TransformError::PackingInfeasible {
                side,
                in_degree,
                required,
            }) => {
                assert!(in_degree < required);
                assert!(!side.is_empty());
            }
            other => panic!("expected infeasibility, got {other:?}"),
        }
    }

    #[test]
    fn star_and_depth_two_paths() {
        let star = MultiGraph::from_edges(3, true, &[(0, 1), (0, 2)]).unwrap();
        let a = Arborescence {
            root: 0,
            edges: BTreeSet::from([EdgeId(0), EdgeId(1)]),
        };
        a.validate(&star).unwrap();
        assert_eq!(a.path_to(&star, 2).unwrap(), vec![EdgeId(1)]);
        assert_eq!(a.path_to(&star, 0), Err(TransformError::TargetIsRoot(0)));

        let chain = MultiGraph::from_edges(3, true, &[(1, 2), (0, 1)]).unwrap();
        let b = Arborescence {
            root: 0,
            edges: BTreeSet::from([EdgeId(0), EdgeId(1)]),
        };
        assert_eq!(b.path_to(&chain, 2).unwrap(), vec![EdgeId(1), EdgeId(0)]);
    }

    #[test]
    fn validate_rejects_broken_trees() {
        let d = MultiGraph::from_edges(3, true, &[(0, 1), (2, 1), (1, 2)]).unwrap();
        let two_parents = Arborescence {
            root: 0,
            edges: BTreeSet::from([EdgeId(0), EdgeId(1)]),
        };
        assert!(two_parents.validate(&d).is_err());
        let missing = Arborescence {
            root: 0,
            edges: BTreeSet::from([EdgeId(0)]),
        };
        assert_eq!(missing.validate(&d), Err(TransformError::NotSpanned(2)));
    }
}
