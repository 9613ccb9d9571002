//! Contraction-based Gomory-Hu trees.
//!
//! Every tree edge's fundamental bipartition is an actual minimum cut of the
//! input with exactly the stored weight, and the lightest edge on any tree
//! path equals the local edge-connectivity of its endpoints. Disconnected
//! inputs produce one tree per component.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use thiserror::Error;

use crate::connectivity::min_cut;
use crate::graph::{GraphError, MultiGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeEdge {
    pub a: VertexId,
    pub b: VertexId,
    pub mu: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("tree edge {0} does not exist")]
    UnknownTreeEdge(usize),
    #[error("a vertex pair must consist of two distinct vertices, got {0} twice")]
    SameVertex(VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GomoryHuTree {
    vertex_count: usize,
    // sorted by (a, b), a < b
    edges: Vec<TreeEdge>,
    component: Vec<usize>,
    adjacency: Vec<Vec<(VertexId, usize)>>,
}

impl GomoryHuTree {
    fn new(vertex_count: usize, mut edges: Vec<TreeEdge>, component: Vec<usize>) -> Self {
        edges.sort_by_key(|e| (e.a, e.b));
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (i, e) in edges.iter().enumerate() {
            adjacency[e.a].push((e.b, i));
            adjacency[e.b].push((e.a, i));
        }
        GomoryHuTree {
            vertex_count,
            edges,
            component,
            adjacency,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Tree edges sorted by `(a, b)`; indices into this slice identify edges.
    pub fn edges(&self) -> &[TreeEdge] {
        &self.edges
    }

    /// Connected component of each vertex in the input graph.
    pub fn component_labels(&self) -> &[usize] {
        &self.component
    }

    /// The two sides of the fundamental cut of tree edge `index`, restricted
    /// to that edge's component. The first side contains endpoint `a`.
    pub fn fundamental_partition(
        &self,
        index: usize,
    ) -> Result<(Vec<VertexId>, Vec<VertexId>), TreeError> {
        let e = *self
            .edges
            .get(index)
            .ok_or(TreeError::UnknownTreeEdge(index))?;
        let a_side = self.reach_without(e.a, Some(index));
        let comp = self.component[e.a];
        let (mut x, mut y) = (Vec::new(), Vec::new());
        for v in 0..self.vertex_count {
            if a_side[v] {
                x.push(v);
            } else if self.component[v] == comp {
                y.push(v);
            }
        }
        Ok((x, y))
    }

    /// Minimum weight on the tree path between `u` and `v`; 0 across components.
    pub fn tree_min_cut(&self, u: VertexId, v: VertexId) -> Result<usize, TreeError> {
        for x in [u, v] {
            if x >= self.vertex_count {
                return Err(GraphError::UnknownVertex(x).into());
            }
        }
        if u == v {
            return Err(TreeError::SameVertex(u));
        }
        if self.component[u] != self.component[v] {
            return Ok(0);
        }
        // parent pointers from u
        let mut via = vec![None; self.vertex_count];
        let mut seen = vec![false; self.vertex_count];
        seen[u] = true;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &(y, i) in &self.adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    via[y] = Some((x, i));
                    queue.push_back(y);
                }
            }
        }
        let mut best = usize::MAX;
        let mut x = v;
        while let Some((prev, i)) = via[x] {
            best = best.min(self.edges[i].mu);
            x = prev;
        }
        Ok(best)
    }

    /// Vertices reachable from `start` in the tree, optionally skipping one edge.
    pub(crate) fn reach_without(&self, start: VertexId, skip: Option<usize>) -> Vec<bool> {
        self.reach_avoiding(start, |i| Some(i) == skip)
    }

    pub(crate) fn reach_avoiding(&self, start: VertexId, skip: impl Fn(usize) -> bool) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &(y, i) in &self.adjacency[x] {
                if !skip(i) && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Text dump: one `a b mu` line per tree edge, sorted by `(a, b)`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            let _ = writeln!(out, "{} {} {}", e.a, e.b, e.mu);
        }
        out
    }
}

/// Builds a Gomory-Hu forest of an undirected multigraph.
///
/// Classical supernode splitting: pick a supernode with at least two
/// vertices, contract every subtree hanging off it, take a minimum cut
/// between its two smallest vertices and split the supernode along it.
pub fn build_gomory_hu(g: &MultiGraph) -> Result<GomoryHuTree, GraphError> {
    if g.is_directed() {
        return Err(GraphError::ExpectedUndirected);
    }
    let n = g.vertex_count();
    let component = g.component_labels();
    let mut supernodes: Vec<Vec<VertexId>> = g.components();
    // edges between supernode indices
    let mut tree: Vec<(usize, usize, usize)> = Vec::new();

    while let Some(s_idx) = supernodes.iter().position(|s| s.len() >= 2) {
        let members = supernodes[s_idx].clone();
        let (s, t) = (members[0], members[1]);

        // label each other supernode by the subtree of T - S it lies in
        let mut subtree_of = vec![usize::MAX; supernodes.len()];
        let mut subtree_count = 0;
        for start in 0..supernodes.len() {
            if start == s_idx || subtree_of[start] != usize::MAX {
                continue;
            }
            subtree_of[start] = subtree_count;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &(p, q, _) in &tree {
                    let y = if p == x {
                        q
                    } else if q == x {
                        p
                    } else {
                        continue;
                    };
                    if y != s_idx && subtree_of[y] == usize::MAX {
                        subtree_of[y] = subtree_count;
                        stack.push(y);
                    }
                }
            }
            subtree_count += 1;
        }

        // members of S keep their own class; each subtree becomes one vertex
        let mut class = vec![0; n];
        for (i, &v) in members.iter().enumerate() {
            class[v] = i;
        }
        for (idx, sn) in supernodes.iter().enumerate() {
            if idx != s_idx {
                for &v in sn {
                    class[v] = members.len() + subtree_of[idx];
                }
            }
        }
        let quotient = g.quotient(&class, members.len() + subtree_count);
        let cut = min_cut(&quotient, class[s], class[t]).expect("distinct vertices of one graph");

        let (s_side, t_side): (Vec<_>, Vec<_>) =
            members.iter().partition(|&&v| cut.side.contains(&class[v]));
        let t_idx = supernodes.len();
        supernodes[s_idx] = s_side;
        supernodes.push(t_side);

        for edge in tree.iter_mut() {
            let (p, q, _) = *edge;
            let neighbour = if p == s_idx {
                q
            } else if q == s_idx {
                p
            } else {
                continue;
            };
            let neighbour_class = members.len() + subtree_of[neighbour];
            if !cut.side.contains(&neighbour_class) {
                if p == s_idx {
                    edge.0 = t_idx;
                } else {
                    edge.1 = t_idx;
                }
            }
        }
        tree.push((s_idx, t_idx, cut.value));
    }

    let vertex_of: Vec<VertexId> = supernodes.iter().map(|s| s[0]).collect();
    let edges = tree
        .into_iter()
        .map(|(p, q, mu)| {
            let (x, y) = (vertex_of[p], vertex_of[q]);
            TreeEdge {
                a: x.min(y),
                b: x.max(y),
                mu,
            }
        })
        .collect();
    Ok(GomoryHuTree::new(n, edges, component))
}

/// `|δ(X)|` in `g` for the first side of each tree edge's fundamental cut.
pub fn fundamental_cut_sizes(g: &MultiGraph, tree: &GomoryHuTree) -> Vec<usize> {
    (0..tree.edges().len())
        .map(|i| {
            let (x, _) = tree.fundamental_partition(i).expect("valid index");
            g.cut_size_of(&x.into_iter().collect::<BTreeSet<_>>())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_pair() {
        let g = MultiGraph::from_edges(2, false, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let t = build_gomory_hu(&g).unwrap();
        assert_eq!(t.edges(), &[TreeEdge { a: 0, b: 1, mu: 3 }]);
        assert_eq!(t.dump(), "0 1 3\n");
    }

    #[test]
    fn triangle() {
        let g = MultiGraph::from_edges(3, false, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let t = build_gomory_hu(&g).unwrap();
        assert_eq!(t.edges().len(), 2);
        assert!(t.edges().iter().all(|e| e.mu == 2));
        for (u, v) in [(0, 1), (0, 2), (1, 2)] {
            assert_eq!(t.tree_min_cut(u, v).unwrap(), 2);
        }
    }

    #[test]
    fn bridged_triangles() {
        let g = MultiGraph::from_edges(
            6,
            false,
            &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)],
        )
        .unwrap();
        let t = build_gomory_hu(&g).unwrap();
        assert_eq!(t.edges().len(), 5);
        let ones: Vec<_> = t.edges().iter().filter(|e| e.mu == 1).collect();
        assert_eq!(ones.len(), 1);
        assert_eq!(t.edges().iter().filter(|e| e.mu == 2).count(), 4);
        assert_eq!(fundamental_cut_sizes(&g, &t), t.edges().iter().map(|e| e.mu).collect::<Vec<_>>());
        assert_eq!(t.tree_min_cut(0, 5).unwrap(), 1);
        assert_eq!(t.tree_min_cut(3, 5).unwrap(), 2);
    }

    #[test]
    fn edgeless_and_disconnected() {
        let g = MultiGraph::undirected(3);
        let t = build_gomory_hu(&g).unwrap();
        assert!(t.edges().is_empty());
        assert_eq!(t.tree_min_cut(0, 2).unwrap(), 0);

        let h = MultiGraph::from_edges(4, false, &[(0, 1), (2, 3), (2, 3)]).unwrap();
        let t = build_gomory_hu(&h).unwrap();
        assert_eq!(
            t.edges(),
            &[TreeEdge { a: 0, b: 1, mu: 1 }, TreeEdge { a: 2, b: 3, mu: 2 }]
        );
        assert_eq!(t.tree_min_cut(1, 3).unwrap(), 0);
        assert_eq!(t.fundamental_partition(1).unwrap(), (vec![2], vec![3]));
    }

    #[test]
    fn partition_of_path_tree() {
        // path graph yields the path tree 0-1-2 with unit weights
        let g = MultiGraph::from_edges(3, false, &[(0, 1), (1, 2)]).unwrap();
        let t = build_gomory_hu(&g).unwrap();
        let idx = t.edges().iter().position(|e| (e.a, e.b) == (0, 1)).unwrap();
        assert_eq!(t.fundamental_partition(idx).unwrap(), (vec![0], vec![1, 2]));
        assert_eq!(t.fundamental_partition(7), Err(TreeError::UnknownTreeEdge(7)));
    }

    #[test]
    fn star_leaf_partition() {
        let g = MultiGraph::from_edges(4, false, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let t = build_gomory_hu(&g).unwrap();
        let idx = t.edges().iter().position(|e| (e.a, e.b) == (0, 3)).unwrap();
        assert_eq!(t.fundamental_partition(idx).unwrap(), (vec![0, 1, 2], vec![3]));
    }

    #[test]
    fn directed_input_rejected() {
        let d = MultiGraph::directed(2);
        assert_eq!(build_gomory_hu(&d).unwrap_err(), GraphError::ExpectedUndirected);
    }
}
