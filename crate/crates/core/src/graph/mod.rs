//! Multigraphs and multidigraphs with stable edge identity.
//!
//! Vertices are dense indices `0..n`. Every edge carries an [`EdgeId`] that is
//! never reused inside one graph lineage: rewrites such as [`MultiGraph::split_off`]
//! allocate fresh ids past every id ever handed out, so certificates and
//! provenance lists stay meaningful after the graph changes.

mod io;
mod provenance;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use io::{parse_graph, ParseError};
pub use provenance::ProvenanceMap;

pub type VertexId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// One edge. Undirected edges are stored with `tail <= head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeRecord {
    pub id: EdgeId,
    pub tail: VertexId,
    pub head: VertexId,
}

impl EdgeRecord {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    pub fn touches(&self, v: VertexId) -> bool {
        self.tail == v || self.head == v
    }

    /// The endpoint opposite to `v`, ignoring direction.
    pub fn opposite(&self, v: VertexId) -> Option<VertexId> {
        if self.tail == v {
            Some(self.head)
        } else if self.head == v {
            Some(self.tail)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("edge {0} is not in the graph")]
    UnknownEdge(EdgeId),
    #[error("cannot split off {first} and {second}: {reason}")]
    NotSplittable {
        first: EdgeId,
        second: EdgeId,
        reason: &'static str,
    },
    #[error("cannot contract an empty vertex set")]
    EmptyContraction,
    #[error("operation requires a directed graph")]
    ExpectedDirected,
    #[error("operation requires an undirected graph")]
    ExpectedUndirected,
}

/// Result of splitting a pair of edges off their common vertex.
#[derive(Debug, Clone)]
pub struct Split {
    pub graph: MultiGraph,
    /// The fresh shortcut edge.
    pub edge: EdgeId,
    /// Maps `edge` to the two edges it replaced.
    pub provenance: ProvenanceMap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    directed: bool,
    vertex_count: usize,
    // sorted by id
    edges: Vec<EdgeRecord>,
    next_id: usize,
}

impl MultiGraph {
    pub fn new(vertex_count: usize, directed: bool) -> Self {
        MultiGraph {
            directed,
            vertex_count,
            edges: Vec::new(),
            next_id: 0,
        }
    }

    pub fn undirected(vertex_count: usize) -> Self {
        Self::new(vertex_count, false)
    }

    pub fn directed(vertex_count: usize) -> Self {
        Self::new(vertex_count, true)
    }

    /// Builds a graph from `(tail, head)` pairs; ids follow slice order.
    pub fn from_edges(
        vertex_count: usize,
        directed: bool,
        pairs: &[(VertexId, VertexId)],
    ) -> Result<Self, GraphError> {
        let mut g = Self::new(vertex_count, directed);
        for &(u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, tail: VertexId, head: VertexId) -> Result<EdgeId, GraphError> {
        self.check_vertex(tail)?;
        self.check_vertex(head)?;
        let id = EdgeId(self.next_id);
        self.next_id += 1;
        let (tail, head) = if self.directed || tail <= head {
            (tail, head)
        } else {
            (head, tail)
        };
        self.edges.push(EdgeRecord { id, tail, head });
        Ok(id)
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count
    }

    /// Edges in ascending id order.
    pub fn edges(&self) -> &[EdgeRecord] {
        &self.edges
    }

    /// One past the largest id this graph lineage has allocated.
    pub fn next_edge_id(&self) -> EdgeId {
        EdgeId(self.next_id)
    }

    pub fn edge(&self, id: EdgeId) -> Option<&EdgeRecord> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .ok()
            .map(|i| &self.edges[i])
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v < self.vertex_count
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    fn require_edge(&self, id: EdgeId) -> Result<EdgeRecord, GraphError> {
        self.edge(id).copied().ok_or(GraphError::UnknownEdge(id))
    }

    /// Edges with `v` as an endpoint, ascending by id. Loops appear once.
    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = &EdgeRecord> + '_ {
        self.edges.iter().filter(move |e| e.touches(v))
    }

    pub fn out_edges(&self, v: VertexId) -> impl Iterator<Item = &EdgeRecord> + '_ {
        self.edges.iter().filter(move |e| e.tail == v)
    }

    pub fn in_edges(&self, v: VertexId) -> impl Iterator<Item = &EdgeRecord> + '_ {
        self.edges.iter().filter(move |e| e.head == v)
    }

    /// Total degree; a loop contributes 2 (directed: once as in, once as out).
    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self
            .incident_edges(v)
            .map(|e| if e.is_loop() { 2 } else { 1 })
            .sum())
    }

    /// `(in, out)` degree of a vertex of a digraph.
    pub fn in_out_degree(&self, v: VertexId) -> Result<(usize, usize), GraphError> {
        if !self.directed {
            return Err(GraphError::ExpectedDirected);
        }
        self.check_vertex(v)?;
        Ok((self.in_edges(v).count(), self.out_edges(v).count()))
    }

    /// Every vertex has in-degree equal to out-degree. Connectivity is not required.
    /// Undirected graphs are never Eulerian digraphs.
    pub fn is_eulerian(&self) -> bool {
        if !self.directed {
            return false;
        }
        let mut balance = vec![0i64; self.vertex_count];
        for e in &self.edges {
            balance[e.tail] += 1;
            balance[e.head] -= 1;
        }
        balance.iter().all(|&b| b == 0)
    }

    /// Weakly connected component index per vertex, numbered by smallest member.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut dsu = DisjointSets::new(self.vertex_count);
        for e in &self.edges {
            dsu.union(e.tail, e.head);
        }
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut root_label = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for v in self.vertices() {
            let r = dsu.find(v);
            if root_label[r] == usize::MAX {
                root_label[r] = next;
                next += 1;
            }
            label[v] = root_label[r];
        }
        label
    }

    /// Weakly connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        group_by_label(&self.component_labels())
    }

    /// Number of non-loop edges with exactly one endpoint inside `side`
    /// (both directions count for digraphs).
    pub fn cut_size(&self, side: &[bool]) -> usize {
        self.edges
            .iter()
            .filter(|e| side[e.tail] != side[e.head])
            .count()
    }

    pub fn cut_size_of(&self, side: &BTreeSet<VertexId>) -> usize {
        let mask = self.mask(side);
        self.cut_size(&mask)
    }

    pub(crate) fn mask(&self, set: &BTreeSet<VertexId>) -> Vec<bool> {
        let mut mask = vec![false; self.vertex_count];
        for &v in set {
            if v < self.vertex_count {
                mask[v] = true;
            }
        }
        mask
    }

    /// The same edges with directions forgotten; ids are kept.
    pub fn underlying(&self) -> MultiGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| EdgeRecord {
                id: e.id,
                tail: e.tail.min(e.head),
                head: e.tail.max(e.head),
            })
            .collect();
        MultiGraph {
            directed: false,
            vertex_count: self.vertex_count,
            edges,
            next_id: self.next_id,
        }
    }

    /// Splits `first` and `second` off their common vertex.
    ///
    /// For digraphs `first` must end where `second` starts. For undirected
    /// graphs whose two edges share both endpoints the smaller endpoint is
    /// used; call [`MultiGraph::split_off_at`] to choose explicitly.
    pub fn split_off(&self, first: EdgeId, second: EdgeId) -> Result<Split, GraphError> {
        let a = self.require_edge(first)?;
        let b = self.require_edge(second)?;
        let at = if self.directed {
            a.head
        } else {
            [a.tail, a.head]
                .into_iter()
                .filter(|&v| b.touches(v))
                .min()
                .ok_or(GraphError::NotSplittable {
                    first,
                    second,
                    reason: "edges are not adjacent",
                })?
        };
        self.split_off_at(first, second, at)
    }

    pub fn split_off_at(
        &self,
        first: EdgeId,
        second: EdgeId,
        at: VertexId,
    ) -> Result<Split, GraphError> {
        self.check_vertex(at)?;
        if first == second {
            return Err(GraphError::NotSplittable {
                first,
                second,
                reason: "edges must be distinct",
            });
        }
        let a = self.require_edge(first)?;
        let b = self.require_edge(second)?;
        let (u, w) = if self.directed {
            if a.head != at || b.tail != at {
                return Err(GraphError::NotSplittable {
                    first,
                    second,
                    reason: "first edge must enter and second edge must leave the split vertex",
                });
            }
            (a.tail, b.head)
        } else {
            match (a.opposite(at), b.opposite(at)) {
                (Some(u), Some(w)) => (u, w),
                _ => {
                    return Err(GraphError::NotSplittable {
                        first,
                        second,
                        reason: "edges do not share the split vertex",
                    })
                }
            }
        };
        let mut graph = self.without_edges(&[first, second]);
        let edge = graph.add_edge(u, w)?;
        let mut provenance = ProvenanceMap::new();
        provenance.insert(edge, vec![first, second]);
        Ok(Split {
            graph,
            edge,
            provenance,
        })
    }

    /// Copy with the listed edges removed. Unknown ids are ignored.
    pub fn without_edges(&self, ids: &[EdgeId]) -> MultiGraph {
        let mut g = self.clone();
        g.edges.retain(|e| !ids.contains(&e.id));
        g
    }

    /// Replaces the vertex set `set` by a single vertex.
    ///
    /// Returns the contracted graph and the new index of every old vertex.
    /// The supernode takes the position of the smallest member of `set`; the
    /// remaining vertices keep their relative order. Edge ids are unchanged and
    /// edges inside `set` become loops.
    pub fn contract(
        &self,
        set: &BTreeSet<VertexId>,
    ) -> Result<(MultiGraph, Vec<VertexId>), GraphError> {
        let Some(&first) = set.iter().next() else {
            return Err(GraphError::EmptyContraction);
        };
        for &v in set {
            self.check_vertex(v)?;
        }
        let mut class = vec![0; self.vertex_count];
        let mut next = 0;
        for v in self.vertices() {
            if set.contains(&v) && v != first {
                continue;
            }
            class[v] = next;
            next += 1;
        }
        for &v in set {
            class[v] = class[first];
        }
        Ok((self.quotient(&class, next), class))
    }

    /// Identifies vertices with equal class; `class[v] < class_count`.
    pub(crate) fn quotient(&self, class: &[usize], class_count: usize) -> MultiGraph {
        let mut g = MultiGraph {
            directed: self.directed,
            vertex_count: class_count,
            edges: Vec::with_capacity(self.edges.len()),
            next_id: self.next_id,
        };
        for e in &self.edges {
            let (mut tail, mut head) = (class[e.tail], class[e.head]);
            if !self.directed && tail > head {
                std::mem::swap(&mut tail, &mut head);
            }
            g.edges.push(EdgeRecord {
                id: e.id,
                tail,
                head,
            });
        }
        g
    }

    /// Subgraph induced by `keep`, renumbered in the order given. Edge ids and
    /// the id allocator are preserved.
    pub fn induced(&self, keep: &[VertexId]) -> Result<MultiGraph, GraphError> {
        let mut local = vec![usize::MAX; self.vertex_count];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| local[e.tail] != usize::MAX && local[e.head] != usize::MAX)
            .map(|e| {
                let (mut tail, mut head) = (local[e.tail], local[e.head]);
                if !self.directed && tail > head {
                    std::mem::swap(&mut tail, &mut head);
                }
                EdgeRecord {
                    id: e.id,
                    tail,
                    head,
                }
            })
            .collect();
        Ok(MultiGraph {
            directed: self.directed,
            vertex_count: keep.len(),
            edges,
            next_id: self.next_id,
        })
    }

    /// Canonical edge-list text: header then one `u v` line per edge in id order.
    pub fn to_edge_list(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.directed { "digraph" } else { "graph" };
        writeln!(f, "{} {} {}", kind, self.vertex_count, self.edges.len())?;
        for e in &self.edges {
            writeln!(f, "{} {}", e.tail, e.head)?;
        }
        Ok(())
    }
}

/// Groups vertices by label; groups are sorted and ordered by smallest member.
pub(crate) fn group_by_label(label: &[usize]) -> Vec<Vec<VertexId>> {
    let mut slot = std::collections::BTreeMap::new();
    let mut groups: Vec<Vec<VertexId>> = Vec::new();
    for (v, &l) in label.iter().enumerate() {
        let i = *slot.entry(l).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[i].push(v);
    }
    groups
}

pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}
