//! Dinic max-flow over unit-capacity edge arcs plus auxiliary arcs.
//!
//! Arcs live in pairs: arc `2p` and its reverse `2p + 1`. A directed edge is
//! a pair with capacities `(1, 0)`; an undirected edge is a pair with
//! capacities `(1, 1)`, so the two directions share one unit of capacity.

use std::collections::VecDeque;

use crate::graph::{EdgeId, MultiGraph, VertexId};

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
    initial: Vec<u32>,
    edge: Vec<Option<EdgeId>>,
    level: Vec<u32>,
    cursor: Vec<usize>,
}

impl FlowNetwork {
    pub(crate) fn with_nodes(nodes: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            initial: Vec::new(),
            edge: Vec::new(),
            level: vec![0; nodes],
            cursor: vec![0; nodes],
        }
    }

    /// Network of `g` (loops skipped) with `extra` auxiliary nodes numbered
    /// from `g.vertex_count()`. Arcs are added in ascending edge-id order.
    pub(crate) fn from_graph(g: &MultiGraph, extra: usize) -> Self {
        let mut net = Self::with_nodes(g.vertex_count() + extra);
        let back = if g.is_directed() { 0 } else { 1 };
        for e in g.edges().iter().filter(|e| !e.is_loop()) {
            net.add_pair(e.tail, e.head, 1, back, Some(e.id));
        }
        net
    }

    pub(crate) fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub(crate) fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.add_pair(from, to, cap, 0, None);
    }

    fn add_pair(&mut self, from: usize, to: usize, cap: u32, back: u32, edge: Option<EdgeId>) {
        let a = self.to.len();
        self.adj[from].push(a);
        self.adj[to].push(a + 1);
        self.to.extend([to, from]);
        self.cap.extend([cap, back]);
        self.initial.extend([cap, back]);
        self.edge.extend([edge, edge]);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = u32::MAX);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let v = self.to[a];
                if self.cap[a] > 0 && self.level[v] == u32::MAX {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] != u32::MAX
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: u32) -> u32 {
        if u == t {
            return pushed;
        }
        while self.cursor[u] < self.adj[u].len() {
            let a = self.adj[u][self.cursor[u]];
            let v = self.to[a];
            if self.cap[a] > 0 && self.level[v] == self.level[u] + 1 {
                let got = self.dfs(v, t, pushed.min(self.cap[a]));
                if got > 0 {
                    self.cap[a] -= got;
                    self.cap[a ^ 1] += got;
                    return got;
                }
            }
            self.cursor[u] += 1;
        }
        0
    }

    /// Pushes flow from `s` to `t` until the value reaches `limit` or no
    /// augmenting path remains. Returns the value pushed by this call.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut total = 0usize;
        while total < limit && self.bfs(s, t) {
            self.cursor.iter_mut().for_each(|c| *c = 0);
            loop {
                let room = (limit - total).min(u32::MAX as usize) as u32;
                let got = self.dfs(s, t, room);
                if got == 0 {
                    break;
                }
                total += got as usize;
                if total >= limit {
                    break;
                }
            }
        }
        total
    }

    /// Nodes reachable from `s` in the residual network.
    pub(crate) fn residual_reach(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.node_count()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &a in &self.adj[u] {
                let v = self.to[a];
                if self.cap[a] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Splits the current flow into `s`-`t` walks with cycles removed.
    ///
    /// Each walk is returned as its sequence of arc labels (`None` for
    /// auxiliary arcs) together with the visited nodes.
    pub(crate) fn decompose(&self, s: usize, t: usize) -> Vec<(Vec<usize>, Vec<Option<EdgeId>>)> {
        // flow-carrying arcs per node, in adjacency (ascending edge id) order
        let mut out: Vec<VecDeque<(usize, Option<EdgeId>)>> =
            vec![VecDeque::new(); self.node_count()];
        for pair in 0..self.to.len() / 2 {
            let a = 2 * pair;
            let net = self.initial[a] as i64 - self.cap[a] as i64;
            let (arc, amount) = if net > 0 {
                (a, net)
            } else if net < 0 {
                (a + 1, -net)
            } else {
                continue;
            };
            let from = self.to[arc ^ 1];
            for _ in 0..amount {
                out[from].push_back((self.to[arc], self.edge[arc]));
            }
        }

        let mut walks = Vec::new();
        while !out[s].is_empty() {
            let mut nodes = vec![s];
            let mut labels: Vec<Option<EdgeId>> = Vec::new();
            let mut position = vec![usize::MAX; self.node_count()];
            position[s] = 0;
            loop {
                let u = *nodes.last().expect("walk is never empty");
                if u == t {
                    break;
                }
                let (v, label) = out[u]
                    .pop_front()
                    .expect("flow conservation guarantees an outgoing flow arc");
                if position[v] != usize::MAX {
                    // closed sub-walk: discard it
                    let keep = position[v];
                    for &w in &nodes[keep + 1..] {
                        position[w] = usize::MAX;
                    }
                    nodes.truncate(keep + 1);
                    labels.truncate(keep);
                } else {
                    position[v] = nodes.len();
                    nodes.push(v);
                    labels.push(label);
                }
            }
            walks.push((nodes, labels));
        }
        walks
    }
}

/// Max number of edge-disjoint `s`-`t` paths in `g`, capped at `limit`.
pub(crate) fn bounded_flow(g: &MultiGraph, s: VertexId, t: VertexId, limit: usize) -> usize {
    let mut net = FlowNetwork::from_graph(g, 0);
    net.max_flow(s, t, limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_capacity_network() {
        let mut net = FlowNetwork::with_nodes(6);
        for &(u, v, c) in &[
            (0, 1, 10),
            (0, 2, 10),
            (1, 3, 4),
            (1, 4, 8),
            (2, 4, 9),
            (3, 5, 10),
            (4, 3, 6),
            (4, 5, 10),
        ] {
            net.add_arc(u, v, c);
        }
        assert_eq!(net.max_flow(0, 5, usize::MAX), 19);
    }

    #[test]
    fn limit_stops_early() {
        let g = MultiGraph::from_edges(2, false, &[(0, 1); 5]).unwrap();
        assert_eq!(bounded_flow(&g, 0, 1, 3), 3);
        assert_eq!(bounded_flow(&g, 0, 1, usize::MAX), 5);
    }

    #[test]
    fn undirected_edges_share_capacity() {
        // a single undirected edge carries one unit in total
        let g = MultiGraph::from_edges(3, false, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let mut net = FlowNetwork::from_graph(&g, 0);
        assert_eq!(net.max_flow(0, 2, usize::MAX), 2);
        let walks = net.decompose(0, 2);
        assert_eq!(walks.len(), 2);
        assert_eq!(walks[0].1, vec![Some(EdgeId(0)), Some(EdgeId(1))]);
        assert_eq!(walks[1].1, vec![Some(EdgeId(2))]);
    }
}
