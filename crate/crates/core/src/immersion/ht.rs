use std::collections::BTreeMap;

use super::{check_order, EngineError, ImmersionCertificate, PatternTrail};
use crate::graph::{EdgeId, MultiGraph};

/// The star `K_{1,t-1}` with every edge replaced by `t-1` parallel edges.
///
/// Vertex 0 is the center `v_1`; vertex `j - 1` is leaf `v_j` for
/// `2 <= j <= t`. The `t-1` edges between the center and `v_j` are labelled
/// `e(j, i)` for `i` in `1..=t`, `i != j`.
#[derive(Debug, Clone)]
pub struct HtGraph {
    pub t: usize,
    pub graph: MultiGraph,
    labels: BTreeMap<(usize, usize), EdgeId>,
}

impl HtGraph {
    pub fn new(t: usize) -> Result<Self, EngineError> {
        check_order(t)?;
        let mut graph = MultiGraph::undirected(t);
        let mut labels = BTreeMap::new();
        for j in 2..=t {
            for i in (1..=t).filter(|&i| i != j) {
                let id = graph.add_edge(0, j - 1)?;
                labels.insert((j, i), id);
            }
        }
        Ok(HtGraph { t, graph, labels })
    }

    /// Edge `e(j, i)`, 1-based as in the labelling above.
    pub fn label(&self, j: usize, i: usize) -> Option<EdgeId> {
        self.labels.get(&(j, i)).copied()
    }
}

/// Routes `K_t` inside `H_t`: `v_1`-`v_j` uses the single edge `e(j, 1)` and
/// `v_i`-`v_j` (`1 < i < j`) uses `e(i, j)` followed by `e(j, i)` through
/// the center.
pub fn h_t_route(t: usize) -> Result<(HtGraph, ImmersionCertificate), EngineError> {
    let ht = HtGraph::new(t)?;
    let mut trails = Vec::new();
    for i in 1..=t {
        for j in i + 1..=t {
            let edges = if i == 1 {
                vec![ht.label(j, 1).expect("label exists")]
            } else {
                vec![
                    ht.label(i, j).expect("label exists"),
                    ht.label(j, i).expect("label exists"),
                ]
            };
            trails.push(PatternTrail {
                from: i - 1,
                to: j - 1,
                edges,
            });
        }
    }
    let cert = ImmersionCertificate {
        t,
        directed: false,
        terminals: (0..t).collect(),
        trails,
    };
    Ok((ht, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::immersion::verify_certificate;

    #[test]
    fn t2_is_a_single_edge() {
        let (ht, cert) = h_t_route(2).unwrap();
        assert_eq!(ht.graph.edge_count(), 1);
        assert_eq!(cert.trails.len(), 1);
        assert_eq!(cert.trails[0].edges, vec![ht.label(2, 1).unwrap()]);
    }

    #[test]
    fn t3_matches_the_labelling() {
        let (ht, cert) = h_t_route(3).unwrap();
        let e = |j, i| ht.label(j, i).unwrap();
        assert_eq!(cert.trail(0, 1).unwrap().edges, vec![e(2, 1)]);
        assert_eq!(cert.trail(0, 2).unwrap().edges, vec![e(3, 1)]);
        assert_eq!(cert.trail(1, 2).unwrap().edges, vec![e(2, 3), e(3, 2)]);
    }

    #[test]
    fn t4_uses_all_nine_edges() {
        let (ht, cert) = h_t_route(4).unwrap();
        assert_eq!(cert.trails.len(), 6);
        assert_eq!(cert.edge_count(), 9);
        assert_eq!(ht.graph.edge_count(), 9);
        assert_eq!(ht.graph.degree(0).unwrap(), 9);
        for leaf in 1..4 {
            assert_eq!(ht.graph.degree(leaf).unwrap(), 3);
        }
        assert_eq!(verify_certificate(&ht.graph, &cert), Ok(()));
    }

    #[test]
    fn rejects_small_t() {
        assert_eq!(h_t_route(1).unwrap_err(), EngineError::PatternTooSmall(1));
        assert_eq!(h_t_route(0).unwrap_err(), EngineError::PatternTooSmall(0));
    }
}
