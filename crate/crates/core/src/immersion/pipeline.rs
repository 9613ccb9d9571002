use super::{
    check_order, extract_clique_immersion, extract_directed_clique_immersion, EngineError,
    LaminarDecomposition, Mode, Outcome, SelectedCut,
};
use crate::gomory_hu::{build_gomory_hu, GomoryHuTree};
use crate::graph::{group_by_label, GraphError, MultiGraph, VertexId};

/// Selects the tree edges lighter than `threshold` and computes the blocks
/// they leave behind. Returns the cuts and the blocks.
fn select_cuts(tree: &GomoryHuTree, threshold: usize) -> (Vec<SelectedCut>, Vec<Vec<VertexId>>) {
    let selected: Vec<usize> = (0..tree.edges().len())
        .filter(|&i| tree.edges()[i].mu < threshold)
        .collect();
    let cuts = selected
        .iter()
        .map(|&i| {
            let e = tree.edges()[i];
            let (side, _) = tree.fundamental_partition(i).expect("valid tree edge");
            SelectedCut {
                tree_edge: (e.a, e.b),
                side,
                size: e.mu,
            }
        })
        .collect();

    let n = tree.vertex_count();
    let mut label = vec![usize::MAX; n];
    for v in 0..n {
        if label[v] == usize::MAX {
            let reach = tree.reach_avoiding(v, |i| selected.binary_search(&i).is_ok());
            for (x, r) in reach.into_iter().enumerate() {
                if r {
                    label[x] = v;
                }
            }
        }
    }
    (cuts, group_by_label(&label))
}

fn decompose(g: &MultiGraph, t: usize, mode: Mode) -> Result<Outcome, EngineError> {
    let tree = build_gomory_hu(&g.underlying())?;
    let threshold = mode.threshold(t);
    let (cuts, blocks) = select_cuts(&tree, threshold);
    match blocks.iter().find(|b| b.len() >= t) {
        None => Ok(Outcome::Decomposition(LaminarDecomposition {
            mode,
            t,
            threshold,
            cuts,
            blocks,
        })),
        Some(block) => {
            let terminals = &block[..t];
            let cert = match mode {
                Mode::Undirected => extract_clique_immersion(g, terminals)?,
                Mode::Directed => extract_directed_clique_immersion(g, terminals)?,
            };
            Ok(Outcome::Certificate(cert))
        }
    }
}

/// Laminar family of Gomory-Hu cuts below `(t-1)^2` with every block smaller
/// than `t`, or a `K_t` immersion found inside the first oversized block.
pub fn decompose_undirected(g: &MultiGraph, t: usize) -> Result<Outcome, EngineError> {
    check_order(t)?;
    if g.is_directed() {
        return Err(GraphError::ExpectedUndirected.into());
    }
    decompose(g, t, Mode::Undirected)
}

/// Eulerian-digraph counterpart of [`decompose_undirected`]: cuts of the
/// underlying graph below `2t(t-1)`, or a bidirected `K_t` immersion.
pub fn decompose_directed(d: &MultiGraph, t: usize) -> Result<Outcome, EngineError> {
    check_order(t)?;
    if !d.is_directed() || !d.is_eulerian() {
        return Err(EngineError::NotEulerian);
    }
    decompose(d, t, Mode::Directed)
}
