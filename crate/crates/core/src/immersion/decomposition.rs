use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Mode;
use crate::graph::{MultiGraph, VertexId};
use crate::laminar::first_crossing;

/// One selected cut: the Gomory-Hu tree edge it comes from, the side of its
/// fundamental bipartition containing `tree_edge.0`, and `|δ(side)|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelectedCut {
    pub tree_edge: (VertexId, VertexId),
    pub side: Vec<VertexId>,
    pub size: usize,
}

/// Laminar family of small cuts together with the vertex partition it induces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaminarDecomposition {
    pub mode: Mode,
    pub t: usize,
    pub threshold: usize,
    pub cuts: Vec<SelectedCut>,
    /// Sorted blocks ordered by smallest member.
    pub blocks: Vec<Vec<VertexId>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionViolation {
    #[error("clique order {0} is below 2")]
    PatternTooSmall(usize),
    #[error("decomposition is for t={found} but t={expected} was requested")]
    OrderMismatch { expected: usize, found: usize },
    #[error("decomposition mode {found:?} does not match {expected:?}")]
    ModeMismatch { expected: Mode, found: Mode },
    #[error("threshold {found} should be {expected}")]
    ThresholdMismatch { expected: usize, found: usize },
    #[error("cut {index} has a side that is empty, fills its component, spans components or names unknown vertices")]
    BadSide { index: usize },
    #[error("cut {index} reports size {reported} but {actual} edges cross it")]
    Miscounted {
        index: usize,
        reported: usize,
        actual: usize,
    },
    #[error("cut {index} has size {size}, not below the threshold {threshold}")]
    CutTooLarge {
        index: usize,
        size: usize,
        threshold: usize,
    },
    #[error("cuts {first} and {second} cross")]
    Crossing { first: usize, second: usize },
    #[error("vertex {0} is missing from the blocks, repeated, or unknown")]
    NotAPartition(VertexId),
    #[error("block {index} has {size} vertices, not below t={t}")]
    BlockTooLarge { index: usize, size: usize, t: usize },
    #[error("blocks do not match the partition induced by the cuts (vertex {0})")]
    BlocksDisagree(VertexId),
}

/// Re-checks a decomposition directly against `g`: cut sizes are recounted,
/// cuts must be pairwise uncrossed per component, the blocks must partition
/// the vertex set exactly as the cuts and components do, and every block must
/// have fewer than `t` vertices.
pub fn verify_decomposition(
    g: &MultiGraph,
    t: usize,
    mode: Mode,
    dec: &LaminarDecomposition,
) -> Result<(), DecompositionViolation> {
    use DecompositionViolation as V;

    if t < 2 {
        return Err(V::PatternTooSmall(t));
    }
    if dec.t != t {
        return Err(V::OrderMismatch {
            expected: t,
            found: dec.t,
        });
    }
    if dec.mode != mode || mode.is_directed() != g.is_directed() {
        return Err(V::ModeMismatch {
            expected: Mode::of(g.is_directed()),
            found: dec.mode,
        });
    }
    let threshold = mode.threshold(t);
    if dec.threshold != threshold {
        return Err(V::ThresholdMismatch {
            expected: threshold,
            found: dec.threshold,
        });
    }

    let n = g.vertex_count();
    let component = g.component_labels();
    let mut sides = Vec::with_capacity(dec.cuts.len());
    for (index, cut) in dec.cuts.iter().enumerate() {
        let mut mask = vec![false; n];
        for &v in &cut.side {
            if v >= n || mask[v] {
                return Err(V::BadSide { index });
            }
            mask[v] = true;
        }
        let comps: BTreeSet<usize> = cut.side.iter().map(|&v| component[v]).collect();
        let [c] = comps.into_iter().collect::<Vec<_>>()[..] else {
            return Err(V::BadSide { index });
        };
        if (0..n).all(|v| component[v] != c || mask[v]) {
            return Err(V::BadSide { index });
        }
        let actual = g.cut_size(&mask);
        if actual != cut.size {
            return Err(V::Miscounted {
                index,
                reported: cut.size,
                actual,
            });
        }
        if cut.size >= threshold {
            return Err(V::CutTooLarge {
                index,
                size: cut.size,
                threshold,
            });
        }
        sides.push(mask);
    }
    if let Some((first, second)) = first_crossing(&component, &sides) {
        return Err(V::Crossing { first, second });
    }

    let mut block_of = vec![usize::MAX; n];
    for (index, block) in dec.blocks.iter().enumerate() {
        for &v in block {
            if v >= n || block_of[v] != usize::MAX {
                return Err(V::NotAPartition(v));
            }
            block_of[v] = index;
        }
    }
    if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
        return Err(V::NotAPartition(v));
    }
    for (index, block) in dec.blocks.iter().enumerate() {
        if block.len() >= t {
            return Err(V::BlockTooLarge {
                index,
                size: block.len(),
                t,
            });
        }
    }

    // atoms of the family: same component and same side of every cut
    let signature = |v: VertexId| -> (usize, Vec<bool>) {
        (component[v], sides.iter().map(|s| s[v]).collect())
    };
    let mut atom_block: BTreeMap<(usize, Vec<bool>), usize> = BTreeMap::new();
    let mut block_atom: BTreeMap<usize, (usize, Vec<bool>)> = BTreeMap::new();
    for v in 0..n {
        let sig = signature(v);
        if *atom_block.entry(sig.clone()).or_insert(block_of[v]) != block_of[v] {
            return Err(V::BlocksDisagree(v));
        }
        if *block_atom.entry(block_of[v]).or_insert(sig.clone()) != sig {
            return Err(V::BlocksDisagree(v));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bridged_triangles() -> MultiGraph {
        MultiGraph::from_edges(6, false, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
            .unwrap()
    }

    fn handmade() -> LaminarDecomposition {
        // just the bridge cut: blocks are the two triangles (t = 4, threshold 9)
        LaminarDecomposition {
            mode: Mode::Undirected,
            t: 4,
            threshold: 9,
            cuts: vec![SelectedCut {
                tree_edge: (2, 3),
                side: vec![0, 1, 2],
                size: 1,
            }],
            blocks: vec![vec![0, 1, 2], vec![3, 4, 5]],
        }
    }

    #[test]
    fn handmade_passes() {
        assert_eq!(
            verify_decomposition(&bridged_triangles(), 4, Mode::Undirected, &handmade()),
            Ok(())
        );
    }

    #[test]
    fn merged_blocks_fail() {
        let mut dec = handmade();
        dec.blocks = vec![(0..6).collect()];
        assert!(matches!(
            verify_decomposition(&bridged_triangles(), 4, Mode::Undirected, &dec),
            Err(DecompositionViolation::BlockTooLarge { .. })
        ));
        // below the size bound the mismatch with the cut family is caught
        let mut dec = handmade();
        dec.t = 7;
        dec.threshold = 36;
        dec.blocks = vec![(0..6).collect()];
        assert_eq!(
            verify_decomposition(&bridged_triangles(), 7, Mode::Undirected, &dec),
            Err(DecompositionViolation::BlocksDisagree(3))
        );
    }

    #[test]
    fn misreported_size_fails() {
        let mut dec = handmade();
        dec.cuts[0].size = 0;
        assert_eq!(
            verify_decomposition(&bridged_triangles(), 4, Mode::Undirected, &dec),
            Err(DecompositionViolation::Miscounted {
                index: 0,
                reported: 0,
                actual: 1
            })
        );
    }

    #[test]
    fn crossing_cuts_fail() {
        let g = MultiGraph::from_edges(4, false, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let dec = LaminarDecomposition {
            mode: Mode::Undirected,
            t: 4,
            threshold: 9,
            cuts: vec![
                SelectedCut { tree_edge: (0, 1), side: vec![0, 1], size: 2 },
                SelectedCut { tree_edge: (1, 2), side: vec![1, 2], size: 2 },
            ],
            blocks: vec![vec![0], vec![1], vec![2], vec![3]],
        };
        assert_eq!(
            verify_decomposition(&g, 4, Mode::Undirected, &dec),
            Err(DecompositionViolation::Crossing { first: 0, second: 1 })
        );
    }

    #[test]
    fn header_checks() {
        let g = bridged_triangles();
        let dec = handmade();
        assert!(matches!(
            verify_decomposition(&g, 3, Mode::Undirected, &dec),
            Err(DecompositionViolation::OrderMismatch { .. })
        ));
        assert!(matches!(
            verify_decomposition(&g, 4, Mode::Directed, &dec),
            Err(DecompositionViolation::ModeMismatch { .. })
        ));
        let mut bad = dec.clone();
        bad.threshold = 10;
        assert!(matches!(
            verify_decomposition(&g, 4, Mode::Undirected, &bad),
            Err(DecompositionViolation::ThresholdMismatch { .. })
        ));
        let mut big = dec;
        big.cuts[0].side = (0..6).collect();
        big.cuts[0].size = 0;
        assert_eq!(
            verify_decomposition(&g, 4, Mode::Undirected, &big),
            Err(DecompositionViolation::BadSide { index: 0 })
        );
    }
}
