use std::collections::BTreeMap;

use super::EdgeId;

/// Maps edges of a derived graph to the trail of original edges they stand for.
///
/// Edges without an entry are original edges and lift to themselves.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProvenanceMap {
    images: BTreeMap<EdgeId, Vec<EdgeId>>,
}

impl ProvenanceMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, edge: EdgeId, trail: Vec<EdgeId>) {
        self.images.insert(edge, trail);
    }

    /// Original edges abbreviated by `edge`, in trail order.
    pub fn lift(&self, edge: EdgeId) -> Vec<EdgeId> {
        match self.images.get(&edge) {
            Some(trail) => trail.clone(),
            None => vec![edge],
        }
    }

    /// Folds one rewrite step into this map. Each derived edge in `step` is
    /// expanded through the current map and the consumed entries are removed.
    pub fn absorb(&mut self, step: &ProvenanceMap) {
        for (&edge, parts) in &step.images {
            let mut trail = Vec::new();
            for &p in parts {
                match self.images.remove(&p) {
                    Some(inner) => trail.extend(inner),
                    None => trail.push(p),
                }
            }
            self.images.insert(edge, trail);
        }
    }

    /// Drops the entry of an edge that was deleted from the derived graph.
    pub fn forget(&mut self, edge: EdgeId) {
        self.images.remove(&edge);
    }

    pub fn retain(&mut self, mut keep: impl FnMut(EdgeId) -> bool) {
        self.images.retain(|&e, _| keep(e));
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, &[EdgeId])> + '_ {
        self.images.iter().map(|(&e, t)| (e, t.as_slice()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn absorb_composes_repeated_splits() {
        let mut p = ProvenanceMap::new();
        let mut step = ProvenanceMap::new();
        step.insert(EdgeId(10), vec![EdgeId(0), EdgeId(1)]);
        p.absorb(&step);
        let mut step = ProvenanceMap::new();
        step.insert(EdgeId(11), vec![EdgeId(10), EdgeId(2)]);
        p.absorb(&step);
        assert_eq!(p.lift(EdgeId(11)), vec![EdgeId(0), EdgeId(1), EdgeId(2)]);
        assert_eq!(p.lift(EdgeId(10)), vec![EdgeId(10)]);
        assert_eq!(p.lift(EdgeId(5)), vec![EdgeId(5)]);
        assert_eq!(p.len(), 1);
    }
}
