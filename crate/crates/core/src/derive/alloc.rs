use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::graph::{StructureGraph, VertexId};

/// What a freshly allocated vertex is for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FreshRole {
    /// Copy of the given phonological base vertex.
    PhonCopy(VertexId),
    /// Copy of the given morphological base vertex.
    MorphCopy(VertexId),
    /// New phonological root added by concatenation.
    PhonRoot,
    /// New morphological root added by concatenation.
    MorphRoot,
}

/// Fixed ids for selected fresh vertices, so derivations can reproduce
/// published numbering exactly.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pins {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub phon_copies: BTreeMap<VertexId, VertexId>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub morph_copies: BTreeMap<VertexId, VertexId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phon_root: Option<VertexId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morph_root: Option<VertexId>,
}

impl Pins {
    pub fn is_empty(&self) -> bool {
        *self == Pins::default()
    }

    fn get(&self, role: FreshRole) -> Option<VertexId> {
        match role {
            FreshRole::PhonCopy(v) => self.phon_copies.get(&v).copied(),
            FreshRole::MorphCopy(v) => self.morph_copies.get(&v).copied(),
            FreshRole::PhonRoot => self.phon_root,
            FreshRole::MorphRoot => self.morph_root,
        }
    }

    fn all(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.phon_copies
            .values()
            .chain(self.morph_copies.values())
            .chain(self.phon_root.iter())
            .chain(self.morph_root.iter())
            .copied()
    }
}

/// Monotone per-derivation id source. Unpinned ids count upward from a
/// starting index and skip every pinned id.
#[derive(Debug, Clone)]
pub struct VertexAllocator {
    next: u32,
    pins: Pins,
    reserved: BTreeSet<VertexId>,
}

impl VertexAllocator {
    pub fn starting_at(next: u32) -> Self {
        VertexAllocator {
            next,
            pins: Pins::default(),
            reserved: BTreeSet::new(),
        }
    }

    /// Start one past the largest index used in any of `graphs`.
    pub fn above<'a>(graphs: impl IntoIterator<Item = &'a StructureGraph>) -> Self {
        let next = graphs
            .into_iter()
            .filter_map(StructureGraph::max_index)
            .max()
            .map_or(0, |m| m + 1);
        Self::starting_at(next)
    }

    pub fn with_pins(mut self, pins: Pins) -> Self {
        self.reserved = pins.all().collect();
        self.pins = pins;
        self
    }

    pub fn fresh(&mut self, role: FreshRole) -> VertexId {
        if let Some(v) = self.pins.get(role) {
            return v;
        }
        loop {
            let v = VertexId::new(self.next);
            self.next += 1;
            if !self.reserved.contains(&v) {
                return v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_up_and_skips_pins() {
        let pins = Pins {
            phon_root: Some(VertexId::new(11)),
            ..Pins::default()
        };
        let mut a = VertexAllocator::starting_at(10).with_pins(pins);
        assert_eq!(a.fresh(FreshRole::MorphRoot), VertexId::new(10));
        assert_eq!(
            a.fresh(FreshRole::PhonCopy(VertexId::new(3))),
            VertexId::new(12)
        );
        assert_eq!(a.fresh(FreshRole::PhonRoot), VertexId::new(11));
    }

    #[test]
    fn above_empty_starts_at_zero() {
        let mut a = VertexAllocator::above([&StructureGraph::new()]);
        assert_eq!(a.fresh(FreshRole::PhonRoot), VertexId::new(0));
    }
}
