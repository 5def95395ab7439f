//! Extraction of the base for reduplication: the morphological constituent
//! named by a [`BaseSpec`], the correspondences it takes part in, and the
//! phonological material those correspondences reach.
//!
//! Correspondence pairs are always written (phon, morph). Filtering keys on
//! the morphological member and selection takes the phonological member,
//! whatever position a listing might suggest.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::DeriveError;
use crate::graph::{Pair, StructureGraph, VertexId, WordForm};

/// Names the morphological vertex whose constituent is the base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseSpec {
    pub base_vertex: VertexId,
}

impl BaseSpec {
    pub fn new(base_vertex: impl Into<VertexId>) -> Self {
        BaseSpec {
            base_vertex: base_vertex.into(),
        }
    }
}

/// The base for reduplication, shaped like a word form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseForm {
    pub base_vertex: VertexId,
    pub form: WordForm,
}

/// Morphological content of the base: the base vertex, everything it
/// dominates, the restricted relations, and the full source label set.
pub fn extract_base_morph(w: &WordForm, spec: BaseSpec) -> Result<StructureGraph, DeriveError> {
    let mut keep = w.morph.dominance_closure(spec.base_vertex)?;
    keep.insert(spec.base_vertex);
    let mut m = w.morph.restricted_to(&keep);
    m.labels = w.morph.labels.clone();
    Ok(m)
}

/// Correspondence pairs whose morphological member lies in `m_prime`.
pub fn extract_base_correspondence(w: &WordForm, m_prime: &StructureGraph) -> BTreeSet<Pair> {
    w.correspondence
        .iter()
        .filter(|(_, m)| m_prime.contains(*m))
        .copied()
        .collect()
}

/// Phonological content of the base: phon vertices named by `c_prime`, the
/// relations among them, and the full source label set.
pub fn extract_base_phon(w: &WordForm, c_prime: &BTreeSet<Pair>) -> StructureGraph {
    let keep: BTreeSet<VertexId> = w
        .phon
        .vertices
        .iter()
        .copied()
        .filter(|v| c_prime.iter().any(|(p, _)| p == v))
        .collect();
    let mut p = w.phon.restricted_to(&keep);
    p.labels = w.phon.labels.clone();
    p
}

/// Runs the three extraction steps in order.
pub fn extract_base(w: &WordForm, spec: BaseSpec) -> Result<BaseForm, DeriveError> {
    let morph = extract_base_morph(w, spec)?;
    let correspondence = extract_base_correspondence(w, &morph);
    let phon = extract_base_phon(w, &correspondence);
    Ok(BaseForm {
        base_vertex: spec.base_vertex,
        form: WordForm {
            phon,
            morph,
            correspondence,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::fixtures;

    fn v(i: u32) -> VertexId {
        VertexId::new(i)
    }

    fn vs(xs: &[u32]) -> BTreeSet<VertexId> {
        xs.iter().copied().map(v).collect()
    }

    #[test]
    fn stem_vertex_alone() {
        let w = fixtures::stick();
        let m = extract_base_morph(&w, BaseSpec::new(101)).unwrap();
        assert_eq!(m.vertices, vs(&[101]));
        assert!(m.dominance.is_empty());
        assert_eq!(m.naming, [(v(101), "Mst".to_owned())].into());
        assert_eq!(m.labels, w.morph.labels);
    }

    #[test]
    fn word_vertex_takes_stem() {
        let w = fixtures::stick();
        let m = extract_base_morph(&w, BaseSpec::new(100)).unwrap();
        assert_eq!(m.vertices, vs(&[100, 101]));
        assert_eq!(m.dominance, [(v(100), v(101))].into());
    }

    #[test]
    fn unknown_base_vertex() {
        let w = fixtures::stick();
        assert_eq!(
            extract_base_morph(&w, BaseSpec::new(5)),
            Err(DeriveError::UnknownVertex(v(5)))
        );
    }

    #[test]
    fn correspondence_filtered_on_morph_side() {
        let w = fixtures::stick();
        let m = extract_base_morph(&w, BaseSpec::new(101)).unwrap();
        let c = extract_base_correspondence(&w, &m);
        assert_eq!(
            c,
            [
                (v(7), v(101)),
                (v(8), v(101)),
                (v(9), v(101)),
                (v(10), v(101))
            ]
            .into()
        );

        let m = extract_base_morph(&w, BaseSpec::new(100)).unwrap();
        assert_eq!(extract_base_correspondence(&w, &m), w.correspondence);
    }

    #[test]
    fn empty_correspondence_filters_to_empty() {
        let mut w = fixtures::stick();
        w.correspondence.clear();
        let m = extract_base_morph(&w, BaseSpec::new(100)).unwrap();
        assert!(extract_base_correspondence(&w, &m).is_empty());
    }

    #[test]
    fn stick_segments() {
        let w = fixtures::stick();
        let c = [
            (v(7), v(101)),
            (v(8), v(101)),
            (v(9), v(101)),
            (v(10), v(101)),
        ]
        .into();
        let p = extract_base_phon(&w, &c);
        assert_eq!(p.vertices, vs(&[7, 8, 9, 10]));
        assert!(p.dominance.is_empty());
        assert_eq!(p.precedence, [(v(7), v(8))].into());
        assert_eq!(p.labels, w.phon.labels);
    }

    #[test]
    fn empty_correspondence_gives_empty_graph() {
        let w = fixtures::stick();
        let p = extract_base_phon(&w, &BTreeSet::new());
        assert!(p.vertices.is_empty() && p.dominance.is_empty() && p.naming.is_empty());
    }

    #[test]
    fn tsix_base_matches_listing() {
        let w = fixtures::tsix_word();
        let bs = extract_base(&w, fixtures::tsix_base_spec()).unwrap();
        let expected = fixtures::tsix_base_phon();
        assert_eq!(bs.form.phon.vertices, expected.vertices);
        assert_eq!(bs.form.phon.dominance, expected.dominance);
        assert_eq!(bs.form.phon.precedence, expected.precedence);
        assert_eq!(bs.form.phon.naming, expected.naming);
        assert!(bs.form.phon.labels.is_superset(&expected.labels));
    }
}
