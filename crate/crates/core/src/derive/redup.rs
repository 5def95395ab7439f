//! Reduplicant construction.
//!
//! Total reduplication copies the whole base under fresh ids. Partial
//! reduplication fills an input template: every segment dominated by a
//! source-labeled vertex of the base is copied under the template's
//! target-labeled vertex. A copy is a new vertex with the same label.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::derive::alloc::{FreshRole, VertexAllocator};
use crate::derive::base::BaseForm;
use crate::error::DeriveError;
use crate::graph::{Pair, StructureGraph, VertexId, WordForm};

/// Label carried by the single morphological vertex of a reduplicant.
pub const REDUPLICANT_LABEL: &str = "R";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopyRule {
    pub source_dominator_label: String,
    pub target_dominator_label: String,
}

impl CopyRule {
    /// Copy onset segments into the template onset.
    pub fn onset() -> Self {
        CopyRule {
            source_dominator_label: "O".into(),
            target_dominator_label: "O".into(),
        }
    }
}

/// Partial reduplicant as given in the input: prosodic shape and fixed
/// segments, the morphological unit, and the given correspondences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReduplicantTemplate {
    pub partial_phon: StructureGraph,
    pub morph_unit: StructureGraph,
    pub partial_correspondence: BTreeSet<Pair>,
    pub copy_rule: CopyRule,
}

impl ReduplicantTemplate {
    /// The morphological unit must be one vertex labeled `R`.
    pub fn check_morph_unit(&self) -> Result<(), DeriveError> {
        let unit = &self.morph_unit;
        let ok = unit.vertices.len() == 1
            && unit
                .vertices
                .iter()
                .all(|&v| unit.label_of(v) == Some(REDUPLICANT_LABEL));
        if ok {
            Ok(())
        } else {
            Err(DeriveError::NonConformingTemplate(format!(
                "morphological unit must be a single vertex labeled {REDUPLICANT_LABEL:?}"
            )))
        }
    }

    /// The unique template vertex copies attach under.
    pub fn target_vertex(&self) -> Result<VertexId, DeriveError> {
        let label = &self.copy_rule.target_dominator_label;
        match self.partial_phon.vertices_labeled(label).as_slice() {
            [t] => Ok(*t),
            found => Err(DeriveError::NonConformingTemplate(format!(
                "expected exactly one vertex labeled {label:?}, found {}",
                found.len()
            ))),
        }
    }
}

/// Phon and morph vertex maps from a base to its copy.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CopyWitness {
    pub phon: BTreeMap<VertexId, VertexId>,
    pub morph: BTreeMap<VertexId, VertexId>,
}

/// Fresh-vertex copy of the entire base. Fresh ids are drawn in vertex order,
/// phonological vertices first.
pub fn build_total_reduplicant(
    bs: &BaseForm,
    alloc: &mut VertexAllocator,
) -> (WordForm, CopyWitness) {
    let base = &bs.form;
    let witness = CopyWitness {
        phon: base
            .phon
            .vertices
            .iter()
            .map(|&v| (v, alloc.fresh(FreshRole::PhonCopy(v))))
            .collect(),
        morph: base
            .morph
            .vertices
            .iter()
            .map(|&v| (v, alloc.fresh(FreshRole::MorphCopy(v))))
            .collect(),
    };
    let red = base.renamed(&witness.phon, &witness.morph);
    (red, witness)
}

/// Segments to copy: children of every base vertex carrying the source label.
pub(crate) fn segments_to_copy(
    bs: &BaseForm,
    rule: &CopyRule,
) -> Result<BTreeSet<VertexId>, DeriveError> {
    let phon = &bs.form.phon;
    let sources = phon.vertices_labeled(&rule.source_dominator_label);
    if sources.is_empty() {
        return Err(DeriveError::NonConformingBase(format!(
            "no vertex labeled {:?}",
            rule.source_dominator_label
        )));
    }
    let segments: BTreeSet<VertexId> = sources.iter().flat_map(|&s| phon.children(s)).collect();
    if segments.is_empty() {
        return Err(DeriveError::NonConformingBase(format!(
            "vertices labeled {:?} dominate nothing",
            rule.source_dominator_label
        )));
    }
    Ok(segments)
}

/// Completes `tpl` with copies of the segments the copy rule selects.
pub fn build_partial_reduplicant(
    bs: &BaseForm,
    tpl: &ReduplicantTemplate,
    alloc: &mut VertexAllocator,
) -> Result<WordForm, DeriveError> {
    tpl.check_morph_unit()?;
    let segments = segments_to_copy(bs, &tpl.copy_rule)?;
    let target = tpl.target_vertex()?;

    let mut phon = tpl.partial_phon.clone();
    for seg in segments {
        let copy = alloc.fresh(FreshRole::PhonCopy(seg));
        if !phon.vertices.insert(copy) {
            return Err(DeriveError::IdCollision {
                side: "phon",
                vertex: copy,
            });
        }
        phon.dominance.insert((target, copy));
        let names: Vec<String> = bs
            .form
            .phon
            .naming
            .iter()
            .filter(|(v, _)| *v == seg)
            .map(|(_, l)| l.clone())
            .collect();
        for label in names {
            phon.naming.insert((copy, label));
        }
    }
    phon.labels
        .extend(phon.naming.iter().map(|(_, l)| l.clone()));

    Ok(WordForm {
        phon,
        morph: tpl.morph_unit.clone(),
        correspondence: tpl.partial_correspondence.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derive::alloc::Pins;
    use crate::derive::base::{extract_base, BaseSpec};
    use crate::graph::is_isomorphism;
    use crate::io::fixtures;
    use crate::validate::validate_word_form;

    fn v(i: u32) -> VertexId {
        VertexId::new(i)
    }

    fn tsix_base() -> BaseForm {
        extract_base(&fixtures::tsix_word(), fixtures::tsix_base_spec()).unwrap()
    }

    fn pinned() -> VertexAllocator {
        VertexAllocator::starting_at(500).with_pins(Pins {
            phon_copies: [(v(4), v(4))].into(),
            ..Pins::default()
        })
    }

    #[test]
    fn tsix_reduplicant_adds_exactly_the_onset_copy() {
        let tpl = fixtures::ca_template();
        let red = build_partial_reduplicant(&tsix_base(), &tpl, &mut pinned()).unwrap();
        let added: BTreeSet<_> = red
            .phon
            .vertices
            .difference(&tpl.partial_phon.vertices)
            .collect();
        assert_eq!(added, [&v(4)].into());
        assert!(red.phon.dominance.contains(&(v(2), v(4))));
        assert!(red.phon.naming.contains(&(v(4), "t͡s".to_owned())));
        assert!(red.phon.labels.contains("t͡s"));
        assert_eq!(red.morph, tpl.morph_unit);
        assert_eq!(red.correspondence, tpl.partial_correspondence);
        assert!(validate_word_form(&red).is_valid());
    }

    #[test]
    fn complex_onset_is_copied_whole() {
        // Give the stick word a stem correspondence for every phon vertex so
        // the base carries the full syllable.
        let mut w = fixtures::stick();
        w.correspondence = w.phon.vertices.iter().map(|&p| (p, v(101))).collect();
        let bs = extract_base(&w, BaseSpec::new(101)).unwrap();
        let tpl = fixtures::ca_template();
        let mut alloc = VertexAllocator::starting_at(20);
        let red = build_partial_reduplicant(&bs, &tpl, &mut alloc).unwrap();
        assert_eq!(red.phon.vertices.len(), tpl.partial_phon.vertices.len() + 2);
        let onset_kids: BTreeSet<String> = red
            .phon
            .children(v(2))
            .into_iter()
            .map(|c| red.phon.label_of(c).unwrap().to_owned())
            .collect();
        assert_eq!(onset_kids, ["s".to_owned(), "t".to_owned()].into());
    }

    #[test]
    fn onsetless_base_is_rejected() {
        let mut bs = tsix_base();
        bs.form.phon.naming = bs
            .form
            .phon
            .naming
            .iter()
            .map(|(x, l)| (*x, if l == "O" { "X".to_owned() } else { l.clone() }))
            .collect();
        let err = build_partial_reduplicant(&bs, &fixtures::ca_template(), &mut pinned());
        assert!(matches!(err, Err(DeriveError::NonConformingBase(_))));
    }

    #[test]
    fn empty_onset_is_rejected() {
        let mut bs = tsix_base();
        bs.form.phon.dominance.remove(&(v(2), v(4)));
        let err = build_partial_reduplicant(&bs, &fixtures::ca_template(), &mut pinned());
        assert!(matches!(err, Err(DeriveError::NonConformingBase(_))));
    }

    #[test]
    fn template_needs_single_r_unit() {
        let mut tpl = fixtures::ca_template();
        tpl.morph_unit.naming = [(v(200), "Mst".to_owned())].into();
        let err = build_partial_reduplicant(&tsix_base(), &tpl, &mut pinned());
        assert!(matches!(err, Err(DeriveError::NonConformingTemplate(_))));
    }

    #[test]
    fn pinned_copy_colliding_with_template() {
        let mut alloc = VertexAllocator::starting_at(500).with_pins(Pins {
            phon_copies: [(v(4), v(7))].into(),
            ..Pins::default()
        });
        let err = build_partial_reduplicant(&tsix_base(), &fixtures::ca_template(), &mut alloc);
        assert_eq!(
            err,
            Err(DeriveError::IdCollision {
                side: "phon",
                vertex: v(7)
            })
        );
    }

    #[test]
    fn total_copy_is_isomorphic() {
        let bs = tsix_base();
        let mut alloc = VertexAllocator::above([&bs.form.phon, &bs.form.morph]);
        let (red, witness) = build_total_reduplicant(&bs, &mut alloc);
        assert!(is_isomorphism(&bs.form.phon, &red.phon, &witness.phon));
        assert!(is_isomorphism(&bs.form.morph, &red.morph, &witness.morph));
        assert!(red.phon.vertices.is_disjoint(&bs.form.phon.vertices));
        assert_eq!(red.phon.label_multiset(), bs.form.phon.label_multiset());
        assert_eq!(red.correspondence.len(), bs.form.correspondence.len());
    }

    #[test]
    fn single_vertex_base() {
        let g = StructureGraph {
            vertices: [v(0)].into(),
            labels: ["x".to_owned()].into(),
            naming: [(v(0), "x".to_owned())].into(),
            ..StructureGraph::default()
        };
        let bs = BaseForm {
            base_vertex: v(0),
            form: WordForm {
                phon: g.clone(),
                morph: g,
                correspondence: [(v(0), v(0))].into(),
            },
        };
        let (red, _) = build_total_reduplicant(&bs, &mut VertexAllocator::starting_at(1));
        assert_eq!(red.phon.vertices.len(), 1);
        assert_eq!(red.correspondence, [(v(1), v(2))].into());
    }

    #[test]
    fn two_copies_are_mutually_isomorphic() {
        let bs = tsix_base();
        let mut alloc = VertexAllocator::starting_at(100);
        let (a, _) = build_total_reduplicant(&bs, &mut alloc);
        let (b, _) = build_total_reduplicant(&bs, &mut alloc);
        let ra = a.phon.root().unwrap();
        let rb = b.phon.root().unwrap();
        assert_eq!(a.phon.subtree_signature(ra), b.phon.subtree_signature(rb));
        assert!(a.phon.vertices.is_disjoint(&b.phon.vertices));
    }
}
