//! Derivation of pluractional word forms: base extraction, reduplicant
//! construction and concatenation, plus the pipeline that chains them.

pub mod alloc;
pub mod base;
pub mod concat;
pub mod redup;

use serde::{Deserialize, Serialize};

pub use alloc::{FreshRole, Pins, VertexAllocator};
pub use base::{
    extract_base, extract_base_correspondence, extract_base_morph, extract_base_phon, BaseForm,
    BaseSpec,
};
pub use concat::{concatenate, concatenate_counted, scope_apart, AffixPosition};
pub use redup::{
    build_partial_reduplicant, build_total_reduplicant, CopyRule, CopyWitness, ReduplicantTemplate,
};

use crate::error::DeriveError;
use crate::graph::{AffixForm, Scope, WordForm};
use crate::validate::validate_word_form;

/// How the pluractional form is marked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    Affix {
        affix: AffixForm,
        position: AffixPosition,
    },
    TotalRedup {
        base: BaseSpec,
        position: AffixPosition,
    },
    PartialRedup {
        base: BaseSpec,
        template: ReduplicantTemplate,
        position: AffixPosition,
    },
}

/// Strategy kind without its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrategyKind {
    Affix,
    TotalRedup,
    PartialRedup,
}

impl Strategy {
    pub fn kind(&self) -> StrategyKind {
        match self {
            Strategy::Affix { .. } => StrategyKind::Affix,
            Strategy::TotalRedup { .. } => StrategyKind::TotalRedup,
            Strategy::PartialRedup { .. } => StrategyKind::PartialRedup,
        }
    }
}

pub(crate) fn require_valid(w: &WordForm) -> Result<(), DeriveError> {
    let report = validate_word_form(w);
    if report.is_valid() {
        Ok(())
    } else {
        Err(DeriveError::InvalidInput(report))
    }
}

/// Builds the affix a strategy attaches: the given affix, a total copy of
/// the base, or a filled template. Returns it with the scopes used when
/// its ids clash with the stem's.
pub fn derive_affix(
    w: &WordForm,
    strategy: &Strategy,
    alloc: &mut VertexAllocator,
) -> Result<(WordForm, Scope, Scope), DeriveError> {
    match strategy {
        Strategy::Affix { affix, .. } => {
            require_valid(affix)?;
            Ok((affix.clone(), Scope::W, Scope::A))
        }
        Strategy::TotalRedup { base, .. } => {
            let bs = extract_base(w, *base)?;
            require_valid(&bs.form)?;
            let (red, _) = build_total_reduplicant(&bs, alloc);
            Ok((red, Scope::Bs, Scope::Red))
        }
        Strategy::PartialRedup { base, template, .. } => {
            let bs = extract_base(w, *base)?;
            require_valid(&bs.form)?;
            let red = build_partial_reduplicant(&bs, template, alloc)?;
            require_valid(&red)?;
            Ok((red, Scope::Bs, Scope::Red))
        }
    }
}

impl Strategy {
    pub fn position(&self) -> AffixPosition {
        match self {
            Strategy::Affix { position, .. }
            | Strategy::TotalRedup { position, .. }
            | Strategy::PartialRedup { position, .. } => *position,
        }
    }
}

/// Fresh ids start above every id in the word and in the strategy's inputs.
pub(crate) fn allocator_for(w: &WordForm, strategy: &Strategy, pins: &Pins) -> VertexAllocator {
    let extra = match strategy {
        Strategy::Affix { affix, .. } => vec![&affix.phon, &affix.morph],
        Strategy::TotalRedup { .. } => vec![],
        Strategy::PartialRedup { template, .. } => {
            vec![&template.partial_phon, &template.morph_unit]
        }
    };
    VertexAllocator::above([&w.phon, &w.morph].into_iter().chain(extra)).with_pins(pins.clone())
}

/// Derives the pluractional form of `w` under `strategy`.
pub fn derive_pluractional_form(
    w: &WordForm,
    strategy: &Strategy,
    pins: &Pins,
) -> Result<WordForm, DeriveError> {
    require_valid(w)?;
    let mut alloc = allocator_for(w, strategy, pins);
    let (affix, stem_scope, affix_scope) = derive_affix(w, strategy, &mut alloc)?;
    let (stem, affix) = scope_apart(w, &affix, stem_scope, affix_scope)?;
    let pos = strategy
        .position()
        .follow_scope(&w.phon, &stem.phon, stem_scope);
    concatenate(&stem, &affix, pos, &mut alloc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Scope, VertexId, WordForm};
    use crate::io::fixtures;

    fn added_only(before: &WordForm, after: &WordForm) -> bool {
        before.phon.vertices.is_subset(&after.phon.vertices)
            && before.phon.dominance.is_subset(&after.phon.dominance)
            && before.phon.precedence.is_subset(&after.phon.precedence)
            && before.phon.naming.is_subset(&after.phon.naming)
            && before.phon.labels.is_subset(&after.phon.labels)
            && before.morph.vertices.is_subset(&after.morph.vertices)
            && before.morph.dominance.is_subset(&after.morph.dominance)
            && before.morph.naming.is_subset(&after.morph.naming)
            && before.correspondence.is_subset(&after.correspondence)
    }

    #[test]
    fn tsix_partial_matches_expected_file() {
        let doc = fixtures::tsix_lexicon();
        let strategy = doc.strategy("ip").unwrap();
        let w2 = derive_pluractional_form(
            &doc.word_forms["tsix"],
            &doc.resolve_strategy(strategy).unwrap(),
            &strategy.pins,
        )
        .unwrap();
        assert_eq!(w2, fixtures::tsix_pluractional());
    }

    #[test]
    fn karuk_total_reduplicant_mirrors_base() {
        let doc = fixtures::karuk_lexicon();
        let binding = doc.strategy("ip").unwrap();
        let strategy = doc.resolve_strategy(binding).unwrap();
        let w = &doc.word_forms["ikxip"];
        let w2 = derive_pluractional_form(w, &strategy, &binding.pins).unwrap();
        assert!(validate_word_form(&w2).is_valid());
        let root = w2.phon.root().unwrap();
        let kids = w2.phon.children(root);
        assert_eq!(kids.len(), 2);
        let Strategy::TotalRedup { base, .. } = strategy else {
            panic!()
        };
        let bs = extract_base(w, base).unwrap();
        let base_sig = bs.form.phon.subtree_signature(bs.form.phon.root().unwrap());
        let red_root = kids.iter().copied().find(|k| !w.phon.contains(*k)).unwrap();
        assert_eq!(w2.phon.subtree_signature(red_root), base_sig);
    }

    #[test]
    fn affixation_only_adds() {
        let w = fixtures::stick();
        let strategy = Strategy::Affix {
            affix: fixtures::va_affix(),
            position: AffixPosition::Suffix,
        };
        let w2 = derive_pluractional_form(&w, &strategy, &Pins::default()).unwrap();
        // Stick and [va] share ids, so the stem is carried under its scope.
        let (stem, _) = scope_apart(&w, &fixtures::va_affix(), Scope::W, Scope::A).unwrap();
        assert_ne!(stem, w);
        assert!(added_only(&stem, &w2));
        assert_eq!(
            w2.vertex_count(),
            w.vertex_count() + fixtures::va_affix().vertex_count() + 2
        );
    }

    #[test]
    fn invalid_word_is_rejected() {
        let mut w = fixtures::stick();
        w.correspondence
            .insert((VertexId::new(99), VertexId::new(101)));
        let strategy = Strategy::TotalRedup {
            base: BaseSpec::new(101),
            position: AffixPosition::Suffix,
        };
        assert!(matches!(
            derive_pluractional_form(&w, &strategy, &Pins::default()),
            Err(DeriveError::InvalidInput(_))
        ));
    }
}
