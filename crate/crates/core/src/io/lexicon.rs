use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::derive::{AffixPosition, BaseSpec, Pins, ReduplicantTemplate, Strategy, StrategyKind};
use crate::error::IoError;
use crate::graph::{AffixForm, VertexId, WordForm};
use crate::io::canonical::{parse_json, to_canonical_string};
use crate::io::FORMAT_VERSION;
use crate::validate::{validate_structure, validate_word_form, ValidationReport};

/// A named way of deriving the pluractional form of one word form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StrategyBinding {
    /// Name of the word form the strategy applies to.
    pub verb: String,
    pub kind: StrategyKind,
    pub position: AffixPosition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_vertex: Option<VertexId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub template: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub affix: Option<String>,
    #[serde(default, skip_serializing_if = "Pins::is_empty")]
    pub pins: Pins,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LexiconDocument {
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
    #[serde(default)]
    pub word_forms: BTreeMap<String, WordForm>,
    #[serde(default)]
    pub affixes: BTreeMap<String, AffixForm>,
    #[serde(default)]
    pub templates: BTreeMap<String, ReduplicantTemplate>,
    #[serde(default)]
    pub strategies: BTreeMap<String, StrategyBinding>,
}

impl Default for LexiconDocument {
    fn default() -> Self {
        LexiconDocument {
            format_version: FORMAT_VERSION,
            metadata: BTreeMap::new(),
            word_forms: BTreeMap::new(),
            affixes: BTreeMap::new(),
            templates: BTreeMap::new(),
            strategies: BTreeMap::new(),
        }
    }
}

fn reference(location: String, name: impl Into<String>) -> IoError {
    IoError::Reference {
        location,
        name: name.into(),
    }
}

fn require_valid(location: String, report: ValidationReport) -> Result<(), IoError> {
    if report.is_valid() {
        Ok(())
    } else {
        Err(IoError::Invalid { location, report })
    }
}

impl LexiconDocument {
    pub fn strategy(&self, name: &str) -> Result<&StrategyBinding, IoError> {
        self.strategies
            .get(name)
            .ok_or_else(|| reference("strategies".into(), name))
    }

    /// Looks up the affix or template a binding names and builds the
    /// derivation strategy.
    pub fn resolve_strategy(&self, b: &StrategyBinding) -> Result<Strategy, IoError> {
        let loc = || format!("strategy for {:?}", b.verb);
        let base = || {
            b.base_vertex
                .map(BaseSpec::new)
                .ok_or_else(|| reference(loc(), "base_vertex"))
        };
        Ok(match b.kind {
            StrategyKind::Affix => {
                let name = b
                    .affix
                    .as_deref()
                    .ok_or_else(|| reference(loc(), "affix"))?;
                let affix = self
                    .affixes
                    .get(name)
                    .ok_or_else(|| reference(loc(), name))?;
                Strategy::Affix {
                    affix: affix.clone(),
                    position: b.position,
                }
            }
            StrategyKind::TotalRedup => Strategy::TotalRedup {
                base: base()?,
                position: b.position,
            },
            StrategyKind::PartialRedup => {
                let name = b
                    .template
                    .as_deref()
                    .ok_or_else(|| reference(loc(), "template"))?;
                let template = self
                    .templates
                    .get(name)
                    .ok_or_else(|| reference(loc(), name))?;
                Strategy::PartialRedup {
                    base: base()?,
                    template: template.clone(),
                    position: b.position,
                }
            }
        })
    }

    /// Checks the version, every contained structure and every reference.
    pub fn validate(&self) -> Result<(), IoError> {
        if self.format_version != FORMAT_VERSION {
            return Err(IoError::UnsupportedVersion(self.format_version));
        }
        for (name, w) in &self.word_forms {
            require_valid(format!("word_forms.{name}"), validate_word_form(w))?;
        }
        for (name, a) in &self.affixes {
            require_valid(format!("affixes.{name}"), validate_word_form(a))?;
        }
        for (name, t) in &self.templates {
            let loc = format!("templates.{name}");
            require_valid(loc.clone(), validate_structure(&t.partial_phon))?;
            require_valid(loc.clone(), validate_structure(&t.morph_unit))?;
            let as_form = WordForm {
                phon: t.partial_phon.clone(),
                morph: t.morph_unit.clone(),
                correspondence: t.partial_correspondence.clone(),
            };
            require_valid(loc.clone(), validate_word_form(&as_form))?;
            t.check_morph_unit()
                .and_then(|_| t.target_vertex())
                .map_err(|e| IoError::Domain(format!("{loc}: {e}")))?;
        }
        for (name, b) in &self.strategies {
            let loc = format!("strategies.{name}");
            let w = self
                .word_forms
                .get(&b.verb)
                .ok_or_else(|| reference(loc.clone(), b.verb.clone()))?;
            self.resolve_strategy(b)?;
            if let Some(v) = b.base_vertex {
                if !w.morph.contains(v) {
                    return Err(reference(loc.clone(), v.to_string()));
                }
            }
            if let AffixPosition::Infix { anchor } = b.position {
                if !w.phon.contains(anchor) {
                    return Err(reference(loc, anchor.to_string()));
                }
            }
        }
        Ok(())
    }
}

/// Parses without validating; used to report everything wrong with a file.
pub fn parse_lexicon_unvalidated(bytes: &[u8]) -> Result<LexiconDocument, IoError> {
    parse_json(bytes)
}

pub fn parse_lexicon(bytes: &[u8]) -> Result<LexiconDocument, IoError> {
    let doc = parse_lexicon_unvalidated(bytes)?;
    doc.validate()?;
    Ok(doc)
}

pub fn serialize_lexicon(doc: &LexiconDocument) -> String {
    to_canonical_string(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::fixtures;

    #[test]
    fn empty_lexicon_is_minimal() {
        let s = serialize_lexicon(&LexiconDocument::default());
        assert_eq!(
            s,
            "{\n  \"affixes\": {},\n  \"format_version\": 1,\n  \"strategies\": {},\n  \"templates\": {},\n  \"word_forms\": {}\n}\n"
        );
        assert_eq!(
            parse_lexicon(s.as_bytes()).unwrap(),
            LexiconDocument::default()
        );
    }

    #[test]
    fn stick_round_trip_is_byte_identical() {
        let text = fixtures::STICK_JSON;
        let doc = parse_lexicon(text.as_bytes()).unwrap();
        let once = serialize_lexicon(&doc);
        assert_eq!(once, text);
        assert_eq!(
            serialize_lexicon(&parse_lexicon(once.as_bytes()).unwrap()),
            once
        );
    }

    #[test]
    fn unknown_template_is_a_reference_error() {
        let mut doc = fixtures::tsix_lexicon();
        doc.templates.clear();
        assert!(matches!(doc.validate(), Err(IoError::Reference { name, .. }) if name == "ca"));
    }

    #[test]
    fn broken_correspondence_is_invalid() {
        let mut doc = fixtures::tsix_lexicon();
        let w = doc.word_forms.get_mut("tsix").unwrap();
        w.correspondence
            .insert((VertexId::new(42), VertexId::new(100)));
        assert!(matches!(doc.validate(), Err(IoError::Invalid { .. })));
    }

    #[test]
    fn version_is_checked() {
        let text = fixtures::STICK_JSON.replace("\"format_version\": 1", "\"format_version\": 7");
        assert!(matches!(
            parse_lexicon(text.as_bytes()),
            Err(IoError::UnsupportedVersion(7))
        ));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = fixtures::STICK_JSON.replacen('{', "{\n  \"extra\": 1,", 1);
        assert!(matches!(
            parse_lexicon(text.as_bytes()),
            Err(IoError::Syntax { .. })
        ));
    }
}
