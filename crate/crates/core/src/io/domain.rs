use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{IoError, SemanticsError};
use crate::io::canonical::{parse_json, to_canonical_string};
use crate::io::FORMAT_VERSION;
use crate::semantics::{AtomId, Event, EventDomain, IndividualDomain, Model, VerbMeaning};

/// Largest atom group a `close_over` directive may expand.
pub const MAX_CLOSURE_ATOMS: usize = 16;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerbEntry {
    pub extension: BTreeSet<Event>,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub agents: BTreeSet<String>,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub themes: BTreeSet<String>,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub subevents: BTreeSet<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DomainDocument {
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
    pub atoms: BTreeSet<AtomId>,
    #[serde(default)]
    pub plurals: BTreeSet<BTreeSet<AtomId>>,
    /// Each group adds every subset of itself with at least two atoms.
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub close_over: BTreeSet<BTreeSet<AtomId>>,
    #[serde(default)]
    pub superposition: BTreeMap<AtomId, BTreeSet<AtomId>>,
    #[serde(default)]
    pub individuals: BTreeSet<String>,
    #[serde(default)]
    pub verbs: BTreeMap<String, VerbEntry>,
}

impl Default for DomainDocument {
    fn default() -> Self {
        DomainDocument {
            format_version: FORMAT_VERSION,
            metadata: BTreeMap::new(),
            atoms: BTreeSet::new(),
            plurals: BTreeSet::new(),
            close_over: BTreeSet::new(),
            superposition: BTreeMap::new(),
            individuals: BTreeSet::new(),
            verbs: BTreeMap::new(),
        }
    }
}

fn subsets_of_size_two_or_more(group: &BTreeSet<AtomId>) -> Result<Vec<BTreeSet<AtomId>>, IoError> {
    if group.len() > MAX_CLOSURE_ATOMS {
        return Err(IoError::ClosureTooLarge {
            size: group.len(),
            max: MAX_CLOSURE_ATOMS,
        });
    }
    let atoms: Vec<&AtomId> = group.iter().collect();
    Ok((0u32..1 << atoms.len())
        .filter(|m| m.count_ones() >= 2)
        .map(|m| {
            atoms
                .iter()
                .enumerate()
                .filter(|(i, _)| m & (1 << i) != 0)
                .map(|(_, a)| (*a).clone())
                .collect()
        })
        .collect())
}

fn domain_error(e: SemanticsError) -> IoError {
    match e {
        SemanticsError::UndefinedSubevent { verb, subevent } => IoError::Reference {
            location: format!("verbs.{verb}.subevents"),
            name: subevent,
        },
        other => IoError::Domain(other.to_string()),
    }
}

impl DomainDocument {
    /// Plurals listed explicitly together with those produced by closure.
    pub fn expanded_plurals(&self) -> Result<BTreeSet<BTreeSet<AtomId>>, IoError> {
        let mut plurals = self.plurals.clone();
        for group in &self.close_over {
            plurals.extend(subsets_of_size_two_or_more(group)?);
        }
        Ok(plurals)
    }

    /// Builds the model, checking every domain invariant.
    pub fn model(&self) -> Result<Model, IoError> {
        if self.format_version != FORMAT_VERSION {
            return Err(IoError::UnsupportedVersion(self.format_version));
        }
        for group in &self.close_over {
            if let Some(a) = group.iter().find(|a| !self.atoms.contains(*a)) {
                return Err(IoError::Reference {
                    location: "close_over".into(),
                    name: a.clone(),
                });
            }
        }
        for (a, over) in &self.superposition {
            if let Some(x) = std::iter::once(a)
                .chain(over)
                .find(|x| !self.atoms.contains(*x))
            {
                return Err(IoError::Reference {
                    location: format!("superposition.{a}"),
                    name: x.clone(),
                });
            }
        }
        let events = EventDomain::new(
            self.atoms.clone(),
            self.expanded_plurals()?,
            self.superposition.clone(),
        )
        .map_err(domain_error)?;
        let verbs = self.verbs.iter().map(|(name, v)| VerbMeaning {
            name: name.clone(),
            extension: v.extension.clone(),
            agents: v.agents.clone(),
            themes: v.themes.clone(),
            subevents: v.subevents.clone(),
        });
        let individuals = IndividualDomain {
            individuals: self.individuals.clone(),
        };
        Model::new(events, individuals, verbs).map_err(domain_error)
    }

    /// A document listing every plural of `model` explicitly.
    pub fn from_model(model: &Model) -> Self {
        DomainDocument {
            atoms: model.events.atoms().clone(),
            plurals: model.events.plurals().clone(),
            superposition: model.events.superposition().clone(),
            individuals: model.individuals.individuals.clone(),
            verbs: model
                .verbs
                .iter()
                .map(|(name, v)| {
                    let entry = VerbEntry {
                        extension: v.extension.clone(),
                        agents: v.agents.clone(),
                        themes: v.themes.clone(),
                        subevents: v.subevents.clone(),
                    };
                    (name.clone(), entry)
                })
                .collect(),
            ..DomainDocument::default()
        }
    }
}

pub fn parse_domain_unvalidated(bytes: &[u8]) -> Result<DomainDocument, IoError> {
    parse_json(bytes)
}

pub fn parse_domain(bytes: &[u8]) -> Result<DomainDocument, IoError> {
    let doc = parse_domain_unvalidated(bytes)?;
    doc.model()?;
    Ok(doc)
}

pub fn serialize_domain(doc: &DomainDocument) -> String {
    to_canonical_string(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::fixtures;
    use crate::semantics::derive_ip;

    #[test]
    fn sit_domain_loads_with_nonempty_ip() {
        let doc = parse_domain(fixtures::SIT_JSON.as_bytes()).unwrap();
        let model = doc.model().unwrap();
        assert!(!derive_ip(&model, "sit").unwrap().is_empty());
        assert_eq!(serialize_domain(&doc), fixtures::SIT_JSON);
    }

    #[test]
    fn closure_of_twenty_atoms_is_too_large() {
        let atoms: BTreeSet<AtomId> = (0..20).map(|i| format!("e{i}")).collect();
        let doc = DomainDocument {
            close_over: [atoms.clone()].into(),
            atoms,
            ..DomainDocument::default()
        };
        assert!(matches!(
            doc.model(),
            Err(IoError::ClosureTooLarge { size: 20, max: 16 })
        ));
    }

    #[test]
    fn closure_expands_to_subsets() {
        let atoms: BTreeSet<AtomId> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let doc = DomainDocument {
            close_over: [atoms.clone()].into(),
            atoms,
            ..DomainDocument::default()
        };
        assert_eq!(doc.model().unwrap().events.event_count(), 7);
    }

    #[test]
    fn superposition_over_unknown_atom() {
        let text = r#"{"format_version": 1, "atoms": ["a"], "superposition": {"a": ["zz"]}}"#;
        assert!(matches!(
            parse_domain(text.as_bytes()),
            Err(IoError::Reference { name, .. }) if name == "zz"
        ));
    }

    #[test]
    fn model_round_trip() {
        let model = parse_domain(fixtures::SIT_JSON.as_bytes())
            .unwrap()
            .model()
            .unwrap();
        let doc = DomainDocument::from_model(&model);
        assert_eq!(doc.model().unwrap(), model);
    }
}
