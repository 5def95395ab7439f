use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::SemanticsError;

pub type AtomId = String;

/// An event of the model: an atom, or a plurality given by its atoms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Event {
    Atom(AtomId),
    Plural(BTreeSet<AtomId>),
}

impl Event {
    pub fn atom(id: impl Into<AtomId>) -> Self {
        Event::Atom(id.into())
    }

    pub fn plural<I, S>(ids: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<AtomId>,
    {
        Event::Plural(ids.into_iter().map(Into::into).collect())
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Event::Atom(_))
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Event::Atom(a) => f.write_str(a),
            Event::Plural(xs) => {
                f.write_str("{")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    f.write_str(x)?;
                }
                f.write_str("}")
            }
        }
    }
}

/// Events of the model. A plural is a set of at least two atoms; the
/// superposition map sends an atom to the atoms it is superimposed over.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EventDomain {
    atoms: BTreeSet<AtomId>,
    plurals: BTreeSet<BTreeSet<AtomId>>,
    superposition: BTreeMap<AtomId, BTreeSet<AtomId>>,
}

impl EventDomain {
    pub fn new(
        atoms: BTreeSet<AtomId>,
        plurals: BTreeSet<BTreeSet<AtomId>>,
        superposition: BTreeMap<AtomId, BTreeSet<AtomId>>,
    ) -> Result<Self, SemanticsError> {
        for p in &plurals {
            if p.len() < 2 {
                return Err(SemanticsError::InvalidDomain(format!(
                    "plural {} has fewer than two atoms",
                    Event::Plural(p.clone())
                )));
            }
            if let Some(x) = p.iter().find(|x| !atoms.contains(*x)) {
                return Err(SemanticsError::InvalidDomain(format!(
                    "plural {} contains unknown atom {x:?}",
                    Event::Plural(p.clone())
                )));
            }
        }
        for (a, over) in &superposition {
            if !atoms.contains(a) {
                return Err(SemanticsError::InvalidDomain(format!(
                    "superposition given for unknown atom {a:?}"
                )));
            }
            if let Some(x) = over.iter().find(|x| !atoms.contains(*x)) {
                return Err(SemanticsError::InvalidDomain(format!(
                    "atom {a:?} is superimposed over unknown atom {x:?}"
                )));
            }
        }
        Ok(EventDomain {
            atoms,
            plurals,
            superposition,
        })
    }

    pub fn atoms(&self) -> &BTreeSet<AtomId> {
        &self.atoms
    }

    pub fn plurals(&self) -> &BTreeSet<BTreeSet<AtomId>> {
        &self.plurals
    }

    pub fn superposition(&self) -> &BTreeMap<AtomId, BTreeSet<AtomId>> {
        &self.superposition
    }

    pub fn superposed_over(&self, atom: &str) -> Option<&BTreeSet<AtomId>> {
        self.superposition.get(atom)
    }

    pub fn contains(&self, e: &Event) -> bool {
        match e {
            Event::Atom(a) => self.atoms.contains(a),
            Event::Plural(p) => self.plurals.contains(p),
        }
    }

    /// Every event of the domain, atoms first.
    pub fn all_events(&self) -> BTreeSet<Event> {
        self.atoms
            .iter()
            .cloned()
            .map(Event::Atom)
            .chain(self.plurals.iter().cloned().map(Event::Plural))
            .collect()
    }

    /// E, the number of events.
    pub fn event_count(&self) -> usize {
        self.atoms.len() + self.plurals.len()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerbMeaning {
    pub name: String,
    pub extension: BTreeSet<Event>,
    #[serde(default)]
    pub agents: BTreeSet<String>,
    #[serde(default)]
    pub themes: BTreeSet<String>,
    #[serde(default)]
    pub subevents: BTreeSet<String>,
}

impl VerbMeaning {
    pub fn new(name: impl Into<String>, extension: BTreeSet<Event>) -> Self {
        VerbMeaning {
            name: name.into(),
            extension,
            ..VerbMeaning::default()
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndividualDomain {
    pub individuals: BTreeSet<String>,
}

/// An event domain, individuals and the verbs interpreted over them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Model {
    pub events: EventDomain,
    pub individuals: IndividualDomain,
    pub verbs: BTreeMap<String, VerbMeaning>,
}

impl Model {
    /// Checks that extensions lie in the domain, arguments in the
    /// individuals, and that every subevent names a defined verb.
    pub fn new(
        events: EventDomain,
        individuals: IndividualDomain,
        verbs: impl IntoIterator<Item = VerbMeaning>,
    ) -> Result<Self, SemanticsError> {
        let verbs: BTreeMap<String, VerbMeaning> =
            verbs.into_iter().map(|v| (v.name.clone(), v)).collect();
        for v in verbs.values() {
            if let Some(e) = v.extension.iter().find(|e| !events.contains(e)) {
                return Err(SemanticsError::InvalidDomain(format!(
                    "extension of {:?} contains {e}, which is not in the domain",
                    v.name
                )));
            }
            let unknown = v
                .agents
                .iter()
                .chain(&v.themes)
                .find(|x| !individuals.individuals.contains(*x));
            if let Some(x) = unknown {
                return Err(SemanticsError::InvalidDomain(format!(
                    "verb {:?} takes unknown individual {x:?}",
                    v.name
                )));
            }
            if let Some(s) = v.subevents.iter().find(|s| !verbs.contains_key(*s)) {
                return Err(SemanticsError::UndefinedSubevent {
                    verb: v.name.clone(),
                    subevent: s.clone(),
                });
            }
        }
        Ok(Model {
            events,
            individuals,
            verbs,
        })
    }

    pub fn verb(&self, name: &str) -> Result<&VerbMeaning, SemanticsError> {
        self.verbs
            .get(name)
            .ok_or_else(|| SemanticsError::UnknownVerb(name.to_owned()))
    }
}
