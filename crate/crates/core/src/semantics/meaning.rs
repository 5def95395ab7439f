//! Meanings of event-external (EP) and event-internal (IP) pluractionals.

use std::collections::BTreeSet;

use crate::error::SemanticsError;
use crate::semantics::domain::{AtomId, Event, EventDomain, Model, VerbMeaning};

/// Least number of superimposed-over events that counts as a repetition.
pub const REPETITION_THRESHOLD: usize = 2;

/// Largest atomic extension `derive_ep` will enumerate the powerset of.
pub const MAX_EP_ATOMS: usize = 24;

/// The atoms among `events`.
pub fn atomic<'a>(events: impl IntoIterator<Item = &'a Event>) -> BTreeSet<AtomId> {
    events
        .into_iter()
        .filter_map(|e| match e {
            Event::Atom(a) => Some(a.clone()),
            Event::Plural(_) => None,
        })
        .collect()
}

/// Atoms of `candidates` superimposed over a repetition of `v` events: at
/// least [`REPETITION_THRESHOLD`] atoms, all in the extension of `v`.
pub fn sps<'a>(
    v: &VerbMeaning,
    candidates: impl IntoIterator<Item = &'a Event>,
    dom: &EventDomain,
) -> BTreeSet<AtomId> {
    atomic(candidates)
        .into_iter()
        .filter(|a| match dom.superposed_over(a) {
            Some(over) => {
                over.len() >= REPETITION_THRESHOLD
                    && over
                        .iter()
                        .all(|x| v.extension.contains(&Event::Atom(x.clone())))
            }
            None => false,
        })
        .collect()
}

/// Every subset of the atomic extension of `v` with at least two members.
/// The empty set denotes no event and a singleton is its atom, so neither
/// survives the removal of atomic members.
pub fn derive_ep(v: &VerbMeaning) -> Result<BTreeSet<BTreeSet<AtomId>>, SemanticsError> {
    let atoms: Vec<AtomId> = atomic(&v.extension).into_iter().collect();
    if atoms.len() > MAX_EP_ATOMS {
        return Err(SemanticsError::TooManyAtoms {
            atoms: atoms.len(),
            max: MAX_EP_ATOMS,
        });
    }
    let mut out = BTreeSet::new();
    for mask in 0u32..(1u32 << atoms.len()) {
        if mask.count_ones() < 2 {
            continue;
        }
        let subset = atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, a)| a.clone())
            .collect();
        out.insert(subset);
    }
    Ok(out)
}

/// SPS of `verb` over its own atoms, plus SPS of each subevent verb over the
/// whole domain.
pub fn derive_ip(model: &Model, verb: &str) -> Result<BTreeSet<AtomId>, SemanticsError> {
    let v = model.verb(verb)?;
    let mut out = sps(v, &v.extension, &model.events);
    if v.subevents.is_empty() {
        return Ok(out);
    }
    let all = model.events.all_events();
    for u in &v.subevents {
        let u = model
            .verbs
            .get(u)
            .ok_or_else(|| SemanticsError::UndefinedSubevent {
                verb: verb.to_owned(),
                subevent: u.clone(),
            })?;
        out.extend(sps(u, &all, &model.events));
    }
    Ok(out)
}

/// One argument tuple of a verb: the event, then the agent and theme when
/// the verb has them.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ArgumentTuple {
    pub event: Event,
    pub agent: Option<String>,
    pub theme: Option<String>,
}

impl ArgumentTuple {
    pub fn arity(&self) -> usize {
        1 + usize::from(self.agent.is_some()) + usize::from(self.theme.is_some())
    }
}

/// Extension × agents × themes, leaving out a role whose set is empty.
pub fn verb_relation(v: &VerbMeaning) -> BTreeSet<ArgumentTuple> {
    let role = |xs: &BTreeSet<String>| -> Vec<Option<String>> {
        if xs.is_empty() {
            vec![None]
        } else {
            xs.iter().cloned().map(Some).collect()
        }
    };
    let (agents, themes) = (role(&v.agents), role(&v.themes));
    let mut out = BTreeSet::new();
    for e in &v.extension {
        for a in &agents {
            for t in &themes {
                out.insert(ArgumentTuple {
                    event: e.clone(),
                    agent: a.clone(),
                    theme: t.clone(),
                });
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowersetBoundOutcome {
    /// E ≥ 2^A.
    Holds,
    /// Only E ≥ 2^A − 1: the domain has room for every non-empty subset of
    /// the verb's atoms but nothing else.
    HoldsOnlyExcludingEmpty,
    Fails,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowersetBoundCheck {
    pub atoms: usize,
    pub events: usize,
    pub outcome: PowersetBoundOutcome,
}

/// Compares the size of the domain with the powerset of the verb's atoms.
pub fn check_powerset_bound(dom: &EventDomain, v: &VerbMeaning) -> PowersetBoundCheck {
    let atoms = atomic(&v.extension).len();
    let events = dom.event_count();
    let power = 1u128.checked_shl(atoms as u32).unwrap_or(u128::MAX);
    let e = events as u128;
    let outcome = if e >= power {
        PowersetBoundOutcome::Holds
    } else if e + 1 >= power {
        PowersetBoundOutcome::HoldsOnlyExcludingEmpty
    } else {
        PowersetBoundOutcome::Fails
    };
    PowersetBoundCheck {
        atoms,
        events,
        outcome,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::domain::IndividualDomain;
    use std::collections::BTreeMap;

    fn s(xs: &[&str]) -> BTreeSet<AtomId> {
        xs.iter().map(|x| x.to_string()).collect()
    }

    fn atoms(xs: &[&str]) -> BTreeSet<Event> {
        xs.iter().map(|x| Event::atom(*x)).collect()
    }

    fn domain(ats: &[&str], sup: &[(&str, &[&str])]) -> EventDomain {
        let sup: BTreeMap<_, _> = sup.iter().map(|(a, o)| (a.to_string(), s(o))).collect();
        EventDomain::new(s(ats), BTreeSet::new(), sup).unwrap()
    }

    #[test]
    fn atomic_filters_plurals() {
        let evs = [Event::atom("e1"), Event::plural(["e1", "e2"])];
        assert_eq!(atomic(&evs), s(&["e1"]));
        assert!(atomic(&[]).is_empty());
    }

    #[test]
    fn atomic_of_mixed_extension() {
        let mut ext = atoms(&["e1", "e2", "e3"]);
        ext.insert(Event::plural(["e1", "e2"]));
        ext.insert(Event::plural(["e2", "e3"]));
        assert_eq!(atomic(&ext), s(&["e1", "e2", "e3"]));
    }

    #[test]
    fn sps_needs_repetition_inside_extension() {
        let d = domain(
            &["a1", "a2", "k1", "k2"],
            &[("a1", &["k1", "k2"]), ("a2", &["k1"])],
        );
        let kiss = VerbMeaning::new("kiss", atoms(&["k1", "k2"]));
        assert_eq!(sps(&kiss, &atoms(&["a1"]), &d), s(&["a1"]));
        assert!(sps(&kiss, &atoms(&["a2"]), &d).is_empty());
        assert!(sps(&kiss, &atoms(&["k1"]), &d).is_empty());
        let one = VerbMeaning::new("kiss", atoms(&["k1"]));
        assert!(sps(&one, &atoms(&["a1"]), &d).is_empty());
    }

    #[test]
    fn ep_small_powersets() {
        let v = VerbMeaning::new("v", atoms(&["e1", "e2"]));
        assert_eq!(derive_ep(&v).unwrap(), [s(&["e1", "e2"])].into());
        let v = VerbMeaning::new("v", atoms(&["e1", "e2", "e3"]));
        let ep = derive_ep(&v).unwrap();
        let expected: BTreeSet<_> = [
            s(&["e1", "e2"]),
            s(&["e1", "e3"]),
            s(&["e2", "e3"]),
            s(&["e1", "e2", "e3"]),
        ]
        .into();
        assert_eq!(ep, expected);
        assert!(derive_ep(&VerbMeaning::new("v", BTreeSet::new()))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn ep_ignores_plurals_in_extension() {
        let mut ext = atoms(&["e1", "e2"]);
        ext.insert(Event::plural(["e1", "e2"]));
        assert_eq!(derive_ep(&VerbMeaning::new("v", ext)).unwrap().len(), 1);
    }

    #[test]
    fn ip_through_own_extension() {
        let d = domain(&["b", "x", "y", "z"], &[("b", &["x", "y", "z"])]);
        let v = VerbMeaning::new("v", atoms(&["b", "x", "y", "z"]));
        let m = Model::new(d, IndividualDomain::default(), [v]).unwrap();
        assert_eq!(derive_ip(&m, "v").unwrap(), s(&["b"]));
    }

    #[test]
    fn ip_through_subevent_outside_base() {
        let d = domain(&["s1", "m1", "m2", "a"], &[("a", &["m1", "m2"])]);
        let mut sit = VerbMeaning::new("sit", atoms(&["s1"]));
        sit.subevents.insert("sit-motion".into());
        let motion = VerbMeaning::new("sit-motion", atoms(&["m1", "m2"]));
        let m = Model::new(d, IndividualDomain::default(), [sit, motion]).unwrap();
        let ip = derive_ip(&m, "sit").unwrap();
        assert_eq!(ip, s(&["a"]));
        assert!(!m.verbs["sit"].extension.contains(&Event::atom("a")));
    }

    #[test]
    fn ip_empty_without_superposition() {
        let d = domain(&["e1", "e2"], &[]);
        let m = Model::new(
            d,
            IndividualDomain::default(),
            [VerbMeaning::new("v", atoms(&["e1"]))],
        )
        .unwrap();
        assert!(derive_ip(&m, "v").unwrap().is_empty());
        assert_eq!(
            derive_ip(&m, "w"),
            Err(SemanticsError::UnknownVerb("w".into()))
        );
    }

    #[test]
    fn relation_arity() {
        let mut v = VerbMeaning::new("kiss", atoms(&["e1"]));
        v.agents = s(&["a"]);
        v.themes = s(&["b"]);
        let r = verb_relation(&v);
        assert_eq!(r.len(), 1);
        assert_eq!(r.iter().next().unwrap().arity(), 3);

        let mut v = VerbMeaning::new("kiss", atoms(&["e1", "e2"]));
        v.agents = s(&["a", "c"]);
        v.themes = s(&["b"]);
        assert_eq!(verb_relation(&v).len(), 4);

        v.agents.clear();
        let r = verb_relation(&v);
        assert_eq!(r.len(), 2);
        assert!(r
            .iter()
            .all(|t| t.agent.is_none() && t.theme.as_deref() == Some("b")));
    }

    #[test]
    fn powerset_bound_outcomes() {
        let v = VerbMeaning::new("v", atoms(&["e1", "e2", "e3"]));
        let mut plurals = BTreeSet::new();
        for p in derive_ep(&v).unwrap() {
            plurals.insert(p);
        }
        let closed =
            EventDomain::new(s(&["e1", "e2", "e3"]), plurals.clone(), BTreeMap::new()).unwrap();
        let c = check_powerset_bound(&closed, &v);
        assert_eq!(
            (c.events, c.outcome),
            (7, PowersetBoundOutcome::HoldsOnlyExcludingEmpty)
        );
        let padded =
            EventDomain::new(s(&["e1", "e2", "e3", "d"]), plurals, BTreeMap::new()).unwrap();
        assert_eq!(
            check_powerset_bound(&padded, &v).outcome,
            PowersetBoundOutcome::Holds
        );
        let bare =
            EventDomain::new(s(&["e1", "e2", "e3"]), BTreeSet::new(), BTreeMap::new()).unwrap();
        assert_eq!(
            check_powerset_bound(&bare, &v).outcome,
            PowersetBoundOutcome::Fails
        );
    }
}
