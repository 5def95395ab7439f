//! Direct evaluation of the EP and IP definitions, used by `--oracle`.

use std::collections::BTreeSet;

use pluract::error::SemanticsError;
use pluract::semantics::{Event, Model, VerbMeaning};

/// Every set of two or more atoms of `v`, built by recursive inclusion and
/// exclusion.
pub fn ep(v: &VerbMeaning) -> BTreeSet<Event> {
    fn subsets(atoms: &[String], acc: &mut Vec<String>, out: &mut BTreeSet<Event>) {
        match atoms.split_first() {
            None => {
                if acc.len() >= 2 {
                    out.insert(Event::Plural(acc.iter().cloned().collect()));
                }
            }
            Some((x, rest)) => {
                subsets(rest, acc, out);
                acc.push(x.clone());
                subsets(rest, acc, out);
                acc.pop();
            }
        }
    }
    let atoms: Vec<String> = v
        .extension
        .iter()
        .filter_map(|e| match e {
            Event::Atom(a) => Some(a.clone()),
            Event::Plural(_) => None,
        })
        .collect();
    let mut out = BTreeSet::new();
    subsets(&atoms, &mut Vec::new(), &mut out);
    out
}

/// Whether atom `x` is superimposed over two or more events of `v`.
fn superimposed(model: &Model, x: &str, v: &VerbMeaning) -> bool {
    model.events.superposed_over(x).is_some_and(|over| {
        over.iter()
            .filter(|y| v.extension.contains(&Event::Atom((*y).clone())))
            .count()
            == over.len()
            && over.len() >= 2
    })
}

/// Atoms of `verb` superimposed over its own events, and atoms anywhere in
/// the domain superimposed over events of one of its subevent verbs.
pub fn ip(model: &Model, verb: &str) -> Result<BTreeSet<Event>, SemanticsError> {
    let v = model.verb(verb)?;
    let mut out = BTreeSet::new();
    for x in model.events.atoms() {
        let own = v.extension.contains(&Event::Atom(x.clone())) && superimposed(model, x, v);
        let mut sub = false;
        for u in &v.subevents {
            sub |= superimposed(model, x, model.verb(u)?);
        }
        if own || sub {
            out.insert(Event::Atom(x.clone()));
        }
    }
    Ok(out)
}
