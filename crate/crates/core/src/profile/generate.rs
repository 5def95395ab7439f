//! Seeded synthetic inputs for the size sweeps.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::derive::{AffixPosition, BaseSpec, CopyRule, ReduplicantTemplate, Strategy};
use crate::error::ProfileError;
use crate::graph::{AffixForm, StructureGraph, VertexId, WordForm};
use crate::profile::Process;
use crate::semantics::{AtomId, Event, EventDomain, IndividualDomain, Model, VerbMeaning};

/// Smallest V with a CV syllable under a word root.
pub const MIN_FORM_VERTICES: usize = 7;
pub const MAX_FORM_VERTICES: usize = 1 << 14;
pub const MAX_VERB_ATOMS: usize = 16;
pub const MAX_DISTRACTORS: usize = 1 << 16;

const CONSONANTS: &[&str] = &["p", "t", "k", "s", "m", "n", "l", "x", "t͡s", "ʔ", "w", "j"];
const VOWELS: &[&str] = &["a", "e", "i", "o", "u", "ɪ"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormInput {
    pub word: WordForm,
    pub base: BaseSpec,
    pub template: ReduplicantTemplate,
    pub affix: AffixForm,
}

impl FormInput {
    /// Suffixing strategy of the kind the process measures.
    pub fn strategy(&self, process: Process) -> Option<Strategy> {
        let position = AffixPosition::Suffix;
        match process {
            Process::Affix => Some(Strategy::Affix {
                affix: self.affix.clone(),
                position,
            }),
            Process::TotalRedup => Some(Strategy::TotalRedup {
                base: self.base,
                position,
            }),
            Process::PartialRedup => Some(Strategy::PartialRedup {
                base: self.base,
                template: self.template.clone(),
                position,
            }),
            Process::Ep | Process::Ip => None,
        }
    }
}

#[derive(Default)]
struct Builder {
    g: StructureGraph,
    next: u32,
}

impl Builder {
    fn starting_at(next: u32) -> Self {
        Builder {
            g: StructureGraph::new(),
            next,
        }
    }

    fn add(&mut self, label: &str, parent: Option<VertexId>) -> VertexId {
        let v = VertexId::new(self.next);
        self.next += 1;
        self.g.vertices.insert(v);
        self.g.labels.insert(label.to_owned());
        self.g.naming.insert((v, label.to_owned()));
        if let Some(p) = parent {
            self.g.dominance.insert((p, v));
        }
        v
    }

    fn chain(&mut self, xs: &[VertexId]) {
        for w in xs.windows(2) {
            self.g.precedence.insert((w[0], w[1]));
        }
    }
}

struct Syllable {
    onset: usize,
    coda: bool,
}

/// Syllable shapes using exactly `v - 1` vertices under the root: CV
/// syllables (6 vertices), a coda where two vertices remain (2 more), and
/// left-over vertices as extra onset consonants.
fn plan(v: usize) -> Vec<Syllable> {
    let mut left = v - 1;
    let mut sylls = Vec::new();
    while left >= 6 {
        left -= 6;
        let coda = left >= 2;
        if coda {
            left -= 2;
        }
        sylls.push(Syllable { onset: 1, coda });
    }
    let n = sylls.len();
    for i in 0..left {
        sylls[i % n].onset += 1;
    }
    sylls
}

/// A word with exactly `v` phonological vertices, all in one stem, and a
/// matching Ca'-style template and CV suffix with their own ids.
pub fn generate_form_input(v: usize, seed: u64) -> Result<FormInput, ProfileError> {
    if v < MIN_FORM_VERTICES {
        return Err(ProfileError::SizeTooSmall {
            min: MIN_FORM_VERTICES,
            got: v,
        });
    }
    if v > MAX_FORM_VERTICES {
        return Err(ProfileError::BoundExceeded {
            param: "V",
            max: MAX_FORM_VERTICES,
            got: v,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pick = |xs: &[&'static str]| *xs.choose(&mut rng).expect("non-empty inventory");

    let mut b = Builder::starting_at(0);
    let root = b.add("Pw", None);
    let mut syl_vs = Vec::new();
    for s in plan(v) {
        let syl = b.add("σ", Some(root));
        let o = b.add("O", Some(syl));
        let r = b.add("R", Some(syl));
        b.chain(&[o, r]);
        let onset: Vec<_> = (0..s.onset)
            .map(|_| b.add(pick(CONSONANTS), Some(o)))
            .collect();
        b.chain(&onset);
        let n = b.add("N", Some(r));
        b.add(pick(VOWELS), Some(n));
        if s.coda {
            let c = b.add("C", Some(r));
            b.chain(&[n, c]);
            b.add(pick(CONSONANTS), Some(c));
        }
        syl_vs.push(syl);
    }
    b.chain(&syl_vs);
    let phon = b.g;
    debug_assert_eq!(phon.vertices.len(), v);

    let mut m = Builder::starting_at(b.next);
    let mw = m.add("Mw", None);
    let mst = m.add("Mst", Some(mw));
    let morph = m.g;
    let mut correspondence: BTreeSet<_> = phon.vertices.iter().map(|&p| (p, mst)).collect();
    correspondence.insert((root, mw));
    let word = WordForm {
        phon,
        morph,
        correspondence,
    };

    // Template: a CVC syllable with fixed [a] and [ʔ] and an empty onset.
    let mut t = Builder::starting_at(m.next);
    let tw = t.add("Pw", None);
    let ts = t.add("σ", Some(tw));
    let to = t.add("O", Some(ts));
    let tr = t.add("R", Some(ts));
    t.chain(&[to, tr]);
    let tn = t.add("N", Some(tr));
    let tc = t.add("C", Some(tr));
    t.chain(&[tn, tc]);
    let ta = t.add("a", Some(tn));
    let tq = t.add("ʔ", Some(tc));
    let mut tm = Builder::starting_at(t.next);
    let unit = tm.add("R", None);
    let template = ReduplicantTemplate {
        partial_phon: t.g,
        morph_unit: tm.g,
        partial_correspondence: [(tw, unit), (ta, unit), (tq, unit)].into(),
        copy_rule: CopyRule::onset(),
    };

    // Affix: a CV syllable in one affix morpheme.
    let mut a = Builder::starting_at(tm.next);
    let s = a.add("σ", None);
    let o = a.add("O", Some(s));
    let r = a.add("R", Some(s));
    a.chain(&[o, r]);
    a.add("v", Some(o));
    let n = a.add("N", Some(r));
    a.add("a", Some(n));
    let mut am = Builder::starting_at(a.next);
    let maf = am.add("Maf", None);
    let affix = AffixForm {
        correspondence: a.g.vertices.iter().map(|&p| (p, maf)).collect(),
        phon: a.g,
        morph: am.g,
    };

    Ok(FormInput {
        word,
        base: BaseSpec::new(mst),
        template,
        affix,
    })
}

/// Name of the verb whose meaning the sweeps derive.
pub const SWEEP_VERB: &str = "v";
/// Subevent verb living among the distractors.
pub const SWEEP_SUBEVENT: &str = "v-sub";

/// A domain closed under plural formation over `a` verb atoms, plus
/// `distractors` non-verb atoms carrying superposition annotations.
/// E = 2^a − 1 + distractors.
pub fn generate_event_domain(
    a: usize,
    distractors: usize,
    seed: u64,
) -> Result<Model, ProfileError> {
    if a < 1 {
        return Err(ProfileError::SizeTooSmall { min: 1, got: a });
    }
    if a > MAX_VERB_ATOMS {
        return Err(ProfileError::BoundExceeded {
            param: "A",
            max: MAX_VERB_ATOMS,
            got: a,
        });
    }
    if distractors > MAX_DISTRACTORS {
        return Err(ProfileError::BoundExceeded {
            param: "distractors",
            max: MAX_DISTRACTORS,
            got: distractors,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let verb_atoms: Vec<AtomId> = (1..=a).map(|i| format!("e{i}")).collect();
    let others: Vec<AtomId> = (1..=distractors).map(|i| format!("d{i}")).collect();

    let mut plurals = BTreeSet::new();
    for mask in 1u32..(1 << a) {
        if mask.count_ones() >= 2 {
            let p: BTreeSet<AtomId> = verb_atoms
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, x)| x.clone())
                .collect();
            plurals.insert(p);
        }
    }

    // The first two distractors are v-sub events; the rest are superimposed
    // either over both of them or over two verb atoms.
    let sub_atoms: Vec<AtomId> = others.iter().take(2).cloned().collect();
    let mut superposition = BTreeMap::new();
    for d in others.iter().skip(sub_atoms.len()) {
        let over: BTreeSet<AtomId> = if sub_atoms.len() == 2 && rng.gen_bool(0.5) {
            sub_atoms.iter().cloned().collect()
        } else if a >= 2 {
            verb_atoms.choose_multiple(&mut rng, 2).cloned().collect()
        } else {
            continue;
        };
        superposition.insert(d.clone(), over);
    }
    // One verb atom superimposed over others of its kind.
    if a >= 3 {
        let over = verb_atoms[1..]
            .choose_multiple(&mut rng, 2)
            .cloned()
            .collect();
        superposition.insert(verb_atoms[0].clone(), over);
    }

    let atoms: BTreeSet<AtomId> = verb_atoms.iter().chain(&others).cloned().collect();
    let mut extension: BTreeSet<Event> = verb_atoms.iter().cloned().map(Event::Atom).collect();
    extension.extend(plurals.iter().cloned().map(Event::Plural));
    let mut verb = VerbMeaning::new(SWEEP_VERB, extension);
    let mut verbs = Vec::new();
    if sub_atoms.len() == 2 {
        verb.subevents.insert(SWEEP_SUBEVENT.into());
        verbs.push(VerbMeaning::new(
            SWEEP_SUBEVENT,
            sub_atoms.iter().cloned().map(Event::Atom).collect(),
        ));
    }
    verbs.push(verb);
    let events = EventDomain::new(atoms, plurals, superposition)?;
    Ok(Model::new(events, IndividualDomain::default(), verbs)?)
}
