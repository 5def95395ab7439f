//! Scan-based versions of the form and meaning algorithms that count every
//! primitive step. Sets are unindexed vectors: each membership test walks
//! the vector and counts one check per element inspected.
//!
//! Loading an input into scan sets and reading a result back out is not
//! counted; neither is the validation that guards each entry point.

use std::collections::BTreeSet;

use crate::derive::{
    self, concatenate_counted, scope_apart, BaseForm, BaseSpec, FreshRole, ReduplicantTemplate,
    Strategy, VertexAllocator,
};
use crate::error::{DeriveError, SemanticsError};
use crate::graph::{Pair, StructureGraph, VertexId, WordForm};
use crate::profile::OpCounter;
use crate::semantics::{AtomId, Event, Model, VerbMeaning, MAX_EP_ATOMS, REPETITION_THRESHOLD};

/// An unindexed set.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanSet<T> {
    items: Vec<T>,
}

impl<T> Default for ScanSet<T> {
    fn default() -> Self {
        ScanSet { items: Vec::new() }
    }
}

impl<T: PartialEq + Clone> ScanSet<T> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Uncounted load of input data.
    pub fn load<'a>(items: impl IntoIterator<Item = &'a T>) -> Self
    where
        T: 'a,
    {
        ScanSet {
            items: items.into_iter().cloned().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.items.iter()
    }

    pub fn find(&self, c: &mut OpCounter, mut pred: impl FnMut(&T) -> bool) -> Option<&T> {
        for x in &self.items {
            c.check();
            if pred(x) {
                return Some(x);
            }
        }
        None
    }

    pub fn contains(&self, x: &T, c: &mut OpCounter) -> bool {
        self.find(c, |y| y == x).is_some()
    }

    /// Adds an element the caller knows is absent.
    pub fn push(&mut self, x: T, c: &mut OpCounter) {
        c.insert();
        self.items.push(x);
    }

    /// Adds an element unless it is already present.
    pub fn insert(&mut self, x: T, c: &mut OpCounter) -> bool {
        if self.contains(&x, c) {
            return false;
        }
        self.push(x, c);
        true
    }
}

impl<T: Ord + Clone> ScanSet<T> {
    /// Uncounted read-out.
    pub fn to_btree(&self) -> BTreeSet<T> {
        self.items.iter().cloned().collect()
    }

    /// Elements in order, uncounted. Used where the order of fresh ids must
    /// match the indexed implementation; ordering has no cost in the model.
    fn sorted(&self) -> Vec<T> {
        let mut v = self.items.clone();
        v.sort();
        v
    }
}

#[derive(Debug, Clone, Default)]
struct ScanGraph {
    vertices: ScanSet<VertexId>,
    labels: ScanSet<String>,
    dominance: ScanSet<Pair>,
    precedence: ScanSet<Pair>,
    naming: ScanSet<(VertexId, String)>,
}

impl ScanGraph {
    fn load(g: &StructureGraph) -> Self {
        ScanGraph {
            vertices: ScanSet::load(&g.vertices),
            labels: ScanSet::load(&g.labels),
            dominance: ScanSet::load(&g.dominance),
            precedence: ScanSet::load(&g.precedence),
            naming: ScanSet::load(&g.naming),
        }
    }

    fn to_graph(&self) -> StructureGraph {
        StructureGraph {
            vertices: self.vertices.to_btree(),
            labels: self.labels.to_btree(),
            dominance: self.dominance.to_btree(),
            precedence: self.precedence.to_btree(),
            naming: self.naming.to_btree(),
        }
    }

    /// Relations of `src` among the vertices already in `self`, plus the
    /// full label set and the universe.
    fn fill_from(&mut self, src: &ScanGraph, c: &mut OpCounter) {
        for &(x, y) in src.dominance.iter() {
            if self.vertices.contains(&x, c) && self.vertices.contains(&y, c) {
                self.dominance.push((x, y), c);
            }
        }
        for &(x, y) in src.precedence.iter() {
            if self.vertices.contains(&x, c) && self.vertices.contains(&y, c) {
                self.precedence.push((x, y), c);
            }
        }
        for (x, l) in src.naming.iter() {
            if self.vertices.contains(x, c) {
                self.naming.push((*x, l.clone()), c);
            }
        }
        for l in src.labels.iter() {
            self.labels.push(l.clone(), c);
        }
        // U = V ∪ L is not stored, but building it is part of each step.
        c.insertions += (self.vertices.len() + self.labels.len()) as u64;
    }
}

/// Morphological content of the base.
fn base_morph(w: &ScanGraph, spec: BaseSpec, c: &mut OpCounter) -> Result<ScanGraph, DeriveError> {
    if !w.vertices.contains(&spec.base_vertex, c) {
        return Err(DeriveError::UnknownVertex(spec.base_vertex));
    }
    let mut m = ScanGraph::default();
    m.vertices.push(spec.base_vertex, c);
    loop {
        let mut grew = false;
        for &(x, y) in w.dominance.iter() {
            if m.vertices.contains(&x, c) && !m.vertices.contains(&y, c) {
                m.vertices.push(y, c);
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    m.fill_from(w, c);
    Ok(m)
}

/// Correspondences whose morphological member is in the base.
fn base_correspondence(w: &ScanSet<Pair>, m: &ScanGraph, c: &mut OpCounter) -> ScanSet<Pair> {
    let mut out = ScanSet::new();
    for &(p, q) in w.iter() {
        if m.vertices.contains(&q, c) {
            out.push((p, q), c);
        }
    }
    out
}

/// Phonological content reached by the base correspondences.
fn base_phon(w: &ScanGraph, corr: &ScanSet<Pair>, c: &mut OpCounter) -> ScanGraph {
    let mut p = ScanGraph::default();
    for &v in w.vertices.iter() {
        if corr.find(c, |(x, _)| *x == v).is_some() {
            p.vertices.push(v, c);
        }
    }
    p.fill_from(w, c);
    p
}

struct ScanBase {
    base_vertex: VertexId,
    phon: ScanGraph,
    morph: ScanGraph,
    correspondence: ScanSet<Pair>,
}

impl ScanBase {
    fn to_form(&self) -> BaseForm {
        BaseForm {
            base_vertex: self.base_vertex,
            form: WordForm {
                phon: self.phon.to_graph(),
                morph: self.morph.to_graph(),
                correspondence: self.correspondence.to_btree(),
            },
        }
    }
}

fn extract_base(w: &WordForm, spec: BaseSpec, c: &mut OpCounter) -> Result<ScanBase, DeriveError> {
    let phon = ScanGraph::load(&w.phon);
    let morph = ScanGraph::load(&w.morph);
    let corr = ScanSet::load(&w.correspondence);
    let m = base_morph(&morph, spec, c)?;
    let cc = base_correspondence(&corr, &m, c);
    let p = base_phon(&phon, &cc, c);
    Ok(ScanBase {
        base_vertex: spec.base_vertex,
        phon: p,
        morph: m,
        correspondence: cc,
    })
}

/// Counted form of [`crate::derive::extract_base`].
pub fn extract_base_counted(
    w: &WordForm,
    spec: BaseSpec,
    c: &mut OpCounter,
) -> Result<BaseForm, DeriveError> {
    extract_base(w, spec, c).map(|b| b.to_form())
}

fn lookup(map: &ScanSet<(VertexId, VertexId)>, v: VertexId, c: &mut OpCounter) -> VertexId {
    map.find(c, |(from, _)| *from == v)
        .map(|(_, to)| *to)
        .expect("every base vertex has a copy")
}

fn copy_pairs(
    rel: &ScanSet<Pair>,
    map: &ScanSet<(VertexId, VertexId)>,
    c: &mut OpCounter,
) -> ScanSet<Pair> {
    let mut out = ScanSet::new();
    for &(x, y) in rel.iter() {
        let pair = (lookup(map, x, c), lookup(map, y, c));
        c.pair();
        out.push(pair, c);
    }
    out
}

fn copy_graph(g: &ScanGraph, map: &ScanSet<(VertexId, VertexId)>, c: &mut OpCounter) -> ScanGraph {
    let mut out = ScanGraph::default();
    for (_, to) in map.iter() {
        out.vertices.push(*to, c);
    }
    out.dominance = copy_pairs(&g.dominance, map, c);
    out.precedence = copy_pairs(&g.precedence, map, c);
    for (x, l) in g.naming.iter() {
        let pair = (lookup(map, *x, c), l.clone());
        c.pair();
        out.naming.push(pair, c);
    }
    for l in g.labels.iter() {
        c.copy();
        out.labels.push(l.clone(), c);
    }
    out
}

fn total_reduplicant(bs: &ScanBase, alloc: &mut VertexAllocator, c: &mut OpCounter) -> WordForm {
    let mut phon_map = ScanSet::new();
    for v in bs.phon.vertices.sorted() {
        let copy = alloc.fresh(FreshRole::PhonCopy(v));
        c.copy();
        phon_map.push((v, copy), c);
    }
    let mut morph_map = ScanSet::new();
    for v in bs.morph.vertices.sorted() {
        let copy = alloc.fresh(FreshRole::MorphCopy(v));
        c.copy();
        morph_map.push((v, copy), c);
    }
    let phon = copy_graph(&bs.phon, &phon_map, c);
    let morph = copy_graph(&bs.morph, &morph_map, c);
    let mut corr = ScanSet::new();
    for &(p, m) in bs.correspondence.iter() {
        let pair = (lookup(&phon_map, p, c), lookup(&morph_map, m, c));
        c.pair();
        corr.push(pair, c);
    }
    WordForm {
        phon: phon.to_graph(),
        morph: morph.to_graph(),
        correspondence: corr.to_btree(),
    }
}

fn partial_reduplicant(
    bs: &ScanBase,
    tpl: &ReduplicantTemplate,
    alloc: &mut VertexAllocator,
    c: &mut OpCounter,
) -> Result<WordForm, DeriveError> {
    tpl.check_morph_unit()?;
    let rule = &tpl.copy_rule;
    // Vertices carrying the source label.
    let mut on = ScanSet::new();
    for (x, l) in bs.phon.naming.iter() {
        c.check();
        if *l == rule.source_dominator_label {
            on.push(*x, c);
        }
    }
    if on.is_empty() {
        return Err(DeriveError::NonConformingBase(format!(
            "no vertex labeled {:?}",
            rule.source_dominator_label
        )));
    }
    // Segments they dominate.
    let mut temp = ScanSet::new();
    for &(x, y) in bs.phon.dominance.iter() {
        if on.contains(&x, c) {
            temp.insert(y, c);
        }
    }
    if temp.is_empty() {
        return Err(DeriveError::NonConformingBase(format!(
            "vertices labeled {:?} dominate nothing",
            rule.source_dominator_label
        )));
    }
    let target = tpl.target_vertex()?;

    let mut red = ScanGraph::load(&tpl.partial_phon);
    let mut copies = ScanSet::new();
    for seg in temp.sorted() {
        let copy = alloc.fresh(FreshRole::PhonCopy(seg));
        c.copy();
        if red.vertices.contains(&copy, c) {
            return Err(DeriveError::IdCollision {
                side: "phon",
                vertex: copy,
            });
        }
        red.vertices.push(copy, c);
        copies.push((seg, copy), c);
    }
    // Attach each copy under the template vertex with the target label.
    for &(_, copy) in copies.iter() {
        let t = red
            .naming
            .find(c, |(x, l)| {
                *x == target && *l == rule.target_dominator_label
            })
            .map(|(x, _)| *x)
            .unwrap_or(target);
        c.pair();
        red.dominance.push((t, copy), c);
    }
    // Names of copied segments.
    let mut temp2 = ScanSet::new();
    for (x, l) in bs.phon.naming.iter() {
        if copies.find(c, |(from, _)| from == x).is_some() {
            temp2.push((*x, l.clone()), c);
        }
    }
    for (x, l) in temp2.iter() {
        let pair = (lookup(&copies, *x, c), l.clone());
        c.pair();
        red.naming.push(pair, c);
    }
    let names: Vec<String> = red.naming.iter().map(|(_, l)| l.clone()).collect();
    for l in names {
        red.labels.insert(l, c);
    }
    Ok(WordForm {
        phon: red.to_graph(),
        morph: tpl.morph_unit.clone(),
        correspondence: tpl.partial_correspondence.clone(),
    })
}

/// Counted form of [`crate::derive::derive_pluractional_form`].
pub fn derive_form_counted(
    w: &WordForm,
    strategy: &Strategy,
    pins: &derive::Pins,
    c: &mut OpCounter,
) -> Result<WordForm, DeriveError> {
    derive::require_valid(w)?;
    let mut alloc = derive::allocator_for(w, strategy, pins);
    let (affix, stem_scope, affix_scope) = match strategy {
        Strategy::Affix { affix, .. } => {
            derive::require_valid(affix)?;
            (
                affix.clone(),
                crate::graph::Scope::W,
                crate::graph::Scope::A,
            )
        }
        Strategy::TotalRedup { base, .. } => {
            let bs = extract_base(w, *base, c)?;
            derive::require_valid(&bs.to_form().form)?;
            let red = total_reduplicant(&bs, &mut alloc, c);
            (red, crate::graph::Scope::Bs, crate::graph::Scope::Red)
        }
        Strategy::PartialRedup { base, template, .. } => {
            let bs = extract_base(w, *base, c)?;
            derive::require_valid(&bs.to_form().form)?;
            let red = partial_reduplicant(&bs, template, &mut alloc, c)?;
            derive::require_valid(&red)?;
            (red, crate::graph::Scope::Bs, crate::graph::Scope::Red)
        }
    };
    let (stem, affix) = scope_apart(w, &affix, stem_scope, affix_scope)?;
    let pos = strategy
        .position()
        .follow_scope(&w.phon, &stem.phon, stem_scope);
    concatenate_counted(&stem, &affix, pos, &mut alloc, c)
}

fn atoms_of(events: &ScanSet<Event>, c: &mut OpCounter) -> ScanSet<AtomId> {
    let mut out = ScanSet::new();
    for e in events.iter() {
        c.check();
        if let Event::Atom(a) = e {
            out.push(a.clone(), c);
        }
    }
    out
}

/// Counted form of [`crate::semantics::derive_ep`]: build the powerset by
/// doubling, then keep the members that are not atoms.
pub fn derive_ep_counted(
    v: &VerbMeaning,
    c: &mut OpCounter,
) -> Result<BTreeSet<BTreeSet<AtomId>>, SemanticsError> {
    let ext = ScanSet::load(&v.extension);
    let atoms = atoms_of(&ext, c);
    if atoms.len() > MAX_EP_ATOMS {
        return Err(SemanticsError::TooManyAtoms {
            atoms: atoms.len(),
            max: MAX_EP_ATOMS,
        });
    }
    let mut temp: Vec<ScanSet<AtomId>> = Vec::with_capacity(1 << atoms.len());
    temp.push(ScanSet::new());
    c.insert();
    for a in atoms.iter() {
        for i in 0..temp.len() {
            let mut s = temp[i].clone();
            c.copy();
            s.push(a.clone(), c);
            temp.push(s);
            c.insert();
        }
    }
    let mut ep = Vec::new();
    for s in &temp {
        c.check();
        match s.len() {
            // The empty set is no event.
            0 => {}
            // A singleton is its atom.
            1 => {
                let atom = s.iter().next().expect("singleton");
                let _ = atoms.contains(atom, c);
            }
            _ => {
                ep.push(s.to_btree());
                c.insert();
            }
        }
    }
    Ok(ep.into_iter().collect())
}

struct ScanSuperposition {
    entries: ScanSet<(AtomId, ScanSet<AtomId>)>,
}

fn sps_counted<'a>(
    u: &ScanSet<Event>,
    candidates: impl IntoIterator<Item = &'a Event>,
    domain: &ScanSet<Event>,
    sup: &ScanSuperposition,
    out: &mut ScanSet<AtomId>,
    c: &mut OpCounter,
) {
    for y in candidates {
        c.check();
        let Event::Atom(y) = y else { continue };
        let Some((_, over)) = sup.entries.find(c, |(a, _)| a == y) else {
            continue;
        };
        // Inspect every (y, z) pair of the domain for superposition.
        let mut found = 0;
        let mut all_u = true;
        for z in domain.iter() {
            c.check();
            let Event::Atom(z) = z else { continue };
            if over.contains(z, c) {
                found += 1;
                if !u.contains(&Event::Atom(z.clone()), c) {
                    all_u = false;
                }
            }
        }
        if found >= REPETITION_THRESHOLD && found == over.len() && all_u {
            out.insert(y.clone(), c);
        }
    }
}

/// Counted form of [`crate::semantics::derive_ip`].
pub fn derive_ip_counted(
    model: &Model,
    verb: &str,
    c: &mut OpCounter,
) -> Result<BTreeSet<AtomId>, SemanticsError> {
    let v = model.verb(verb)?;
    let domain = ScanSet::load(&model.events.all_events());
    let sup = ScanSuperposition {
        entries: ScanSet {
            items: model
                .events
                .superposition()
                .iter()
                .map(|(a, over)| (a.clone(), ScanSet::load(over)))
                .collect(),
        },
    };
    let ext = ScanSet::load(&v.extension);
    let mut ip = ScanSet::new();
    let own: Vec<Event> = atoms_of(&ext, c).iter().cloned().map(Event::Atom).collect();
    sps_counted(&ext, &own, &domain, &sup, &mut ip, c);
    for u in &v.subevents {
        let u = model
            .verbs
            .get(u)
            .ok_or_else(|| SemanticsError::UndefinedSubevent {
                verb: verb.to_owned(),
                subevent: u.clone(),
            })?;
        let u_ext = ScanSet::load(&u.extension);
        sps_counted(&u_ext, domain.iter(), &domain, &sup, &mut ip, c);
    }
    Ok(ip.to_btree())
}
