//! Concatenation of a stem with an affix or reduplicant.
//!
//! Both phonological roots go under a new `Pw` vertex and both morphological
//! roots under a new `Mw` vertex; one precedence pair per tree orders stem
//! and affix, and the two new roots correspond. Nothing in either input is
//! removed or altered.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::derive::alloc::{FreshRole, VertexAllocator};
use crate::error::DeriveError;
use crate::graph::{Pair, Scope, StructureGraph, VertexId, WordForm};
use crate::profile::OpCounter;
use crate::validate::validate_word_form;

pub const PHON_WORD_LABEL: &str = "Pw";
pub const MORPH_WORD_LABEL: &str = "Mw";

/// Where the affix goes relative to the stem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AffixPosition {
    Prefix,
    Suffix,
    /// Inside the stem: the affix's phonological root becomes a sibling
    /// immediately after `anchor`, a non-root stem vertex.
    Infix {
        anchor: VertexId,
    },
}

fn root_of(g: &StructureGraph, w: &WordForm) -> Result<VertexId, DeriveError> {
    g.root()
        .ok_or_else(|| DeriveError::InvalidInput(validate_word_form(w)))
}

fn ensure_disjoint(
    side: &'static str,
    a: &StructureGraph,
    b: &StructureGraph,
) -> Result<(), DeriveError> {
    match a.vertices.intersection(&b.vertices).next() {
        Some(&vertex) => Err(DeriveError::IdCollision { side, vertex }),
        None => Ok(()),
    }
}

fn fresh_outside(
    alloc: &mut VertexAllocator,
    role: FreshRole,
    side: &'static str,
    graphs: [&StructureGraph; 2],
) -> Result<VertexId, DeriveError> {
    let v = alloc.fresh(role);
    if graphs.iter().any(|g| g.contains(v)) {
        return Err(DeriveError::IdCollision { side, vertex: v });
    }
    Ok(v)
}

fn union(a: &StructureGraph, b: &StructureGraph) -> StructureGraph {
    let mut g = a.clone();
    g.vertices.extend(&b.vertices);
    g.labels.extend(b.labels.iter().cloned());
    g.dominance.extend(&b.dominance);
    g.precedence.extend(&b.precedence);
    g.naming.extend(b.naming.iter().cloned());
    g
}

fn add_root(g: &mut StructureGraph, root: VertexId, label: &str, c: &mut OpCounter) {
    g.vertices.insert(root);
    c.insert();
    g.labels.insert(label.to_owned());
    c.insert();
    g.naming.insert((root, label.to_owned()));
    c.pair();
    c.insert();
}

fn add_pair(set: &mut BTreeSet<Pair>, p: Pair, c: &mut OpCounter) {
    set.insert(p);
    c.pair();
    c.insert();
}

impl AffixPosition {
    /// The same position after `scope_apart` moved the stem's phonology
    /// into `scope`: an infix anchor follows its vertex.
    pub fn follow_scope(
        self,
        stem: &StructureGraph,
        scoped: &StructureGraph,
        scope: Scope,
    ) -> Self {
        match self {
            AffixPosition::Infix { anchor }
                if stem.contains(anchor) && !scoped.contains(anchor) =>
            {
                AffixPosition::Infix {
                    anchor: anchor.with_scope(scope),
                }
            }
            pos => pos,
        }
    }
}

/// Concatenates `stem` and `affix`. Vertex ids of the two inputs must be
/// disjoint on each side; see [`scope_apart`].
pub fn concatenate(
    stem: &WordForm,
    affix: &WordForm,
    pos: AffixPosition,
    alloc: &mut VertexAllocator,
) -> Result<WordForm, DeriveError> {
    concatenate_counted(stem, affix, pos, alloc, &mut OpCounter::default())
}

/// [`concatenate`], counting the elements it adds. Taking the union of the
/// two inputs is free, as the cost model assumes for concatenation.
pub fn concatenate_counted(
    stem: &WordForm,
    affix: &WordForm,
    pos: AffixPosition,
    alloc: &mut VertexAllocator,
    c: &mut OpCounter,
) -> Result<WordForm, DeriveError> {
    ensure_disjoint("phon", &stem.phon, &affix.phon)?;
    ensure_disjoint("morph", &stem.morph, &affix.morph)?;
    let stem_p = root_of(&stem.phon, stem)?;
    let stem_m = root_of(&stem.morph, stem)?;
    let affix_p = root_of(&affix.phon, affix)?;
    let affix_m = root_of(&affix.morph, affix)?;

    let new_p = fresh_outside(
        alloc,
        FreshRole::PhonRoot,
        "phon",
        [&stem.phon, &affix.phon],
    )?;
    let new_m = fresh_outside(
        alloc,
        FreshRole::MorphRoot,
        "morph",
        [&stem.morph, &affix.morph],
    )?;

    let mut phon = union(&stem.phon, &affix.phon);
    add_root(&mut phon, new_p, PHON_WORD_LABEL, c);
    add_pair(&mut phon.dominance, (new_p, stem_p), c);
    match pos {
        AffixPosition::Suffix => {
            add_pair(&mut phon.dominance, (new_p, affix_p), c);
            add_pair(&mut phon.precedence, (stem_p, affix_p), c);
        }
        AffixPosition::Prefix => {
            add_pair(&mut phon.dominance, (new_p, affix_p), c);
            add_pair(&mut phon.precedence, (affix_p, stem_p), c);
        }
        AffixPosition::Infix { anchor } => {
            let parent = match stem.phon.parents(anchor).as_slice() {
                [p] => *p,
                _ => return Err(DeriveError::BadAnchor(anchor)),
            };
            add_pair(&mut phon.dominance, (parent, affix_p), c);
            add_pair(&mut phon.precedence, (anchor, affix_p), c);
            for &(a, next) in &stem.phon.precedence {
                c.check();
                if a == anchor {
                    add_pair(&mut phon.precedence, (affix_p, next), c);
                }
            }
        }
    }

    let mut morph = union(&stem.morph, &affix.morph);
    add_root(&mut morph, new_m, MORPH_WORD_LABEL, c);
    add_pair(&mut morph.dominance, (new_m, stem_m), c);
    add_pair(&mut morph.dominance, (new_m, affix_m), c);
    match pos {
        AffixPosition::Prefix => add_pair(&mut morph.precedence, (affix_m, stem_m), c),
        AffixPosition::Suffix | AffixPosition::Infix { .. } => {
            add_pair(&mut morph.precedence, (stem_m, affix_m), c)
        }
    };

    let mut correspondence = stem.correspondence.clone();
    correspondence.extend(&affix.correspondence);
    add_pair(&mut correspondence, (new_p, new_m), c);

    Ok(WordForm {
        phon,
        morph,
        correspondence,
    })
}

fn scope_all(
    g: &StructureGraph,
    scope: Scope,
) -> Result<BTreeMap<VertexId, VertexId>, DeriveError> {
    let map: BTreeMap<VertexId, VertexId> = g
        .vertices
        .iter()
        .map(|&v| (v, v.with_scope(scope)))
        .collect();
    let mut seen = BTreeSet::new();
    for (&from, &to) in &map {
        if !seen.insert(to) {
            return Err(DeriveError::IdCollision {
                side: "scoped",
                vertex: from,
            });
        }
    }
    Ok(map)
}

/// When stem and affix reuse vertex ids on a side, move every vertex of
/// that side into the given scopes (`0` becomes `0_Bs` and `0_Red`). Sides
/// without overlap keep their ids.
pub fn scope_apart(
    stem: &WordForm,
    affix: &WordForm,
    stem_scope: Scope,
    affix_scope: Scope,
) -> Result<(WordForm, WordForm), DeriveError> {
    let identity = BTreeMap::new();
    let (sp, ap) = if stem.phon.vertices.is_disjoint(&affix.phon.vertices) {
        (identity.clone(), identity.clone())
    } else {
        (
            scope_all(&stem.phon, stem_scope)?,
            scope_all(&affix.phon, affix_scope)?,
        )
    };
    let (sm, am) = if stem.morph.vertices.is_disjoint(&affix.morph.vertices) {
        (identity.clone(), identity)
    } else {
        (
            scope_all(&stem.morph, stem_scope)?,
            scope_all(&affix.morph, affix_scope)?,
        )
    };
    Ok((stem.renamed(&sp, &sm), affix.renamed(&ap, &am)))
}
