//! Set encoding of labeled, ordered, rooted trees and of whole word forms.
//!
//! A [`StructureGraph`] stores a tree as five sets: vertices, labels,
//! immediate dominance pairs, sibling precedence pairs and a naming relation
//! from vertices to labels. The universe (vertices together with labels) is
//! derived on demand and never stored.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::GraphError;

/// Namespace tag used when two structures that reuse the same integer ids
/// are combined into one word form (e.g. vertex `0` of a base and vertex `0`
/// of its reduplicant become `0_Bs` and `0_Red`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scope {
    /// Base for reduplication.
    Bs,
    /// Reduplicant.
    Red,
    /// Unaffixed word used as a stem.
    W,
    /// Non-reduplicative affix.
    A,
}

impl Scope {
    pub fn as_str(self) -> &'static str {
        match self {
            Scope::Bs => "Bs",
            Scope::Red => "Red",
            Scope::W => "W",
            Scope::A => "A",
        }
    }
}

impl FromStr for Scope {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Bs" => Ok(Scope::Bs),
            "Red" => Ok(Scope::Red),
            "W" => Ok(Scope::W),
            "A" => Ok(Scope::A),
            other => Err(GraphError::BadVertexId(other.to_owned())),
        }
    }
}

/// Opaque, totally ordered vertex identifier.
///
/// Plain identifiers serialize as JSON integers; scoped ones as strings of the
/// form `"<index>_<scope>"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    index: u32,
    scope: Option<Scope>,
}

impl VertexId {
    pub const fn new(index: u32) -> Self {
        VertexId { index, scope: None }
    }

    pub const fn scoped(index: u32, scope: Scope) -> Self {
        VertexId {
            index,
            scope: Some(scope),
        }
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn scope(self) -> Option<Scope> {
        self.scope
    }

    /// The same index placed in `scope`.
    pub fn with_scope(self, scope: Scope) -> Self {
        VertexId::scoped(self.index, scope)
    }
}

impl From<u32> for VertexId {
    fn from(index: u32) -> Self {
        VertexId::new(index)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.scope {
            None => write!(f, "{}", self.index),
            Some(s) => write!(f, "{}_{}", self.index, s.as_str()),
        }
    }
}

impl FromStr for VertexId {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::BadVertexId(s.to_owned());
        match s.split_once('_') {
            None => s.parse().map(VertexId::new).map_err(|_| bad()),
            Some((idx, scope)) => {
                let index = idx.parse().map_err(|_| bad())?;
                let scope = scope.parse().map_err(|_| bad())?;
                Ok(VertexId::scoped(index, scope))
            }
        }
    }
}

impl Serialize for VertexId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.scope {
            None => serializer.serialize_u32(self.index),
            Some(_) => serializer.collect_str(self),
        }
    }
}

impl<'de> Deserialize<'de> for VertexId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct VertexVisitor;

        impl Visitor<'_> for VertexVisitor {
            type Value = VertexId;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or a string like \"4_Red\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<VertexId, E> {
                u32::try_from(v)
                    .map(VertexId::new)
                    .map_err(|_| E::custom(format!("vertex id {v} out of range")))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<VertexId, E> {
                u32::try_from(v)
                    .map(VertexId::new)
                    .map_err(|_| E::custom(format!("vertex id {v} out of range")))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<VertexId, E> {
                v.parse().map_err(E::custom)
            }
        }

        deserializer.deserialize_any(VertexVisitor)
    }
}

/// Member of a graph's universe.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Element {
    Vertex(VertexId),
    Label(String),
}

pub type Pair = (VertexId, VertexId);

/// A tree encoded as the sets V, L, D, Pr and N.
///
/// Precedence is stored exactly as given; only sibling pairs are expected and
/// transitive precedence is recovered with [`StructureGraph::precedence_closure`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureGraph {
    pub vertices: BTreeSet<VertexId>,
    pub labels: BTreeSet<String>,
    pub dominance: BTreeSet<Pair>,
    pub precedence: BTreeSet<Pair>,
    pub naming: BTreeSet<(VertexId, String)>,
}

impl StructureGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// U = V ∪ L.
    pub fn universe(&self) -> BTreeSet<Element> {
        self.vertices
            .iter()
            .copied()
            .map(Element::Vertex)
            .chain(self.labels.iter().cloned().map(Element::Label))
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// First label the naming relation assigns to `v`.
    pub fn label_of(&self, v: VertexId) -> Option<&str> {
        self.naming
            .range((v, String::new())..)
            .take_while(|(x, _)| *x == v)
            .map(|(_, l)| l.as_str())
            .next()
    }

    /// Vertices carrying `label`, in vertex order.
    pub fn vertices_labeled(&self, label: &str) -> Vec<VertexId> {
        self.naming
            .iter()
            .filter(|(_, l)| l == label)
            .map(|(v, _)| *v)
            .collect()
    }

    /// Vertices that never occur as a dominated vertex.
    pub fn roots(&self) -> Vec<VertexId> {
        let children: BTreeSet<VertexId> = self.dominance.iter().map(|&(_, c)| c).collect();
        self.vertices
            .iter()
            .copied()
            .filter(|v| !children.contains(v))
            .collect()
    }

    /// The root, when there is exactly one.
    pub fn root(&self) -> Option<VertexId> {
        match self.roots().as_slice() {
            [r] => Some(*r),
            _ => None,
        }
    }

    pub fn children(&self, v: VertexId) -> Vec<VertexId> {
        self.dominance
            .range((v, VertexId::new(0))..)
            .take_while(|(p, _)| *p == v)
            .map(|&(_, c)| c)
            .collect()
    }

    pub fn parents(&self, v: VertexId) -> Vec<VertexId> {
        self.dominance
            .iter()
            .filter(|&&(_, c)| c == v)
            .map(|&(p, _)| p)
            .collect()
    }

    /// Every vertex reachable from `x` through one or more dominance edges.
    pub fn dominance_closure(&self, x: VertexId) -> Result<BTreeSet<VertexId>, GraphError> {
        if !self.contains(x) {
            return Err(GraphError::UnknownVertex(x));
        }
        let mut out = BTreeSet::new();
        let mut queue: VecDeque<VertexId> = self.children(x).into();
        while let Some(v) = queue.pop_front() {
            if out.insert(v) {
                queue.extend(self.children(v));
            }
        }
        // A cycle through x would put x into its own closure.
        out.remove(&x);
        Ok(out)
    }

    /// Transitive closure of the stored precedence pairs.
    pub fn precedence_closure(&self) -> BTreeSet<Pair> {
        let mut closure = self.precedence.clone();
        loop {
            let extra: Vec<Pair> = closure
                .iter()
                .flat_map(|&(a, b)| {
                    closure
                        .range((b, VertexId::new(0))..)
                        .take_while(move |(x, _)| *x == b)
                        .map(move |&(_, c)| (a, c))
                })
                .filter(|p| !closure.contains(p))
                .collect();
            if extra.is_empty() {
                return closure;
            }
            closure.extend(extra);
        }
    }

    /// `v` and everything it dominates, with all relations restricted to
    /// that vertex set. Labels are the ones actually used.
    pub fn subtree(&self, v: VertexId) -> Result<StructureGraph, GraphError> {
        let mut keep = self.dominance_closure(v)?;
        keep.insert(v);
        Ok(self.restricted_to(&keep))
    }

    /// Relations restricted to `keep`; label set reduced to used labels.
    pub fn restricted_to(&self, keep: &BTreeSet<VertexId>) -> StructureGraph {
        let both = |&(a, b): &Pair| keep.contains(&a) && keep.contains(&b);
        let naming: BTreeSet<(VertexId, String)> = self
            .naming
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .cloned()
            .collect();
        StructureGraph {
            vertices: keep.intersection(&self.vertices).copied().collect(),
            labels: naming.iter().map(|(_, l)| l.clone()).collect(),
            dominance: self.dominance.iter().filter(|p| both(p)).copied().collect(),
            precedence: self
                .precedence
                .iter()
                .filter(|p| both(p))
                .copied()
                .collect(),
            naming,
        }
    }

    /// Apply a vertex renaming to every set. Vertices missing from `map` keep
    /// their id.
    pub fn renamed(&self, map: &BTreeMap<VertexId, VertexId>) -> StructureGraph {
        let f = |v: &VertexId| *map.get(v).unwrap_or(v);
        StructureGraph {
            vertices: self.vertices.iter().map(f).collect(),
            labels: self.labels.clone(),
            dominance: self.dominance.iter().map(|(a, b)| (f(a), f(b))).collect(),
            precedence: self.precedence.iter().map(|(a, b)| (f(a), f(b))).collect(),
            naming: self.naming.iter().map(|(v, l)| (f(v), l.clone())).collect(),
        }
    }

    /// Move every vertex into `scope`.
    pub fn scoped(&self, scope: Scope) -> StructureGraph {
        let map = self
            .vertices
            .iter()
            .map(|&v| (v, v.with_scope(scope)))
            .collect();
        self.renamed(&map)
    }

    /// Labels of the naming relation, as a sorted multiset.
    pub fn label_multiset(&self) -> Vec<&str> {
        let mut out: Vec<&str> = self.naming.iter().map(|(_, l)| l.as_str()).collect();
        out.sort_unstable();
        out
    }

    /// Order-insensitive canonical code of the labeled subtree under `v`.
    /// Two subtrees are label-isomorphic iff their signatures are equal.
    pub fn subtree_signature(&self, v: VertexId) -> String {
        let mut kids: Vec<String> = self
            .children(v)
            .into_iter()
            .map(|c| self.subtree_signature(c))
            .collect();
        kids.sort();
        format!("{}({})", self.label_of(v).unwrap_or("?"), kids.join(","))
    }

    pub fn max_index(&self) -> Option<u32> {
        self.vertices.iter().map(|v| v.index()).max()
    }
}

/// Checks that `map` is a bijection from `a`'s vertices onto `b`'s that
/// carries dominance, precedence and naming of `a` exactly onto those of `b`.
pub fn is_isomorphism(
    a: &StructureGraph,
    b: &StructureGraph,
    map: &BTreeMap<VertexId, VertexId>,
) -> bool {
    if map.len() != a.vertices.len() || a.vertices.len() != b.vertices.len() {
        return false;
    }
    if map.keys().copied().collect::<BTreeSet<_>>() != a.vertices {
        return false;
    }
    if map.values().copied().collect::<BTreeSet<_>>() != b.vertices {
        return false;
    }
    a.renamed(map) == *b
}

/// The word-form triple: phonological tree, morphological tree and the
/// phonology–morphology correspondence, written as (phon, morph) pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordForm {
    pub phon: StructureGraph,
    pub morph: StructureGraph,
    pub correspondence: BTreeSet<Pair>,
}

/// A non-reduplicative affix is represented exactly like a word form.
pub type AffixForm = WordForm;

impl WordForm {
    pub fn vertex_count(&self) -> usize {
        self.phon.vertices.len() + self.morph.vertices.len()
    }

    /// Rename phon and morph vertices independently; the correspondence
    /// follows both renamings.
    pub fn renamed(
        &self,
        phon_map: &BTreeMap<VertexId, VertexId>,
        morph_map: &BTreeMap<VertexId, VertexId>,
    ) -> WordForm {
        WordForm {
            phon: self.phon.renamed(phon_map),
            morph: self.morph.renamed(morph_map),
            correspondence: self
                .correspondence
                .iter()
                .map(|(p, m)| {
                    (
                        *phon_map.get(p).unwrap_or(p),
                        *morph_map.get(m).unwrap_or(m),
                    )
                })
                .collect(),
        }
    }
}
