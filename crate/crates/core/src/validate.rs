//! Structural validation of graphs and word forms.
//!
//! Violations are returned as data. An empty report means the value is well
//! formed. Reports are sorted, so two runs over the same value are identical.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::graph::{Pair, StructureGraph, VertexId, WordForm};

/// Coarse violation category, used when only the kind of defect matters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationClass {
    EmptyGraph,
    DanglingReference,
    MultipleRoots,
    MultipleParents,
    Cycle,
    Disconnected,
    NonSiblingPrecedence,
    UnnamedVertex,
    DuplicateNaming,
    UnknownLabel,
    DanglingPhonVertex,
    DanglingMorphVertex,
}

impl ViolationClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationClass::EmptyGraph => "empty graph",
            ViolationClass::DanglingReference => "dangling reference",
            ViolationClass::MultipleRoots => "multiple roots",
            ViolationClass::MultipleParents => "multiple parents",
            ViolationClass::Cycle => "cycle",
            ViolationClass::Disconnected => "disconnected",
            ViolationClass::NonSiblingPrecedence => "non-sibling precedence",
            ViolationClass::UnnamedVertex => "unnamed vertex",
            ViolationClass::DuplicateNaming => "duplicate naming",
            ViolationClass::UnknownLabel => "unknown label",
            ViolationClass::DanglingPhonVertex => "dangling phon vertex",
            ViolationClass::DanglingMorphVertex => "dangling morph vertex",
        }
    }
}

impl fmt::Display for ViolationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    Dominance,
    Precedence,
    Naming,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Violation {
    EmptyGraph,
    DanglingReference {
        relation: Relation,
        vertex: VertexId,
    },
    MultipleRoots(Vec<VertexId>),
    MultipleParents {
        vertex: VertexId,
        parents: Vec<VertexId>,
    },
    Cycle(Vec<VertexId>),
    Disconnected(Vec<VertexId>),
    NonSiblingPrecedence(Pair),
    UnnamedVertex(VertexId),
    DuplicateNaming {
        vertex: VertexId,
        labels: Vec<String>,
    },
    UnknownLabel {
        vertex: VertexId,
        label: String,
    },
    DanglingPhonVertex(Pair),
    DanglingMorphVertex(Pair),
}

impl Violation {
    pub fn class(&self) -> ViolationClass {
        match self {
            Violation::EmptyGraph => ViolationClass::EmptyGraph,
            Violation::DanglingReference { .. } => ViolationClass::DanglingReference,
            Violation::MultipleRoots(_) => ViolationClass::MultipleRoots,
            Violation::MultipleParents { .. } => ViolationClass::MultipleParents,
            Violation::Cycle(_) => ViolationClass::Cycle,
            Violation::Disconnected(_) => ViolationClass::Disconnected,
            Violation::NonSiblingPrecedence(_) => ViolationClass::NonSiblingPrecedence,
            Violation::UnnamedVertex(_) => ViolationClass::UnnamedVertex,
            Violation::DuplicateNaming { .. } => ViolationClass::DuplicateNaming,
            Violation::UnknownLabel { .. } => ViolationClass::UnknownLabel,
            Violation::DanglingPhonVertex(_) => ViolationClass::DanglingPhonVertex,
            Violation::DanglingMorphVertex(_) => ViolationClass::DanglingMorphVertex,
        }
    }
}

fn list(vs: &[VertexId]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let class = self.class();
        match self {
            Violation::EmptyGraph => write!(f, "{class}"),
            Violation::DanglingReference { relation, vertex } => {
                write!(
                    f,
                    "{class}: {relation:?} mentions non-member vertex {vertex}"
                )
            }
            Violation::MultipleRoots(r) => write!(f, "{class}: {{{}}}", list(r)),
            Violation::MultipleParents { vertex, parents } => {
                write!(f, "{class}: {vertex} is dominated by {{{}}}", list(parents))
            }
            Violation::Cycle(vs) => write!(f, "{class}: {{{}}}", list(vs)),
            Violation::Disconnected(vs) => {
                write!(f, "{class}: {{{}}} not reachable from the root", list(vs))
            }
            Violation::NonSiblingPrecedence((a, b)) => write!(f, "{class}: ({a}, {b})"),
            Violation::UnnamedVertex(v) => write!(f, "{class}: {v}"),
            Violation::DuplicateNaming { vertex, labels } => {
                write!(f, "{class}: {vertex} named {labels:?}")
            }
            Violation::UnknownLabel { vertex, label } => {
                write!(
                    f,
                    "{class}: {vertex} named {label:?}, which is not in the label set"
                )
            }
            Violation::DanglingPhonVertex((p, m)) | Violation::DanglingMorphVertex((p, m)) => {
                write!(f, "{class}: correspondence pair ({p}, {m})")
            }
        }
    }
}

/// Which part of a word form a finding belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    Graph,
    Phon,
    Morph,
    Correspondence,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Finding {
    pub part: Part,
    pub violation: Violation,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn classes(&self) -> BTreeSet<ViolationClass> {
        self.findings.iter().map(|f| f.violation.class()).collect()
    }

    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        self.findings.iter().map(|f| &f.violation)
    }

    fn extend(&mut self, part: Part, vs: impl IntoIterator<Item = Violation>) {
        self.findings
            .extend(vs.into_iter().map(|violation| Finding { part, violation }));
    }

    fn finish(mut self) -> Self {
        self.findings.sort();
        self.findings.dedup();
        self
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.findings.is_empty() {
            return writeln!(f, "valid");
        }
        for finding in &self.findings {
            let part = match finding.part {
                Part::Graph => "",
                Part::Phon => "phon: ",
                Part::Morph => "morph: ",
                Part::Correspondence => "correspondence: ",
            };
            writeln!(f, "{part}{}", finding.violation)?;
        }
        Ok(())
    }
}

pub fn validate_structure(g: &StructureGraph) -> ValidationReport {
    let mut report = ValidationReport::default();
    report.extend(Part::Graph, graph_violations(g));
    report.finish()
}

pub fn validate_word_form(w: &WordForm) -> ValidationReport {
    let mut report = ValidationReport::default();
    report.extend(Part::Phon, graph_violations(&w.phon));
    report.extend(Part::Morph, graph_violations(&w.morph));
    report.extend(Part::Correspondence, correspondence_violations(w));
    report.finish()
}

fn correspondence_violations(w: &WordForm) -> Vec<Violation> {
    let mut out = Vec::new();
    for &pair in &w.correspondence {
        if !w.phon.contains(pair.0) {
            out.push(Violation::DanglingPhonVertex(pair));
        }
        if !w.morph.contains(pair.1) {
            out.push(Violation::DanglingMorphVertex(pair));
        }
    }
    out
}

fn graph_violations(g: &StructureGraph) -> Vec<Violation> {
    let mut out = Vec::new();
    if g.vertices.is_empty() {
        out.push(Violation::EmptyGraph);
    }

    let dangling = |relation, vertex: VertexId| {
        (!g.contains(vertex)).then_some(Violation::DanglingReference { relation, vertex })
    };
    for &(a, b) in &g.dominance {
        out.extend(
            [a, b]
                .into_iter()
                .filter_map(|x| dangling(Relation::Dominance, x)),
        );
    }
    for &(a, b) in &g.precedence {
        out.extend(
            [a, b]
                .into_iter()
                .filter_map(|x| dangling(Relation::Precedence, x)),
        );
    }
    for (v, _) in &g.naming {
        out.extend(dangling(Relation::Naming, *v));
    }

    let mut children: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    let mut parents: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for &(p, c) in &g.dominance {
        children.entry(p).or_default().push(c);
        parents.entry(c).or_default().push(p);
    }
    for (&vertex, ps) in &parents {
        if ps.len() > 1 {
            out.push(Violation::MultipleParents {
                vertex,
                parents: ps.clone(),
            });
        }
    }

    let reach = |from: VertexId| -> BTreeSet<VertexId> {
        let mut seen = BTreeSet::new();
        let mut stack: Vec<VertexId> = children.get(&from).cloned().unwrap_or_default();
        while let Some(v) = stack.pop() {
            if seen.insert(v) {
                stack.extend(children.get(&v).into_iter().flatten().copied());
            }
        }
        seen
    };

    // A vertex lies on a cycle iff it can reach itself.
    let on_cycle: Vec<VertexId> = children
        .keys()
        .copied()
        .filter(|&v| reach(v).contains(&v))
        .collect();
    let mut cycle_affected: BTreeSet<VertexId> = BTreeSet::new();
    if !on_cycle.is_empty() {
        for &v in &on_cycle {
            cycle_affected.insert(v);
            cycle_affected.extend(reach(v));
        }
        out.push(Violation::Cycle(on_cycle));
    }

    let roots: Vec<VertexId> = g
        .vertices
        .iter()
        .copied()
        .filter(|v| !parents.contains_key(v))
        .collect();
    match roots.as_slice() {
        // With no root every vertex has a parent, so a cycle is already reported.
        [] => {}
        [root] => {
            let reached = reach(*root);
            let lost: Vec<VertexId> = g
                .vertices
                .iter()
                .copied()
                .filter(|v| v != root && !reached.contains(v) && !cycle_affected.contains(v))
                .collect();
            if !lost.is_empty() {
                out.push(Violation::Disconnected(lost));
            }
        }
        _ => out.push(Violation::MultipleRoots(roots)),
    }

    for &(a, b) in &g.precedence {
        if !(g.contains(a) && g.contains(b)) {
            continue;
        }
        let pa = parents.get(&a).map(Vec::as_slice).unwrap_or_default();
        let pb = parents.get(&b).map(Vec::as_slice).unwrap_or_default();
        let siblings = a != b && pa.iter().any(|p| pb.contains(p));
        if !siblings {
            out.push(Violation::NonSiblingPrecedence((a, b)));
        }
    }

    let mut names: BTreeMap<VertexId, Vec<String>> = BTreeMap::new();
    for (v, l) in &g.naming {
        names.entry(*v).or_default().push(l.clone());
        if !g.labels.contains(l) {
            out.push(Violation::UnknownLabel {
                vertex: *v,
                label: l.clone(),
            });
        }
    }
    for &v in &g.vertices {
        match names.get(&v).map(Vec::len).unwrap_or(0) {
            0 => out.push(Violation::UnnamedVertex(v)),
            1 => {}
            _ => out.push(Violation::DuplicateNaming {
                vertex: v,
                labels: names[&v].clone(),
            }),
        }
    }
    out
}
