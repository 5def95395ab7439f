//! Fixtures shipped in the repository's `data/` directory, embedded at build
//! time. Loaders panic on a broken fixture; the fixtures are tested.

use crate::derive::{BaseSpec, ReduplicantTemplate};
use crate::graph::{AffixForm, StructureGraph, WordForm};
use crate::io::{parse_domain, parse_lexicon, DomainDocument, LexiconDocument};
use crate::validate::ViolationClass;

pub const STICK_JSON: &str = include_str!("../../../../data/stick.json");
pub const TSIX_JSON: &str = include_str!("../../../../data/tsix.json");
pub const KARUK_JSON: &str = include_str!("../../../../data/karuk_ikxip.json");
pub const YUROK_JSON: &str = include_str!("../../../../data/yurok.json");
pub const SIT_JSON: &str = include_str!("../../../../data/kaqchikel_sit.json");
pub const KISS_JSON: &str = include_str!("../../../../data/kiss.json");
pub const TSIX_BASE_JSON: &str = include_str!("../../../../data/expected/tsix_base.json");
pub const TSIX_RED_JSON: &str = include_str!("../../../../data/expected/tsix_reduplicant.json");
pub const TSIX_IP_JSON: &str = include_str!("../../../../data/expected/tsix_ip.json");

/// Every shipped lexicon document, by file name.
pub const LEXICONS: &[(&str, &str)] = &[
    ("stick.json", STICK_JSON),
    ("tsix.json", TSIX_JSON),
    ("karuk_ikxip.json", KARUK_JSON),
    ("yurok.json", YUROK_JSON),
    ("expected/tsix_base.json", TSIX_BASE_JSON),
    ("expected/tsix_reduplicant.json", TSIX_RED_JSON),
    ("expected/tsix_ip.json", TSIX_IP_JSON),
];

/// Lexicons whose word form `bad` breaks exactly one structural invariant,
/// with the violation class each should produce.
pub const INVALID_LEXICONS: &[(&str, &str, ViolationClass)] = &[
    (
        "invalid/cycle.json",
        include_str!("../../../../data/invalid/cycle.json"),
        ViolationClass::Cycle,
    ),
    (
        "invalid/two_roots.json",
        include_str!("../../../../data/invalid/two_roots.json"),
        ViolationClass::MultipleRoots,
    ),
    (
        "invalid/non_sibling_precedence.json",
        include_str!("../../../../data/invalid/non_sibling_precedence.json"),
        ViolationClass::NonSiblingPrecedence,
    ),
    (
        "invalid/duplicate_naming.json",
        include_str!("../../../../data/invalid/duplicate_naming.json"),
        ViolationClass::DuplicateNaming,
    ),
];

/// Every shipped domain document, by file name.
pub const DOMAINS: &[(&str, &str)] = &[("kaqchikel_sit.json", SIT_JSON), ("kiss.json", KISS_JSON)];

fn lexicon(text: &str) -> LexiconDocument {
    parse_lexicon(text.as_bytes()).expect("shipped lexicon fixture parses")
}

fn only_word_form(text: &str) -> WordForm {
    let doc = lexicon(text);
    assert_eq!(doc.word_forms.len(), 1);
    doc.word_forms.into_values().next().unwrap()
}

pub fn stick_lexicon() -> LexiconDocument {
    lexicon(STICK_JSON)
}

pub fn tsix_lexicon() -> LexiconDocument {
    lexicon(TSIX_JSON)
}

pub fn karuk_lexicon() -> LexiconDocument {
    lexicon(KARUK_JSON)
}

pub fn yurok_lexicon() -> LexiconDocument {
    lexicon(YUROK_JSON)
}

/// [stɪk] with its stem and word correspondences.
pub fn stick() -> WordForm {
    stick_lexicon().word_forms["stick"].clone()
}

/// Reconstructed word form of t͡six, whose stem is the whole word.
pub fn tsix_word() -> WordForm {
    tsix_lexicon().word_forms["tsix"].clone()
}

pub fn tsix_base_spec() -> BaseSpec {
    let doc = tsix_lexicon();
    BaseSpec::new(
        doc.strategies["ip"]
            .base_vertex
            .expect("tsix strategy names its base"),
    )
}

/// The listed base phonology of t͡six.
pub fn tsix_base_phon() -> StructureGraph {
    only_word_form(TSIX_BASE_JSON).phon
}

/// The Ca' template as given in the input.
pub fn ca_template() -> ReduplicantTemplate {
    tsix_lexicon().templates["ca"].clone()
}

/// The listed reduplicant tsaʔ.
pub fn tsix_reduplicant() -> WordForm {
    only_word_form(TSIX_RED_JSON)
}

/// The listed pluractional form t͡six-t͡saʔ.
pub fn tsix_pluractional() -> WordForm {
    only_word_form(TSIX_IP_JSON)
}

/// Karuk -va.
pub fn va_affix() -> AffixForm {
    karuk_lexicon().affixes["va"].clone()
}

pub fn sit_domain() -> DomainDocument {
    parse_domain(SIT_JSON.as_bytes()).expect("shipped domain fixture parses")
}

pub fn kiss_domain() -> DomainDocument {
    parse_domain(KISS_JSON.as_bytes()).expect("shipped domain fixture parses")
}
