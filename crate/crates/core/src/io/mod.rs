//! On-disk formats for lexicons and event domains, and the shipped fixtures.

pub mod canonical;
pub mod domain;
pub mod fixtures;
pub mod lexicon;

pub use canonical::to_canonical_string;
pub use domain::{
    parse_domain, parse_domain_unvalidated, serialize_domain, DomainDocument, VerbEntry,
    MAX_CLOSURE_ATOMS,
};
pub use lexicon::{
    parse_lexicon, parse_lexicon_unvalidated, serialize_lexicon, LexiconDocument, StrategyBinding,
};

pub const FORMAT_VERSION: u32 = 1;
