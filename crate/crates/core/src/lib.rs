//! Set-theoretic models of pluractional verbs: the forms derived by
//! affixation and by total or partial reduplication, the meanings of
//! event-external and event-internal pluractionals, and instrumentation
//! that counts the primitive set operations each process performs.

pub mod derive;
pub mod error;
pub mod graph;
pub mod io;
pub mod profile;
pub mod semantics;
pub mod validate;

pub use derive::{derive_pluractional_form, AffixPosition, BaseSpec, Pins, Strategy};
pub use error::{DeriveError, GraphError, IoError, ProfileError, SemanticsError};
pub use graph::{AffixForm, Pair, Scope, StructureGraph, VertexId, WordForm};
pub use validate::{validate_structure, validate_word_form, ValidationReport, ViolationClass};
