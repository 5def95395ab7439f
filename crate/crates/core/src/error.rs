use thiserror::Error;

use crate::graph::VertexId;
use crate::profile::Process;
use crate::validate::ValidationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("malformed vertex id {0:?}")]
    BadVertexId(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeriveError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("base does not conform: {0}")]
    NonConformingBase(String),
    #[error("template does not conform: {0}")]
    NonConformingTemplate(String),
    #[error("vertex {vertex} occurs in both {side} graphs")]
    IdCollision {
        side: &'static str,
        vertex: VertexId,
    },
    #[error("infix anchor {0} is not a non-root vertex of the stem")]
    BadAnchor(VertexId),
    #[error("invalid input structure:\n{0}")]
    InvalidInput(ValidationReport),
}

impl From<GraphError> for DeriveError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::UnknownVertex(v) => DeriveError::UnknownVertex(v),
            GraphError::BadVertexId(s) => DeriveError::NonConformingBase(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("verb {0:?} is not defined")]
    UnknownVerb(String),
    #[error("verb {verb:?} lists subevent {subevent:?}, which has no definition")]
    UndefinedSubevent { verb: String, subevent: String },
    #[error("invalid event domain: {0}")]
    InvalidDomain(String),
    #[error("{atoms} atoms exceed the enumeration bound of {max}")]
    TooManyAtoms { atoms: usize, max: usize },
}

#[derive(Debug, Error)]
pub enum ProfileError {
    #[error("size {got} is below the minimum of {min}")]
    SizeTooSmall { min: usize, got: usize },
    #[error("{param} = {got} exceeds the bound of {max}")]
    BoundExceeded {
        param: &'static str,
        max: usize,
        got: usize,
    },
    #[error("need at least {need} samples, got {got}")]
    InsufficientSamples { need: usize, got: usize },
    #[error("sample sizes must be strictly increasing")]
    NonIncreasingSizes,
    #[error("report has no samples for process {0}")]
    MissingProcess(Process),
    #[error("input does not fit process {0}")]
    InputMismatch(Process),
    #[error(transparent)]
    Derive(#[from] DeriveError),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unsupported format_version {0}")]
    UnsupportedVersion(u32),
    #[error("unresolved reference in {location}: {name:?}")]
    Reference { location: String, name: String },
    #[error("invalid structure in {location}:\n{report}")]
    Invalid {
        location: String,
        report: ValidationReport,
    },
    #[error("invalid domain: {0}")]
    Domain(String),
    #[error("closure over {size} atoms exceeds the bound of {max}")]
    ClosureTooLarge { size: usize, max: usize },
}
