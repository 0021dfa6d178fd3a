use thiserror::Error;

use crate::algebra::AxiomReport;

/// Errors shared across the crate. Parse errors carry the offending file
/// and 1-based line number so command-line diagnostics can point at them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KuError {
    #[error("malformed table: {detail}")]
    MalformedTable { detail: String },

    #[error("table is not a KU-algebra: {0}")]
    AxiomsFailed(AxiomReport),

    #[error("x*0 = 0 fails at x={x}; table rejected")]
    RightZeroFailed { x: usize },

    #[error("element {value} out of range for order {order}")]
    OutOfRange { value: usize, order: usize },

    #[error("subset is empty")]
    EmptySubset,

    #[error("relation is not a partial order: {detail}")]
    NotAPoset { detail: String },

    #[error("index 0 is not the least element")]
    NoLeastElement,

    #[error("order {requested} exceeds the enumeration bound {bound}")]
    BoundExceeded { requested: usize, bound: usize },

    #[error("cut representation failed at domain position {position}")]
    RepresentationFailure { position: usize },

    #[error("codeword length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("duplicate codeword {word}")]
    DuplicateWord { word: String },

    #[error("code is empty")]
    EmptyCode,

    #[error("column {column} of the code has no set bit")]
    ZeroColumn { column: usize },

    #[error("duplicate domain label {label:?}")]
    DuplicateLabel { label: String },

    #[error("malformed codeword: {detail}")]
    MalformedWord { detail: String },

    #[error("{file}:{line}: {detail}")]
    Parse {
        file: String,
        line: usize,
        detail: String,
    },

    #[error("{path}: {detail}")]
    Io { path: String, detail: String },
}

impl KuError {
    pub(crate) fn parse(file: &str, line: usize, detail: impl Into<String>) -> Self {
        KuError::Parse {
            file: file.to_string(),
            line,
            detail: detail.into(),
        }
    }
}
