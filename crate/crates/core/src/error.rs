//! Error type shared across the library.

use thiserror::Error;

/// Errors produced by tensor ops, training procedures, and dataset I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// Two operands have incompatible shapes for the named operation.
    #[error("shape mismatch in {op}: left {left:?} vs right {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: Vec<usize>,
        right: Vec<usize>,
    },

    /// An input is outside the mathematical domain of the operation.
    #[error("domain error in {op}: {message}")]
    Domain { op: &'static str, message: String },

    /// `backward` was called on a non-scalar node.
    #[error("backward requires a scalar output, got shape {shape:?}")]
    NonScalarOutput { shape: Vec<usize> },

    /// The tape was already consumed by a previous `backward` call.
    #[error("tape already consumed by backward")]
    TapeConsumed,

    /// Nodes from two different tapes were combined.
    #[error("nodes belong to different tapes")]
    TapeMismatch,

    /// A computation produced NaN or infinity.
    #[error("numerical failure in {context}: {message}")]
    Numerical { context: String, message: String },

    /// A rank label index is outside `[0, K-1]`.
    #[error("label index {index} out of range for {classes} classes")]
    LabelOutOfRange { index: usize, classes: usize },

    /// Every conditional subset of a CORN batch is empty.
    #[error("degenerate batch: all conditional subsets are empty")]
    DegenerateBatch,

    /// Invalid configuration detected before any work started.
    #[error("configuration error: {0}")]
    Config(String),

    /// Invalid data passed to an operation.
    #[error("validation error: {0}")]
    Validation(String),

    /// Underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// A persisted file could not be decoded.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: u64, message: String },
}

impl Error {
    pub fn numerical(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Numerical {
            context: context.into(),
            message: message.into(),
        }
    }

    pub fn config(message: impl Into<String>) -> Self {
        Error::Config(message.into())
    }

    pub fn validation(message: impl Into<String>) -> Self {
        Error::Validation(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
