use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by preprocessing, searching, corpus generation and benchmarking.
#[derive(Debug, Error)]
pub enum Error {
    #[error("pattern must not be empty")]
    EmptyPattern,

    #[error("q-gram input has length {got}, expected q = {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("q = {q} is outside the supported range 1..={max}")]
    QOutOfRange { q: usize, max: usize },

    #[error("q = {q} exceeds the pattern length m = {m}")]
    QExceedsPattern { q: usize, m: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("corpus generation failed: {0}")]
    Generation(String),

    #[error("occurrence counts disagree in cell {cell}: {details}")]
    CountMismatch { cell: String, details: String },

    #[error("cannot emit a report with no rows")]
    EmptyReport,

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
