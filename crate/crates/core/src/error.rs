use std::io;

use thiserror::Error;

use crate::hangul::HangulError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by corpus ingestion, training, encoding and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Hangul(#[from] HangulError),

    #[error("unknown POS tag `{tag}`{}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    UnknownTag { tag: String, line: Option<usize> },

    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },

    #[error("mode `{mode}` expects {expected} input")]
    ModeInputMismatch {
        mode: &'static str,
        expected: &'static str,
    },

    #[error("cannot train on an empty corpus")]
    EmptyCorpus,

    #[error("token sequence starts with a continuation piece `{token}`")]
    DanglingContinuation { token: String },

    #[error("line {line}: duplicate vocabulary entry `{token}`")]
    DuplicateEntry { token: String, line: usize },

    #[error("line {line}: empty vocabulary entry")]
    EmptyEntry { line: usize },

    #[error("vocabulary must begin with [PAD], [UNK], [CLS], [SEP], [MASK]")]
    MissingSpecials,

    #[error("no tokens to aggregate")]
    EmptyInput,

    #[error("line {line}: invalid UTF-8")]
    InvalidEncoding { line: usize },

    #[error("unknown pipeline mode `{0}` (expected wp, wp-sd, morwp, morwp-sd or morwp-md)")]
    InvalidMode(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    /// Stable class name, used by the CLI and the C API diagnostics.
    pub fn class(&self) -> &'static str {
        match self {
            Error::Hangul(e) => e.class(),
            Error::UnknownTag { .. } => "UnknownTag",
            Error::MalformedLine { .. } => "MalformedLine",
            Error::ModeInputMismatch { .. } => "ModeInputMismatch",
            Error::EmptyCorpus => "EmptyCorpus",
            Error::DanglingContinuation { .. } => "DanglingContinuation",
            Error::DuplicateEntry { .. } => "DuplicateEntry",
            Error::EmptyEntry { .. } => "EmptyEntry",
            Error::MissingSpecials => "MissingSpecials",
            Error::EmptyInput => "EmptyInput",
            Error::InvalidEncoding { .. } => "InvalidEncoding",
            Error::InvalidMode(_) => "InvalidMode",
            Error::InvalidConfig(_) => "InvalidConfig",
            Error::Io(_) => "Io",
        }
    }
}
