use std::io;

use thiserror::Error;

use crate::graph::DegreeMode;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {index}: endpoint of ({u}, {v}) is out of range for {n} vertices")]
    EndpointOutOfRange {
        index: usize,
        u: usize,
        v: usize,
        n: usize,
    },

    #[error("line {index}: self-loop on vertex {v}")]
    SelfLoop { index: usize, v: usize },

    #[error("graph has {0} vertices; at most {max} are supported", max = u32::MAX)]
    TooManyVertices(usize),

    #[error("degree mode {mode} cannot be used on a{} graph", if *.directed { " directed" } else { "n undirected" })]
    ModeMismatch { mode: DegreeMode, directed: bool },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("duplicate word {0:?}")]
    DuplicateWord(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// Whether the error stems from how the library was called rather than
    /// from the data it was given.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::ModeMismatch { .. })
    }
}
