use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),

    #[error("invalid lattice: {0}")]
    Validation(String),

    #[error("unknown group spec `{0}`")]
    UnknownSpec(String),

    #[error("group order exceeds the element cap of {cap}")]
    ElementCap { cap: usize },

    #[error("unknown enumeration kind `{0}` (known: {1})")]
    UnknownKind(String, String),

    #[error("memory cap of {cap} bytes exceeded while building layer {layer} ({systems} systems stored)")]
    MemoryCap {
        cap: usize,
        layer: usize,
        systems: usize,
    },

    #[error("invalid edge ({0},{1}): not a strict comparable pair")]
    InvalidEdge(usize, usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("layout error: {0}")]
    Layout(String),

    #[error("thread pool: {0}")]
    ThreadPool(String),
}

pub type Result<T> = std::result::Result<T, Error>;
