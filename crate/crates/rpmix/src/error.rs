use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{}:{line}: malformed line: {reason}", path.display())]
    MalformedLine {
        path: PathBuf,
        line: usize,
        reason: String,
    },
    #[error("{}: no activity label could be derived", path.display())]
    UnknownLabel { path: PathBuf },
    #[error("{}: file contains no samples", path.display())]
    EmptyFile { path: PathBuf },
    #[error("{}: missing column `{column}`", path.display())]
    MissingColumn { path: PathBuf, column: String },
    #[error("{}: {source}", path.display())]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("{}: {source}", path.display())]
    Png {
        path: PathBuf,
        #[source]
        source: png::EncodingError,
    },
    #[error("{}: {source}", path.display())]
    PngDecode {
        path: PathBuf,
        #[source]
        source: png::DecodingError,
    },
    #[error("{}: unsupported PNG layout: {reason}", path.display())]
    UnsupportedPng { path: PathBuf, reason: String },
    #[error("{}: {source}", path.display())]
    Episode {
        path: PathBuf,
        #[source]
        source: rpmix_core::Error,
    },
    #[error("invalid episode: {0}")]
    InvalidEpisode(String),
    #[error("duplicate episode id `{id}`")]
    DuplicateEpisode { id: String },
    #[error("{}:{line}: {source}", path.display())]
    ManifestLine {
        path: PathBuf,
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error("manifest invariant violated: {0}")]
    ManifestInvariant(String),
    #[error("manifest is empty")]
    EmptyManifest,
    #[error("split ratio must lie strictly between 0 and 1, got {0}")]
    InvalidRatio(f64),
    #[error("no episodes found")]
    NoEpisodes,
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] rpmix_core::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
