//! Batch tooling around `rpmix-core`: reads accelerometer corpora (UCI ADL
//! text files or generic CSV), encodes every episode into temporal,
//! frequency and mixup recurrence-plot PNGs, and writes a JSON-lines
//! manifest with a stratified, episode-level train/test split.

pub mod adl;
pub mod config;
pub mod corpus;
pub mod csv_input;
pub mod encode;
pub mod episode;
mod error;
pub mod labels;
pub mod manifest;
pub mod png_io;
pub mod selfcheck;
pub mod split;
pub mod stats;

pub use adl::{parse_adl_file, AdlConfig, ADL_CLASSES};
pub use config::ConfigLayer;
pub use corpus::{CorpusConfig, DatasetKind};
pub use csv_input::{parse_csv_episode, CsvConfig, LabelSource};
pub use encode::{encode_episode, run_encode, EncodeConfig, EncodeOptions, EncodeReport};
pub use episode::{resample_to_length, Episode};
pub use error::{Error, Result};
pub use labels::{normalize_label, LabelMap, LabelRule};
pub use manifest::{DatasetManifest, EncodingKind, ManifestRecord, Split};
pub use png_io::{read_png, write_png};
pub use split::split_train_test;
pub use stats::corpus_stats;
