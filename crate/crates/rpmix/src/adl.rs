//! Reader for the UCI "ADL Recognition with Wrist-worn Accelerometer" layout:
//! one `.txt` file per episode, one whitespace-separated `x y z` triple per
//! line, the activity encoded in the file name.

use std::fs;
use std::path::Path;

use crate::episode::Episode;
use crate::labels::LabelRule;
use crate::{Error, Result};

pub const ADL_SAMPLE_RATE_HZ: f64 = 32.0;

/// The seven activities used from the corpus, as normalized labels.
pub const ADL_CLASSES: [&str; 7] = [
    "climb_stairs",
    "drink_glass",
    "getup_bed",
    "pour_water",
    "sitdown_chair",
    "standup_chair",
    "walk",
];

#[derive(Debug, Clone, PartialEq)]
pub struct AdlConfig {
    pub label_rule: LabelRule,
    pub sample_rate_hz: f64,
    /// Only `.txt` files whose name starts with this prefix are episodes.
    pub file_prefix: Option<String>,
    /// Directories whose name ends with this suffix are not walked
    /// (the corpus ships `*_MODEL` folders next to the raw recordings).
    pub exclude_dir_suffix: Option<String>,
}

impl Default for AdlConfig {
    fn default() -> Self {
        Self {
            label_rule: LabelRule::ADL,
            sample_rate_hz: ADL_SAMPLE_RATE_HZ,
            file_prefix: Some("Accelerometer".into()),
            exclude_dir_suffix: Some("_MODEL".into()),
        }
    }
}

pub fn parse_adl_file(path: &Path, config: &AdlConfig) -> Result<Episode> {
    let label = config
        .label_rule
        .label_for(path)
        .ok_or_else(|| Error::UnknownLabel {
            path: path.to_path_buf(),
        })?;
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut channels: [Vec<f64>; 3] = Default::default();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::MalformedLine {
                path: path.to_path_buf(),
                line: idx + 1,
                reason: format!("expected 3 fields, found {}", fields.len()),
            });
        }
        for (channel, field) in channels.iter_mut().zip(&fields) {
            let value: f64 = field
                .parse()
                .ok()
                .filter(|v: &f64| v.is_finite())
                .ok_or_else(|| Error::MalformedLine {
                    path: path.to_path_buf(),
                    line: idx + 1,
                    reason: format!("`{field}` is not a finite number"),
                })?;
            channel.push(value);
        }
    }
    if channels[0].is_empty() {
        return Err(Error::EmptyFile {
            path: path.to_path_buf(),
        });
    }
    let id = episode_id(path)?;
    Episode::new(id, label, channels, config.sample_rate_hz, path)
}

pub(crate) fn episode_id(path: &Path) -> Result<String> {
    path.file_stem()
        .and_then(|s| s.to_str())
        .map(str::to_owned)
        .ok_or_else(|| Error::InvalidEpisode(format!("{}: no usable file stem", path.display())))
}
