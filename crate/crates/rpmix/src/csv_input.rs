//! Generic headered CSV episodes: one file per episode, one row per sample.

use std::path::Path;

use crate::adl::episode_id;
use crate::episode::Episode;
use crate::labels::{normalize_label, LabelRule};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelSource {
    /// Every row carries the label in this column; all rows must agree.
    Column(String),
    Filename(LabelRule),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CsvConfig {
    pub x_column: String,
    pub y_column: String,
    pub z_column: String,
    pub label: LabelSource,
    pub sample_rate_hz: f64,
}

impl Default for CsvConfig {
    fn default() -> Self {
        Self {
            x_column: "x".into(),
            y_column: "y".into(),
            z_column: "z".into(),
            label: LabelSource::Column("label".into()),
            sample_rate_hz: 52.0,
        }
    }
}

pub fn parse_csv_episode(path: &Path, config: &CsvConfig) -> Result<Episode> {
    let csv_err = |source| Error::Csv {
        path: path.to_path_buf(),
        source,
    };
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(csv_err)?;
    let headers = reader.headers().map_err(csv_err)?.clone();
    let column = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::MissingColumn {
                path: path.to_path_buf(),
                column: name.to_owned(),
            })
    };
    let axes = [
        column(&config.x_column)?,
        column(&config.y_column)?,
        column(&config.z_column)?,
    ];
    let label_column = match &config.label {
        LabelSource::Column(name) => Some(column(name)?),
        LabelSource::Filename(_) => None,
    };

    let mut channels: [Vec<f64>; 3] = Default::default();
    let mut row_label: Option<String> = None;
    for (row, record) in reader.records().enumerate() {
        // header is line 1
        let line = row + 2;
        let record = record.map_err(csv_err)?;
        let malformed = |reason: String| Error::MalformedLine {
            path: path.to_path_buf(),
            line,
            reason,
        };
        for (channel, &col) in channels.iter_mut().zip(&axes) {
            let field = record
                .get(col)
                .ok_or_else(|| malformed(format!("missing field {col}")))?;
            let value: f64 = field
                .parse()
                .ok()
                .filter(|v: &f64| v.is_finite())
                .ok_or_else(|| malformed(format!("`{field}` is not a finite number")))?;
            channel.push(value);
        }
        if let Some(col) = label_column {
            let label = normalize_label(record.get(col).unwrap_or_default());
            match &row_label {
                None => row_label = Some(label),
                Some(seen) if *seen != label => {
                    return Err(malformed(format!("label `{label}` differs from `{seen}`")));
                }
                Some(_) => {}
            }
        }
    }
    if channels[0].is_empty() {
        return Err(Error::EmptyFile {
            path: path.to_path_buf(),
        });
    }
    let label = match &config.label {
        LabelSource::Column(_) => row_label.filter(|l| !l.is_empty()),
        LabelSource::Filename(rule) => rule.label_for(path),
    }
    .ok_or_else(|| Error::UnknownLabel {
        path: path.to_path_buf(),
    })?;
    Episode::new(episode_id(path)?, label, channels, config.sample_rate_hz, path)
}
