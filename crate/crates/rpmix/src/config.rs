//! Layered configuration: defaults, then a TOML config file, then flags.

use std::path::{Path, PathBuf};

use rpmix_core::{MixupMode, MixupParams};
use serde::Deserialize;

use crate::corpus::{CorpusConfig, DatasetKind};
use crate::csv_input::LabelSource;
use crate::encode::{EncodeConfig, EncodeOptions};
use crate::labels::{normalize_label, LabelRule};
use crate::manifest::EncodingKind;
use crate::{Error, Result};

pub const DEFAULT_SPLIT_RATIO: f64 = 0.7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MixupModeName {
    Sampled,
    Fixed,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MixupLayer {
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub mode: Option<MixupModeName>,
    pub fixed_lambda: Option<f64>,
    pub variants: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CsvLayer {
    pub x_column: Option<String>,
    pub y_column: Option<String>,
    pub z_column: Option<String>,
    /// Column holding the label; ignored when `label_field` is set.
    pub label_column: Option<String>,
    /// Take the label from this delimiter-separated field of the file stem.
    pub label_field: Option<usize>,
    pub label_delimiter: Option<char>,
    pub sample_rate_hz: Option<f64>,
}

/// One layer of settings. Field names mirror [`EncodeConfig`].
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigLayer {
    pub input_dir: Option<PathBuf>,
    pub output_dir: Option<PathBuf>,
    pub dataset_kind: Option<DatasetKind>,
    pub window_length: Option<usize>,
    pub encodings: Option<Vec<EncodingKind>>,
    pub split_ratio: Option<f64>,
    pub seed: Option<u64>,
    pub jobs: Option<usize>,
    pub fail_fast: Option<bool>,
    pub classes: Option<Vec<String>>,
    #[serde(default)]
    pub mixup: MixupLayer,
    #[serde(default)]
    pub csv: CsvLayer,
}

macro_rules! overlay {
    ($low:expr, $high:expr; $($field:ident),*) => {
        $( if $high.$field.is_some() { $low.$field = $high.$field; } )*
    };
}

impl ConfigLayer {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }

    /// Fields set in `higher` win.
    pub fn overlay(mut self, higher: ConfigLayer) -> Self {
        overlay!(self, higher; input_dir, output_dir, dataset_kind, window_length, encodings,
            split_ratio, seed, jobs, fail_fast, classes);
        overlay!(self.mixup, higher.mixup; alpha, beta, mode, fixed_lambda, variants);
        overlay!(self.csv, higher.csv; x_column, y_column, z_column, label_column, label_field,
            label_delimiter, sample_rate_hz);
        self
    }

    pub fn corpus_config(&self) -> CorpusConfig {
        let mut corpus = CorpusConfig::new(self.dataset_kind.unwrap_or(DatasetKind::Adl));
        if let Some(classes) = &self.classes {
            corpus.classes = Some(classes.iter().map(|c| normalize_label(c)).collect());
        }
        let csv = &self.csv;
        let target = &mut corpus.csv;
        if let Some(v) = &csv.x_column {
            target.x_column = v.clone();
        }
        if let Some(v) = &csv.y_column {
            target.y_column = v.clone();
        }
        if let Some(v) = &csv.z_column {
            target.z_column = v.clone();
        }
        if let Some(v) = &csv.label_column {
            target.label = LabelSource::Column(v.clone());
        }
        if let Some(field) = csv.label_field {
            target.label = LabelSource::Filename(LabelRule {
                delimiter: csv.label_delimiter.unwrap_or('-'),
                field,
            });
        }
        if let Some(rate) = csv.sample_rate_hz {
            target.sample_rate_hz = rate;
        }
        corpus
    }

    pub fn mixup_params(&self) -> MixupParams {
        let defaults = MixupParams::default();
        MixupParams {
            alpha: self.mixup.alpha.unwrap_or(defaults.alpha),
            beta: self.mixup.beta.unwrap_or(defaults.beta),
            mode: match self.mixup.mode {
                Some(MixupModeName::Fixed) => MixupMode::Fixed,
                Some(MixupModeName::Sampled) => MixupMode::Sampled,
                None => defaults.mode,
            },
            fixed_lambda: self.mixup.fixed_lambda.unwrap_or(defaults.fixed_lambda),
            seed: defaults.seed,
        }
    }

    pub fn into_encode_config(self) -> Result<EncodeConfig> {
        let defaults = EncodeOptions::default();
        let input_dir = self
            .input_dir
            .clone()
            .ok_or_else(|| Error::Config("an input directory is required (--input)".into()))?;
        let output_dir = self
            .output_dir
            .clone()
            .ok_or_else(|| Error::Config("an output directory is required (--output)".into()))?;
        let options = EncodeOptions {
            window_length: self.window_length.unwrap_or(defaults.window_length),
            encodings: match &self.encodings {
                Some(list) => list.iter().copied().collect(),
                None => defaults.encodings,
            },
            mixup: self.mixup_params(),
            mix_variants: self.mixup.variants.unwrap_or(defaults.mix_variants),
            seed: self.seed.unwrap_or(defaults.seed),
            spectrum: defaults.spectrum,
        };
        options.validate()?;
        Ok(EncodeConfig {
            input_dir,
            output_dir,
            corpus: self.corpus_config(),
            options,
            split_ratio: self.split_ratio.unwrap_or(DEFAULT_SPLIT_RATIO),
            jobs: self.jobs,
            fail_fast: self.fail_fast.unwrap_or(false),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file_override_defaults() {
        let file = ConfigLayer::from_toml(
            r#"
            input_dir = "in"
            output_dir = "out"
            window_length = 32
            encodings = ["mtrp", "frp"]
            seed = 5
            [mixup]
            mode = "fixed"
            fixed_lambda = 0.25
            variants = 3
            "#,
        )
        .unwrap();
        let flags = ConfigLayer {
            window_length: Some(48),
            ..ConfigLayer::default()
        };
        let cfg = ConfigLayer::default()
            .overlay(file)
            .overlay(flags)
            .into_encode_config()
            .unwrap();
        assert_eq!(cfg.options.window_length, 48);
        assert_eq!(cfg.options.seed, 5);
        assert_eq!(cfg.options.mixup.mode, MixupMode::Fixed);
        assert_eq!(cfg.options.mixup.fixed_lambda, 0.25);
        assert_eq!(cfg.options.mix_variants, 3);
        assert_eq!(cfg.split_ratio, 0.7);
        assert_eq!(cfg.input_dir, PathBuf::from("in"));
        assert_eq!(cfg.options.encodings.len(), 2);
    }

    #[test]
    fn rejects_unknown_keys_and_missing_paths() {
        assert!(ConfigLayer::from_toml("colour = 1").is_err());
        assert!(ConfigLayer::from_toml("encodings = [\"gaf\"]").is_err());
        assert!(matches!(ConfigLayer::default().into_encode_config(), Err(Error::Config(_))));
    }

    #[test]
    fn csv_mapping() {
        let layer = ConfigLayer::from_toml(
            r#"
            dataset_kind = "csv"
            [csv]
            x_column = "ax"
            label_field = 1
            label_delimiter = "_"
            sample_rate_hz = 50.0
            "#,
        )
        .unwrap();
        let corpus = layer.corpus_config();
        assert_eq!(corpus.kind, DatasetKind::Csv);
        assert_eq!(corpus.csv.x_column, "ax");
        assert_eq!(
            corpus.csv.label,
            LabelSource::Filename(LabelRule {
                delimiter: '_',
                field: 1
            })
        );
        assert_eq!(corpus.classes, None);
    }
}
