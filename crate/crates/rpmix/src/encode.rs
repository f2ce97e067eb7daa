//! Episode → recurrence-plot images → PNGs → manifest.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use rpmix_core::{
    blend_with_lambda, delay_embed, derive_seed, modified_rp_frequency, modified_rp_temporal,
    phase_spectrum_with, sample_lambda, stack_rgb, unsigned_rp, ChannelId, ChannelMatrixTriple,
    MixupParams, RgbImage, SignedRecurrenceMatrix, SpectrumOptions, TimeSeriesWindow,
};

use crate::corpus::{discover, load_episode, CorpusConfig, FileFailure};
use crate::episode::{resample_to_length, Episode};
use crate::manifest::{DatasetManifest, EncodingKind, ManifestRecord};
use crate::png_io::write_png;
use crate::split::assign_splits;
use crate::{Error, Result};

pub const MANIFEST_FILE: &str = "manifest.jsonl";
pub const IMAGE_DIR: &str = "images";

#[derive(Debug, Clone, PartialEq)]
pub struct EncodeOptions {
    pub window_length: usize,
    pub encodings: BTreeSet<EncodingKind>,
    pub mixup: MixupParams,
    pub mix_variants: usize,
    pub seed: u64,
    pub spectrum: SpectrumOptions,
}

impl Default for EncodeOptions {
    fn default() -> Self {
        Self {
            window_length: 64,
            encodings: [EncodingKind::Mtrp, EncodingKind::Frp, EncodingKind::Mix].into(),
            mixup: MixupParams::default(),
            mix_variants: 1,
            seed: 0,
            spectrum: SpectrumOptions::default(),
        }
    }
}

impl EncodeOptions {
    pub fn validate(&self) -> Result<()> {
        if self.window_length < 3 {
            return Err(Error::Config(format!(
                "window length must be at least 3, got {}",
                self.window_length
            )));
        }
        if self.encodings.is_empty() {
            return Err(Error::Config("no encodings selected".into()));
        }
        if self.encodings.contains(&EncodingKind::Mix) && self.mix_variants == 0 {
            return Err(Error::Config("mix needs at least one variant".into()));
        }
        self.mixup.validate()?;
        Ok(())
    }
}

/// One encoded image, before it is written.
#[derive(Debug, Clone, PartialEq)]
pub struct EncodedImage {
    pub kind: EncodingKind,
    /// `trp`, `mtrp`, `frp` or `mix<k>`.
    pub tag: String,
    pub image: RgbImage,
    pub lambda: Option<f64>,
    pub seed: u64,
}

impl EncodedImage {
    pub fn file_name(&self, episode_id: &str) -> String {
        format!("{episode_id}__{}.png", self.tag)
    }
}

fn channel_windows(episode: &Episode) -> Result<[TimeSeriesWindow; 3]> {
    let ids = [ChannelId::X, ChannelId::Y, ChannelId::Z];
    let [x, y, z] = [0, 1, 2].map(|i| {
        TimeSeriesWindow::new(episode.channels[i].clone(), episode.sample_rate_hz, ids[i])
    });
    Ok([x?, y?, z?])
}

fn stack(matrices: [SignedRecurrenceMatrix; 3]) -> Result<RgbImage> {
    let [x, y, z] = matrices;
    Ok(stack_rgb(&ChannelMatrixTriple::new(x, y, z)?)?)
}

/// Resamples the episode and produces every requested image, in the order
/// trp, mtrp, frp, mix0..mixK-1.
pub fn encode_episode(episode: &Episode, options: &EncodeOptions) -> Result<Vec<EncodedImage>> {
    let resampled = resample_to_length(episode, options.window_length)?;
    let windows = channel_windows(&resampled)?;
    let wants = |k| options.encodings.contains(&k);
    let need_mix = wants(EncodingKind::Mix);
    let mut out = Vec::new();

    if wants(EncodingKind::Trp) {
        let image = stack(windows.each_ref().map(|w| unsigned_rp(&delay_embed(w))))?;
        out.push(plain(EncodingKind::Trp, image, options.seed));
    }
    let mtrp = if wants(EncodingKind::Mtrp) || need_mix {
        Some(stack(windows.each_ref().map(|w| modified_rp_temporal(&delay_embed(w))))?)
    } else {
        None
    };
    if let (true, Some(image)) = (wants(EncodingKind::Mtrp), &mtrp) {
        out.push(plain(EncodingKind::Mtrp, image.clone(), options.seed));
    }
    let frp = if wants(EncodingKind::Frp) || need_mix {
        let [x, y, z] = windows.each_ref().map(|w| {
            modified_rp_frequency(&phase_spectrum_with(w, &options.spectrum))
        });
        Some(stack([x?, y?, z?])?)
    } else {
        None
    };
    if let (true, Some(image)) = (wants(EncodingKind::Frp), &frp) {
        out.push(plain(EncodingKind::Frp, image.clone(), options.seed));
    }
    if let (true, Some(temporal), Some(frequency)) = (need_mix, &mtrp, &frp) {
        for k in 0..options.mix_variants {
            let seed = derive_seed(options.seed, &episode.id, k as u64);
            let lambda = sample_lambda(&options.mixup.with_seed(seed))?;
            out.push(EncodedImage {
                kind: EncodingKind::Mix,
                tag: format!("mix{k}"),
                image: blend_with_lambda(temporal, frequency, lambda)?,
                lambda: Some(lambda),
                seed,
            });
        }
    }
    Ok(out)
}

fn plain(kind: EncodingKind, image: RgbImage, seed: u64) -> EncodedImage {
    EncodedImage {
        kind,
        tag: kind.as_str().to_owned(),
        image,
        lambda: None,
        seed,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EncodeConfig {
    pub input_dir: PathBuf,
    pub output_dir: PathBuf,
    pub corpus: CorpusConfig,
    pub options: EncodeOptions,
    pub split_ratio: f64,
    /// Worker threads; `None` uses every available core.
    pub jobs: Option<usize>,
    pub fail_fast: bool,
}

#[derive(Debug)]
pub struct EncodeReport {
    pub manifest_path: PathBuf,
    pub episodes: usize,
    pub images: usize,
    pub excluded: usize,
    pub failures: Vec<FileFailure>,
}

struct WrittenImage {
    kind: EncodingKind,
    rel_path: String,
    lambda: Option<f64>,
    seed: u64,
}

struct EpisodeOutput {
    id: String,
    label: String,
    images: Vec<WrittenImage>,
}

fn process_file(path: &Path, config: &EncodeConfig, image_dir: &Path) -> Result<Option<EpisodeOutput>> {
    let Some(episode) = load_episode(path, &config.corpus)? else {
        return Ok(None);
    };
    let encoded = encode_episode(&episode, &config.options).map_err(|e| match e {
        Error::Core(source) => Error::Episode {
            path: path.to_path_buf(),
            source,
        },
        other => other,
    })?;
    let mut images = Vec::with_capacity(encoded.len());
    for img in encoded {
        let name = img.file_name(&episode.id);
        write_png(&img.image, &image_dir.join(&name))?;
        images.push(WrittenImage {
            kind: img.kind,
            rel_path: format!("{IMAGE_DIR}/{name}"),
            lambda: img.lambda,
            seed: img.seed,
        });
    }
    Ok(Some(EpisodeOutput {
        id: episode.id,
        label: episode.label,
        images,
    }))
}

pub fn build_pool(jobs: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        if n == 0 {
            return Err(Error::Config("--jobs must be at least 1".into()));
        }
        builder = builder.num_threads(n);
    }
    builder
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))
}

/// Runs the whole pipeline. Bad files are collected in the report unless
/// `fail_fast` is set, in which case the first one (in path order) is
/// returned as the error. The manifest is written last.
pub fn run_encode(config: &EncodeConfig) -> Result<EncodeReport> {
    config.options.validate()?;
    if !(config.split_ratio > 0.0 && config.split_ratio < 1.0) {
        return Err(Error::InvalidRatio(config.split_ratio));
    }
    let files = discover(&config.input_dir, &config.corpus)?;
    if files.is_empty() {
        return Err(Error::NoEpisodes);
    }

    // Two files with the same stem would write the same PNG paths.
    let mut failures = Vec::new();
    let mut seen = BTreeSet::new();
    let mut unique = Vec::with_capacity(files.len());
    for path in files {
        let id = crate::adl::episode_id(&path)?;
        if seen.insert(id.clone()) {
            unique.push(path);
        } else {
            failures.push(FileFailure {
                path,
                error: Error::DuplicateEpisode { id },
            });
        }
    }

    let image_dir = config.output_dir.join(IMAGE_DIR);
    fs::create_dir_all(&image_dir).map_err(|e| Error::io(&image_dir, e))?;

    let pool = build_pool(config.jobs)?;
    let results: Vec<_> = pool.install(|| {
        unique
            .par_iter()
            .map(|path| (path, process_file(path, config, &image_dir)))
            .collect()
    });

    let mut outputs = Vec::new();
    let mut excluded = 0;
    for (path, result) in results {
        match result {
            Ok(Some(out)) => outputs.push(out),
            Ok(None) => excluded += 1,
            Err(error) => failures.push(FileFailure {
                path: path.clone(),
                error,
            }),
        }
    }
    failures.sort_by(|a, b| a.path.cmp(&b.path));
    if config.fail_fast && !failures.is_empty() {
        return Err(failures.swap_remove(0).error);
    }
    if outputs.is_empty() {
        return Err(Error::NoEpisodes);
    }
    outputs.sort_by(|a, b| a.id.cmp(&b.id));

    let splits = assign_splits(
        outputs.iter().map(|o| (o.id.as_str(), o.label.as_str())),
        config.split_ratio,
        config.options.seed,
    )?;
    let records: Vec<ManifestRecord> = outputs
        .iter()
        .flat_map(|o| {
            let split = splits[&o.id];
            o.images.iter().map(move |img| ManifestRecord {
                image_path: img.rel_path.clone(),
                label: o.label.clone(),
                episode_id: o.id.clone(),
                encoding_kind: img.kind,
                lambda: img.lambda,
                seed: img.seed,
                split,
            })
        })
        .collect();
    let manifest = DatasetManifest::new(records);
    manifest.validate(&config.output_dir)?;
    let manifest_path = config.output_dir.join(MANIFEST_FILE);
    manifest.write_atomic(&manifest_path)?;

    Ok(EncodeReport {
        manifest_path,
        episodes: outputs.len(),
        images: manifest.len(),
        excluded,
        failures,
    })
}

/// Per-class episode totals of a finished manifest, for reporting.
pub fn class_totals(manifest: &DatasetManifest) -> BTreeMap<String, usize> {
    let mut totals = BTreeMap::new();
    for ((label, _), n) in manifest.episode_counts() {
        *totals.entry(label).or_insert(0) += n;
    }
    totals
}

#[cfg(test)]
mod tests {
    use super::*;

    fn episode() -> Episode {
        let n = 150;
        let x: Vec<f64> = (0..n).map(|i| (i as f64 * 0.2).sin() * 10.0 + 30.0).collect();
        let y: Vec<f64> = (0..n).map(|i| (i as f64 * 0.05).cos() * 5.0 + 20.0).collect();
        let z: Vec<f64> = (0..n).map(|i| (i % 7) as f64).collect();
        Episode::new("ep-1", "walk", [x, y, z], 32.0, "ep-1.txt").unwrap()
    }

    #[test]
    fn produces_requested_images_in_order() {
        let options = EncodeOptions {
            encodings: EncodingKind::ALL.into(),
            mix_variants: 2,
            ..EncodeOptions::default()
        };
        let images = encode_episode(&episode(), &options).unwrap();
        let tags: Vec<_> = images.iter().map(|i| i.tag.as_str()).collect();
        assert_eq!(tags, ["trp", "mtrp", "frp", "mix0", "mix1"]);
        assert!(images.iter().all(|i| i.image.width() == 63));
        assert_ne!(images[3].lambda, images[4].lambda);
        assert_eq!(images[0].file_name("ep-1"), "ep-1__trp.png");
    }

    #[test]
    fn mix_alone_still_blends_temporal_and_frequency() {
        let options = EncodeOptions {
            encodings: [EncodingKind::Mix].into(),
            mixup: MixupParams::fixed(1.0),
            ..EncodeOptions::default()
        };
        let mix = encode_episode(&episode(), &options).unwrap();
        assert_eq!(mix.len(), 1);
        let mtrp = encode_episode(
            &episode(),
            &EncodeOptions {
                encodings: [EncodingKind::Mtrp].into(),
                ..EncodeOptions::default()
            },
        )
        .unwrap();
        // λ = 1 keeps only the temporal image
        assert_eq!(mix[0].image, mtrp[0].image);
        assert_eq!(mix[0].lambda, Some(1.0));
    }

    #[test]
    fn options_are_validated() {
        let empty = EncodeOptions {
            encodings: BTreeSet::new(),
            ..EncodeOptions::default()
        };
        assert!(matches!(empty.validate(), Err(Error::Config(_))));
        let short = EncodeOptions {
            window_length: 2,
            ..EncodeOptions::default()
        };
        assert!(short.validate().is_err());
    }
}
