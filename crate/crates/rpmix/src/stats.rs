use std::collections::BTreeMap;
use std::fmt::Write;
use std::path::Path;

use serde::Serialize;

use crate::corpus::{discover, load_corpus, CorpusConfig};
use crate::encode::build_pool;
use crate::labels::LabelMap;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassStats {
    pub label: String,
    pub class_id: usize,
    pub episodes: usize,
    pub min_length: usize,
    pub median_length: f64,
    pub max_length: usize,
    pub sample_rate_hz: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SkippedFile {
    pub path: String,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusStats {
    pub classes: Vec<ClassStats>,
    pub total_episodes: usize,
    pub excluded_files: usize,
    pub skipped: Vec<SkippedFile>,
}

fn median(sorted: &[usize]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2] as f64
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) as f64 / 2.0
    }
}

pub fn corpus_stats(input: &Path, config: &CorpusConfig, jobs: Option<usize>) -> Result<CorpusStats> {
    let files = discover(input, config)?;
    let corpus = build_pool(jobs)?.install(|| load_corpus(&files, config));

    let mut by_class: BTreeMap<&str, (Vec<usize>, f64)> = BTreeMap::new();
    for ep in &corpus.episodes {
        let entry = by_class.entry(ep.label.as_str()).or_default();
        entry.0.push(ep.len());
        entry.1 += ep.sample_rate_hz;
    }
    let labels = LabelMap::new(by_class.keys().copied());
    let classes = by_class
        .into_iter()
        .map(|(label, (mut lengths, rate_sum))| {
            lengths.sort_unstable();
            ClassStats {
                label: label.to_owned(),
                class_id: labels.id_of(label).expect("label map built from these keys"),
                episodes: lengths.len(),
                min_length: lengths[0],
                median_length: median(&lengths),
                max_length: lengths[lengths.len() - 1],
                sample_rate_hz: rate_sum / lengths.len() as f64,
            }
        })
        .collect();
    Ok(CorpusStats {
        classes,
        total_episodes: corpus.episodes.len(),
        excluded_files: corpus.excluded,
        skipped: corpus
            .failures
            .iter()
            .map(|f| SkippedFile {
                path: f.path.display().to_string(),
                error: f.error.to_string(),
            })
            .collect(),
    })
}

impl CorpusStats {
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<4} {:<20} {:>8} {:>8} {:>10} {:>8} {:>8}",
            "id", "class", "episodes", "min_len", "median_len", "max_len", "rate_hz"
        );
        for c in &self.classes {
            let _ = writeln!(
                out,
                "{:<4} {:<20} {:>8} {:>8} {:>10.1} {:>8} {:>8.2}",
                c.class_id, c.label, c.episodes, c.min_length, c.median_length, c.max_length, c.sample_rate_hz
            );
        }
        let _ = writeln!(out, "total episodes: {}", self.total_episodes);
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("stats always serialize")
    }
}
