//! JSON-lines dataset manifest: one record per emitted image, image paths
//! relative to the manifest's directory.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EncodingKind {
    /// Unsigned temporal recurrence plot.
    Trp,
    /// Signed (modified) temporal recurrence plot.
    Mtrp,
    /// Signed recurrence plot of the FFT phase sequence.
    Frp,
    /// Mixup of the mtrp and frp images.
    Mix,
}

impl EncodingKind {
    pub const ALL: [EncodingKind; 4] = [Self::Trp, Self::Mtrp, Self::Frp, Self::Mix];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Trp => "trp",
            Self::Mtrp => "mtrp",
            Self::Frp => "frp",
            Self::Mix => "mix",
        }
    }
}

impl fmt::Display for EncodingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for EncodingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str() == s.trim())
            .ok_or_else(|| Error::Config(format!("unknown encoding `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    Train,
    Test,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestRecord {
    pub image_path: String,
    pub label: String,
    pub episode_id: String,
    pub encoding_kind: EncodingKind,
    pub lambda: Option<f64>,
    pub seed: u64,
    pub split: Split,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct DatasetManifest {
    pub records: Vec<ManifestRecord>,
}

impl DatasetManifest {
    pub fn new(records: Vec<ManifestRecord>) -> Self {
        Self { records }
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for record in &self.records {
            out.push_str(&serde_json::to_string(record).expect("manifest records always serialize"));
            out.push('\n');
        }
        out
    }

    pub fn from_jsonl(text: &str, path: &Path) -> Result<Self> {
        let records = text
            .lines()
            .enumerate()
            .filter(|(_, line)| !line.trim().is_empty())
            .map(|(idx, line)| {
                serde_json::from_str(line).map_err(|source| Error::ManifestLine {
                    path: path.to_path_buf(),
                    line: idx + 1,
                    source,
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self { records })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_jsonl(&text, path)
    }

    /// Writes to a temporary sibling and renames it over `path`, so readers
    /// never observe a partial manifest.
    pub fn write_atomic(&self, path: &Path) -> Result<()> {
        let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
        let name = path
            .file_name()
            .ok_or_else(|| Error::Config(format!("{} is not a file path", path.display())))?;
        let tmp = dir.join(format!(".{}.tmp", name.to_string_lossy()));
        {
            let mut file = fs::File::create(&tmp).map_err(|e| Error::io(&tmp, e))?;
            file.write_all(self.to_jsonl().as_bytes())
                .and_then(|_| file.sync_all())
                .map_err(|e| Error::io(&tmp, e))?;
        }
        fs::rename(&tmp, path).map_err(|e| Error::io(path, e))
    }

    pub fn check_unique_paths(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for r in &self.records {
            if !seen.insert(r.image_path.as_str()) {
                return Err(Error::ManifestInvariant(format!(
                    "image path `{}` listed twice",
                    r.image_path
                )));
            }
        }
        Ok(())
    }

    pub fn check_files_exist(&self, base_dir: &Path) -> Result<()> {
        match self.records.iter().find(|r| !base_dir.join(&r.image_path).is_file()) {
            Some(r) => Err(Error::ManifestInvariant(format!(
                "`{}` does not exist",
                r.image_path
            ))),
            None => Ok(()),
        }
    }

    /// Every image of an episode must sit in the same split, under one label.
    pub fn check_no_leakage(&self) -> Result<()> {
        let mut by_episode: BTreeMap<&str, (&str, Split)> = BTreeMap::new();
        for r in &self.records {
            let entry = by_episode
                .entry(r.episode_id.as_str())
                .or_insert((r.label.as_str(), r.split));
            if entry.1 != r.split {
                return Err(Error::ManifestInvariant(format!(
                    "episode `{}` appears in both splits",
                    r.episode_id
                )));
            }
            if entry.0 != r.label {
                return Err(Error::ManifestInvariant(format!(
                    "episode `{}` carries two labels",
                    r.episode_id
                )));
            }
        }
        Ok(())
    }

    pub fn validate(&self, base_dir: &Path) -> Result<()> {
        self.check_unique_paths()?;
        self.check_no_leakage()?;
        self.check_files_exist(base_dir)
    }

    /// `(label, split) -> distinct episode count`.
    pub fn episode_counts(&self) -> BTreeMap<(String, Split), usize> {
        let episodes: BTreeSet<(&str, &str, Split)> = self
            .records
            .iter()
            .map(|r| (r.label.as_str(), r.episode_id.as_str(), r.split))
            .collect();
        let mut counts = BTreeMap::new();
        for (label, _, split) in episodes {
            *counts.entry((label.to_owned(), split)).or_insert(0) += 1;
        }
        counts
    }
}
