//! Corpus discovery and parsing shared by `encode` and `stats`.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use walkdir::WalkDir;

use crate::adl::{parse_adl_file, AdlConfig, ADL_CLASSES};
use crate::csv_input::{parse_csv_episode, CsvConfig};
use crate::episode::Episode;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DatasetKind {
    Adl,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusConfig {
    pub kind: DatasetKind,
    pub adl: AdlConfig,
    pub csv: CsvConfig,
    /// Episodes with labels outside this set are left out. `None` keeps all.
    pub classes: Option<Vec<String>>,
}

impl CorpusConfig {
    pub fn new(kind: DatasetKind) -> Self {
        let classes = match kind {
            DatasetKind::Adl => Some(ADL_CLASSES.iter().map(|c| c.to_string()).collect()),
            DatasetKind::Csv => None,
        };
        Self {
            kind,
            adl: AdlConfig::default(),
            csv: CsvConfig::default(),
            classes,
        }
    }

    pub fn accepts(&self, label: &str) -> bool {
        self.classes
            .as_ref()
            .is_none_or(|classes| classes.iter().any(|c| c == label))
    }
}

/// A file that could not be turned into an episode.
#[derive(Debug)]
pub struct FileFailure {
    pub path: PathBuf,
    pub error: Error,
}

/// Lists candidate episode files under `root`, sorted by path.
pub fn discover(root: &Path, config: &CorpusConfig) -> Result<Vec<PathBuf>> {
    if !root.is_dir() {
        return Err(Error::io(
            root,
            std::io::Error::new(std::io::ErrorKind::NotFound, "input directory not found"),
        ));
    }
    let extension = match config.kind {
        DatasetKind::Adl => "txt",
        DatasetKind::Csv => "csv",
    };
    let excluded_suffix = match config.kind {
        DatasetKind::Adl => config.adl.exclude_dir_suffix.as_deref(),
        DatasetKind::Csv => None,
    };
    let prefix = match config.kind {
        DatasetKind::Adl => config.adl.file_prefix.as_deref(),
        DatasetKind::Csv => None,
    };
    let walker = WalkDir::new(root).sort_by_file_name().into_iter().filter_entry(|entry| {
        !(entry.depth() > 0
            && entry.file_type().is_dir()
            && excluded_suffix.is_some_and(|s| entry.file_name().to_string_lossy().ends_with(s)))
    });
    let mut files = Vec::new();
    for entry in walker {
        let entry = entry.map_err(|e| {
            let path = e.path().unwrap_or(root).to_path_buf();
            Error::io(path, e.into())
        })?;
        if !entry.file_type().is_file() {
            continue;
        }
        let path = entry.path();
        let ext_ok = path
            .extension()
            .is_some_and(|e| e.eq_ignore_ascii_case(extension));
        let prefix_ok = prefix.is_none_or(|p| entry.file_name().to_string_lossy().starts_with(p));
        if ext_ok && prefix_ok {
            files.push(path.to_path_buf());
        }
    }
    files.sort();
    Ok(files)
}

/// Parses one file. `Ok(None)` means the episode's class is not configured.
pub fn load_episode(path: &Path, config: &CorpusConfig) -> Result<Option<Episode>> {
    let episode = match config.kind {
        DatasetKind::Adl => parse_adl_file(path, &config.adl)?,
        DatasetKind::Csv => parse_csv_episode(path, &config.csv)?,
    };
    Ok(config.accepts(&episode.label).then_some(episode))
}

#[derive(Debug, Default)]
pub struct LoadedCorpus {
    pub episodes: Vec<Episode>,
    pub failures: Vec<FileFailure>,
    /// Files parsed fine but whose class is not configured.
    pub excluded: usize,
}

/// Parses every file in parallel on the current rayon pool; results keep the
/// sorted file order.
pub fn load_corpus(files: &[PathBuf], config: &CorpusConfig) -> LoadedCorpus {
    let results: Vec<_> = files.par_iter().map(|p| (p, load_episode(p, config))).collect();
    let mut corpus = LoadedCorpus::default();
    for (path, result) in results {
        match result {
            Ok(Some(ep)) => corpus.episodes.push(ep),
            Ok(None) => corpus.excluded += 1,
            Err(error) => corpus.failures.push(FileFailure {
                path: path.clone(),
                error,
            }),
        }
    }
    corpus
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    #[test]
    fn discovery_filters_and_sorts() {
        let dir = tempfile::tempdir().unwrap();
        let root = dir.path();
        fs::create_dir_all(root.join("Walk")).unwrap();
        fs::create_dir_all(root.join("Walk_MODEL")).unwrap();
        fs::write(root.join("Walk/Accelerometer-2011-01-01-00-00-02-walk-m1.txt"), "1 2 3\n").unwrap();
        fs::write(root.join("Walk/Accelerometer-2011-01-01-00-00-01-walk-m1.txt"), "1 2 3\n").unwrap();
        fs::write(root.join("Walk_MODEL/Accelerometer-2011-01-01-00-00-03-walk-m1.txt"), "1 2 3\n").unwrap();
        fs::write(root.join("README.txt"), "hello").unwrap();
        fs::write(root.join("Walk/notes.csv"), "x").unwrap();
        let files = discover(root, &CorpusConfig::new(DatasetKind::Adl)).unwrap();
        let names: Vec<_> = files
            .iter()
            .map(|p| p.file_name().unwrap().to_string_lossy().into_owned())
            .collect();
        assert_eq!(
            names,
            [
                "Accelerometer-2011-01-01-00-00-01-walk-m1.txt",
                "Accelerometer-2011-01-01-00-00-02-walk-m1.txt"
            ]
        );
        assert_eq!(discover(root, &CorpusConfig::new(DatasetKind::Csv)).unwrap().len(), 1);
        assert!(discover(&root.join("missing"), &CorpusConfig::new(DatasetKind::Adl)).is_err());
    }

    #[test]
    fn unconfigured_classes_are_excluded() {
        let dir = tempfile::tempdir().unwrap();
        let keep = dir.path().join("Accelerometer-2011-01-01-00-00-01-walk-m1.txt");
        let drop = dir.path().join("Accelerometer-2011-01-01-00-00-01-brush_teeth-m1.txt");
        let bad = dir.path().join("Accelerometer-2011-01-01-00-00-02-walk-m1.txt");
        fs::write(&keep, "1 2 3\n4 5 6\n7 8 9\n").unwrap();
        fs::write(&drop, "1 2 3\n4 5 6\n7 8 9\n").unwrap();
        fs::write(&bad, "1 2\n").unwrap();
        let corpus = load_corpus(&[keep, drop, bad.clone()], &CorpusConfig::new(DatasetKind::Adl));
        assert_eq!(corpus.episodes.len(), 1);
        assert_eq!(corpus.excluded, 1);
        assert_eq!(corpus.failures.len(), 1);
        assert_eq!(corpus.failures[0].path, bad);
    }
}
