use std::path::PathBuf;

use rpmix_core::resample_linear;

use crate::{Error, Result};

/// One pre-segmented, labeled tri-axial recording.
#[derive(Debug, Clone, PartialEq)]
pub struct Episode {
    pub id: String,
    pub label: String,
    /// x, y, z, all the same length (>= 3).
    pub channels: [Vec<f64>; 3],
    pub sample_rate_hz: f64,
    pub source_path: PathBuf,
}

impl Episode {
    pub fn new(
        id: impl Into<String>,
        label: impl Into<String>,
        channels: [Vec<f64>; 3],
        sample_rate_hz: f64,
        source_path: impl Into<PathBuf>,
    ) -> Result<Self> {
        let episode = Self {
            id: id.into(),
            label: label.into(),
            channels,
            sample_rate_hz,
            source_path: source_path.into(),
        };
        episode.validate()?;
        Ok(episode)
    }

    pub fn len(&self) -> usize {
        self.channels[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn validate(&self) -> Result<()> {
        if self.id.is_empty() {
            return Err(Error::InvalidEpisode("empty episode id".into()));
        }
        if self.label.is_empty() {
            return Err(Error::InvalidEpisode(format!("{}: empty label", self.id)));
        }
        let n = self.channels[0].len();
        if self.channels.iter().any(|c| c.len() != n) {
            return Err(Error::InvalidEpisode(format!("{}: channel lengths differ", self.id)));
        }
        if n < 3 {
            return Err(Error::InvalidEpisode(format!(
                "{}: {n} samples, at least 3 are required",
                self.id
            )));
        }
        if !(self.sample_rate_hz.is_finite() && self.sample_rate_hz > 0.0) {
            return Err(Error::InvalidEpisode(format!("{}: bad sample rate", self.id)));
        }
        Ok(())
    }
}

/// Linearly resamples every channel onto `len` points. The nominal sample
/// rate is rescaled so the episode keeps its duration.
pub fn resample_to_length(episode: &Episode, len: usize) -> Result<Episode> {
    let [x, y, z] = &episode.channels;
    let channels = [
        resample_linear(x, len)?,
        resample_linear(y, len)?,
        resample_linear(z, len)?,
    ];
    let rate = episode.sample_rate_hz * (len - 1) as f64 / (episode.len() - 1) as f64;
    Ok(Episode {
        channels,
        sample_rate_hz: rate,
        ..episode.clone()
    })
}
