use alloc::vec::Vec;

use crate::{Error, Result};

/// Accelerometer axis, or a plain channel index for other sensors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChannelId {
    X,
    Y,
    Z,
    Index(usize),
}

/// A fixed-length single-channel window of finite samples (N >= 3).
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeriesWindow {
    samples: Vec<f64>,
    sample_rate_hz: f64,
    channel: ChannelId,
}

impl TimeSeriesWindow {
    pub fn new(samples: Vec<f64>, sample_rate_hz: f64, channel: ChannelId) -> Result<Self> {
        check_samples(&samples)?;
        if !(sample_rate_hz.is_finite() && sample_rate_hz > 0.0) {
            return Err(Error::InvalidSampleRate(sample_rate_hz));
        }
        Ok(Self {
            samples,
            sample_rate_hz,
            channel,
        })
    }

    /// Window with a nominal 1 Hz rate and channel index 0.
    pub fn from_samples(samples: Vec<f64>) -> Result<Self> {
        Self::new(samples, 1.0, ChannelId::Index(0))
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn sample_rate_hz(&self) -> f64 {
        self.sample_rate_hz
    }

    pub fn channel(&self) -> ChannelId {
        self.channel
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }
}

pub(crate) fn check_samples(samples: &[f64]) -> Result<()> {
    if samples.len() < 3 {
        return Err(Error::WindowTooShort { len: samples.len() });
    }
    if let Some(index) = samples.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFiniteSample { index });
    }
    Ok(())
}
