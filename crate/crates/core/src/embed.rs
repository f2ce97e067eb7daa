//! Two-dimensional delay embedding with unit delay: `s_j = (x_j, x_{j+1})`.

use alloc::vec::Vec;

use crate::window::{check_samples, TimeSeriesWindow};
use crate::{Error, Result};

/// Sequence of 2-D phase-space states. Always holds at least two states.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseTrajectory {
    states: Vec<[f64; 2]>,
}

impl PhaseTrajectory {
    /// Builds a trajectory from explicit states.
    pub fn from_states(states: Vec<[f64; 2]>) -> Result<Self> {
        if states.len() < 2 {
            return Err(Error::TrajectoryTooShort { len: states.len() });
        }
        if let Some(index) = states
            .iter()
            .position(|s| !(s[0].is_finite() && s[1].is_finite()))
        {
            return Err(Error::NonFiniteSample { index });
        }
        Ok(Self { states })
    }

    /// Delay-embeds a raw sample sequence, validating it like a window.
    pub fn from_samples(samples: &[f64]) -> Result<Self> {
        check_samples(samples)?;
        Ok(Self {
            states: embed_pairs(samples),
        })
    }

    pub fn states(&self) -> &[[f64; 2]] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }
}

pub fn delay_embed(window: &TimeSeriesWindow) -> PhaseTrajectory {
    PhaseTrajectory {
        states: embed_pairs(window.samples()),
    }
}

fn embed_pairs(samples: &[f64]) -> Vec<[f64; 2]> {
    samples.windows(2).map(|w| [w[0], w[1]]).collect()
}
