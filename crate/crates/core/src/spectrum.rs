use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::fft::dft_real;
use crate::window::TimeSeriesWindow;
use crate::{Error, Result};

/// Principal-value phase angles of every DFT bin of a window, in `(-π, π]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseSpectrum {
    phases: Vec<f64>,
}

impl PhaseSpectrum {
    /// Wraps an explicit phase sequence (length >= 3, finite).
    pub fn from_phases(phases: Vec<f64>) -> Result<Self> {
        if phases.len() < 3 {
            return Err(Error::SpectrumTooShort { len: phases.len() });
        }
        if let Some(index) = phases.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteSample { index });
        }
        Ok(Self { phases })
    }

    #[cfg(test)]
    pub(crate) fn from_phases_unchecked(phases: Vec<f64>) -> Self {
        Self { phases }
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    pub fn into_phases(self) -> Vec<f64> {
        self.phases
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumOptions {
    /// Bins whose magnitude is at most `relative_floor * max_magnitude` get
    /// phase 0; their angle is rounding noise.
    pub relative_floor: f64,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        Self {
            relative_floor: 1e-12,
        }
    }
}

pub fn phase_spectrum(window: &TimeSeriesWindow) -> PhaseSpectrum {
    phase_spectrum_with(window, &SpectrumOptions::default())
}

pub fn phase_spectrum_with(window: &TimeSeriesWindow, options: &SpectrumOptions) -> PhaseSpectrum {
    let bins = dft_real(window.samples());
    let max_magnitude = bins.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let floor = options.relative_floor * max_magnitude;
    let phases = bins
        .iter()
        .map(|c| {
            if c.norm() <= floor {
                return 0.0;
            }
            let phase = libm::atan2(c.im, c.re);
            if phase == -PI {
                PI
            } else if phase == 0.0 {
                // drop the sign of -0.0
                0.0
            } else {
                phase
            }
        })
        .collect();
    PhaseSpectrum { phases }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use core::f64::consts::FRAC_PI_2;

    fn phases(samples: &[f64]) -> Vec<f64> {
        phase_spectrum(&TimeSeriesWindow::from_samples(samples.to_vec()).unwrap()).into_phases()
    }

    #[test]
    fn examples() {
        assert_eq!(phases(&[1.0, 0.0, 0.0, 0.0]), vec![0.0; 4]);
        assert_eq!(phases(&[0.0, 1.0, 0.0, 0.0]), vec![0.0, -FRAC_PI_2, PI, FRAC_PI_2]);
        assert_eq!(phases(&[2.5; 4]), vec![0.0; 4]);
    }

    #[test]
    fn constant_non_power_of_two_is_clamped() {
        assert_eq!(phases(&[3.0; 7]), vec![0.0; 7]);
        assert_eq!(phases(&[0.0; 5]), vec![0.0; 5]);
    }

    #[test]
    fn principal_range() {
        let samples: Vec<f64> = (0..37).map(|i| libm::cos(i as f64 * 1.3) - 0.2 * i as f64).collect();
        for p in phases(&samples) {
            assert!(p > -PI && p <= PI);
        }
    }

    #[test]
    fn floor_is_configurable() {
        let window = TimeSeriesWindow::from_samples(vec![1.0, 0.0, 0.0, 0.0, 1e-3]).unwrap();
        let all = phase_spectrum_with(&window, &SpectrumOptions { relative_floor: 2.0 });
        assert!(all.phases().iter().all(|&p| p == 0.0));
    }
}
