//! Mixup blending `λ a + (1 - λ) b` of two equally sized RGB images.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Beta, Distribution};

use crate::image::RgbImage;
use crate::{round_half_away, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MixupMode {
    /// λ ~ Beta(alpha, beta), drawn from a ChaCha8 stream seeded with `seed`.
    Sampled,
    /// λ = `fixed_lambda`.
    Fixed,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixupParams {
    pub alpha: f64,
    pub beta: f64,
    pub mode: MixupMode,
    pub fixed_lambda: f64,
    pub seed: u64,
}

impl Default for MixupParams {
    fn default() -> Self {
        Self {
            alpha: 1.0,
            beta: 1.0,
            mode: MixupMode::Sampled,
            fixed_lambda: 0.5,
            seed: 0,
        }
    }
}

impl MixupParams {
    pub fn fixed(lambda: f64) -> Self {
        Self {
            mode: MixupMode::Fixed,
            fixed_lambda: lambda,
            ..Self::default()
        }
    }

    pub fn sampled(alpha: f64, beta: f64, seed: u64) -> Self {
        Self {
            alpha,
            beta,
            mode: MixupMode::Sampled,
            seed,
            ..Self::default()
        }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha.is_finite() && self.alpha > 0.0) {
            return Err(Error::InvalidMixupParams("alpha must be positive"));
        }
        if !(self.beta.is_finite() && self.beta > 0.0) {
            return Err(Error::InvalidMixupParams("beta must be positive"));
        }
        if !(0.0..=1.0).contains(&self.fixed_lambda) {
            return Err(Error::InvalidMixupParams("fixed lambda must lie in [0, 1]"));
        }
        Ok(())
    }
}

pub fn sample_lambda(params: &MixupParams) -> Result<f64> {
    params.validate()?;
    match params.mode {
        MixupMode::Fixed => Ok(params.fixed_lambda),
        MixupMode::Sampled => {
            let beta = Beta::new(params.alpha, params.beta)
                .map_err(|_| Error::InvalidMixupParams("invalid beta distribution"))?;
            let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
            Ok(beta.sample(&mut rng).clamp(0.0, 1.0))
        }
    }
}

/// Blends with an explicit λ; every output byte is
/// `round(λ a + (1 - λ) b)` clamped to `[0, 255]`.
pub fn blend_with_lambda(a: &RgbImage, b: &RgbImage, lambda: f64) -> Result<RgbImage> {
    if a.width() != b.width() {
        return Err(Error::DimensionMismatch {
            expected: a.width(),
            found: b.width(),
        });
    }
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::InvalidMixupParams("lambda must lie in [0, 1]"));
    }
    let pixels = a
        .as_bytes()
        .iter()
        .zip(b.as_bytes())
        .map(|(&pa, &pb)| {
            let mixed = lambda * f64::from(pa) + (1.0 - lambda) * f64::from(pb);
            round_half_away(mixed).clamp(0.0, 255.0) as u8
        })
        .collect();
    RgbImage::new(a.width(), pixels)
}

/// Draws λ from `params` and blends. Returns the λ used so it can be recorded.
pub fn mixup_blend(a: &RgbImage, b: &RgbImage, params: &MixupParams) -> Result<(RgbImage, f64)> {
    let lambda = sample_lambda(params)?;
    Ok((blend_with_lambda(a, b, lambda)?, lambda))
}
