//! Pure numeric core: delay embedding, the signed recurrence-plot rule,
//! temporal and frequency-domain recurrence matrices, FFT phase spectra,
//! RGB channel stacking and mixup blending.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of its inputs, so it can be called from any number of threads.

#![no_std]

extern crate alloc;

mod error;
pub mod embed;
pub mod fft;
pub mod image;
pub mod mixup;
pub mod recurrence;
pub mod resample;
pub mod seed;
pub mod sign;
pub mod spectrum;
pub mod window;

pub use embed::{delay_embed, PhaseTrajectory};
pub use error::Error;
pub use image::{normalize_channel, normalize_plane, stack_rgb, ChannelMatrixTriple, ChannelPlane, RgbImage};
pub use mixup::{blend_with_lambda, mixup_blend, sample_lambda, MixupMode, MixupParams};
pub use recurrence::{modified_rp_frequency, modified_rp_temporal, unsigned_rp, MatrixKind, SignedRecurrenceMatrix};
pub use resample::resample_linear;
pub use seed::derive_seed;
pub use sign::{sign_of, Sign, BASE_VECTOR, COS_THRESHOLD};
pub use spectrum::{phase_spectrum, phase_spectrum_with, PhaseSpectrum, SpectrumOptions};
pub use window::{ChannelId, TimeSeriesWindow};

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Rounds half away from zero. Every pixel value in this crate goes through
/// this function so encoded images are byte-stable.
#[inline]
pub fn round_half_away(value: f64) -> f64 {
    libm::round(value)
}
