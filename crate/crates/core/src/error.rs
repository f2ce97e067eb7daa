use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("window has {len} samples, at least 3 are required")]
    WindowTooShort { len: usize },
    #[error("sample {index} is not finite")]
    NonFiniteSample { index: usize },
    #[error("sample rate must be a positive finite number, got {0}")]
    InvalidSampleRate(f64),
    #[error("trajectory has {len} states, at least 2 are required")]
    TrajectoryTooShort { len: usize },
    #[error("difference vector is not finite")]
    NonFiniteInput,
    #[error("phase spectrum has {len} bins, at least 3 are required")]
    SpectrumTooShort { len: usize },
    #[error("matrix entry {index} is not finite")]
    NonFiniteEntry { index: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("channel matrices have different kinds")]
    KindMismatch,
    #[error("matrix invariant violated: {0}")]
    InvariantViolation(&'static str),
    #[error("invalid mixup parameters: {0}")]
    InvalidMixupParams(&'static str),
    #[error("invalid target length {len}, at least 3 is required")]
    InvalidLength { len: usize },
    #[error("input sequence is empty")]
    EmptyInput,
}
