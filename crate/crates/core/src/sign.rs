//! Sign rule for modified recurrence plots.
//!
//! A difference vector `d` is negative when its angle to the base vector
//! `v = (1, 1)` exceeds 3π/4, i.e. `cos(d, v) < cos(3π/4) = -1/√2`. The
//! comparison is strict, so vectors exactly on the cone boundary and the zero
//! vector are positive.
//!
//! Since `‖v‖ = √2`, the cosine test reduces to `d·v < -‖d‖`, which is what
//! [`sign_of`] evaluates. That form is exact on the boundary rays
//! `(-1, 0)` and `(0, -1)`, where a floating-point cosine would not be.

use crate::{Error, Result};

pub const BASE_VECTOR: [f64; 2] = [1.0, 1.0];

/// `cos(3π/4)`.
pub const COS_THRESHOLD: f64 = -core::f64::consts::FRAC_1_SQRT_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    #[inline]
    pub fn as_f64(self) -> f64 {
        match self {
            Sign::Positive => 1.0,
            Sign::Negative => -1.0,
        }
    }
}

pub fn sign_of(diff: [f64; 2]) -> Result<Sign> {
    if !(diff[0].is_finite() && diff[1].is_finite()) {
        return Err(Error::NonFiniteInput);
    }
    Ok(sign_unchecked(diff, l2_norm(diff)))
}

#[inline]
pub(crate) fn sign_unchecked(diff: [f64; 2], norm: f64) -> Sign {
    let dot = diff[0] * BASE_VECTOR[0] + diff[1] * BASE_VECTOR[1];
    if dot < -norm {
        Sign::Negative
    } else {
        Sign::Positive
    }
}

#[inline]
pub(crate) fn l2_norm(diff: [f64; 2]) -> f64 {
    libm::sqrt(diff[0] * diff[0] + diff[1] * diff[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(sign_of([1.0, 1.0]), Ok(Sign::Positive));
        assert_eq!(sign_of([-1.0, -1.0]), Ok(Sign::Negative));
        assert_eq!(sign_of([-1.0, 1.0]), Ok(Sign::Positive));
        assert_eq!(sign_of([0.0, 0.0]), Ok(Sign::Positive));
        assert_eq!(sign_of([f64::NAN, 0.0]), Err(Error::NonFiniteInput));
    }

    #[test]
    fn boundary_rays_are_positive() {
        // angle to v is exactly 3π/4
        assert_eq!(sign_of([-1.0, 0.0]), Ok(Sign::Positive));
        assert_eq!(sign_of([0.0, -2.5]), Ok(Sign::Positive));
        // just inside the cone
        assert_eq!(sign_of([-1.0, -1e-9]), Ok(Sign::Negative));
        assert_eq!(sign_of([-1e-9, -1.0]), Ok(Sign::Negative));
    }

    #[test]
    fn threshold_constant() {
        let expected = libm::cos(3.0 * core::f64::consts::PI / 4.0);
        assert!((COS_THRESHOLD - expected).abs() < 1e-15);
    }
}
