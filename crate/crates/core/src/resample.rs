use alloc::vec::Vec;

use crate::{Error, Result};

/// Piecewise-linear resampling onto `len` equally spaced points spanning the
/// source index range `[0, n - 1]`.
///
/// Endpoints are reproduced bit-exactly, and `len == n` returns the input
/// unchanged.
pub fn resample_linear(samples: &[f64], len: usize) -> Result<Vec<f64>> {
    if len < 3 {
        return Err(Error::InvalidLength { len });
    }
    let n = samples.len();
    match n {
        0 => return Err(Error::EmptyInput),
        1 => return Ok(alloc::vec![samples[0]; len]),
        _ => {}
    }
    let last = (n - 1) as f64;
    let steps = (len - 1) as f64;
    Ok((0..len)
        .map(|i| {
            // i * (n-1) is an exact integer product, so i = len-1 lands on n-1.
            let t = (i as f64 * last) / steps;
            let lo = t as usize;
            if lo >= n - 1 {
                return samples[n - 1];
            }
            let frac = t - lo as f64;
            if frac == 0.0 {
                samples[lo]
            } else {
                samples[lo] + frac * (samples[lo + 1] - samples[lo])
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn examples() {
        assert_eq!(resample_linear(&[0.0, 2.0], 3).unwrap(), vec![0.0, 1.0, 2.0]);
        let src = [0.3, -1.7, 5.25, 8.0, 1e-3];
        assert_eq!(resample_linear(&src, 5).unwrap(), src.to_vec());
        assert_eq!(
            resample_linear(&[0.0, 1.0, 4.0, 9.0], 7).unwrap(),
            vec![0.0, 0.5, 1.0, 2.5, 4.0, 6.5, 9.0]
        );
    }

    #[test]
    fn endpoints_and_errors() {
        let src: Vec<f64> = (0..313).map(|i| libm::sin(i as f64 * 0.1) * 17.3).collect();
        let out = resample_linear(&src, 64).unwrap();
        assert_eq!(out[0], src[0]);
        assert_eq!(out[63], src[312]);
        assert_eq!(resample_linear(&src, 2), Err(Error::InvalidLength { len: 2 }));
        assert_eq!(resample_linear(&[], 5), Err(Error::EmptyInput));
        assert_eq!(resample_linear(&[4.0], 3).unwrap(), vec![4.0; 3]);
    }
}
