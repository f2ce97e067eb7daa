//! Per-channel min-max normalization and RGB stacking.

use alloc::vec::Vec;

use crate::recurrence::SignedRecurrenceMatrix;
use crate::{round_half_away, Error, Result};

/// One 8-bit channel of a square image, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChannelPlane {
    side: usize,
    values: Vec<u8>,
}

impl ChannelPlane {
    pub fn side(&self) -> usize {
        self.side
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }
}

/// Square 8-bit RGB image, row-major, three bytes per pixel.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RgbImage {
    side: usize,
    pixels: Vec<u8>,
}

impl RgbImage {
    pub fn new(side: usize, pixels: Vec<u8>) -> Result<Self> {
        if side == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if pixels.len() != side * side * 3 {
            return Err(Error::DimensionMismatch {
                expected: side * side * 3,
                found: pixels.len(),
            });
        }
        Ok(Self { side, pixels })
    }

    pub fn filled(side: usize, rgb: [u8; 3]) -> Result<Self> {
        let pixels = rgb.iter().copied().cycle().take(side * side * 3).collect();
        Self::new(side, pixels)
    }

    pub fn width(&self) -> usize {
        self.side
    }

    pub fn height(&self) -> usize {
        self.side
    }

    pub fn pixel(&self, x: usize, y: usize) -> [u8; 3] {
        let at = (y * self.side + x) * 3;
        [self.pixels[at], self.pixels[at + 1], self.pixels[at + 2]]
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.pixels
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.pixels
    }
}

/// Three same-kind, same-size matrices, one per accelerometer axis.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelMatrixTriple {
    channels: [SignedRecurrenceMatrix; 3],
}

impl ChannelMatrixTriple {
    pub fn new(
        x: SignedRecurrenceMatrix,
        y: SignedRecurrenceMatrix,
        z: SignedRecurrenceMatrix,
    ) -> Result<Self> {
        for other in [&y, &z] {
            if other.side() != x.side() {
                return Err(Error::DimensionMismatch {
                    expected: x.side(),
                    found: other.side(),
                });
            }
            if other.kind() != x.kind() {
                return Err(Error::KindMismatch);
            }
        }
        Ok(Self {
            channels: [x, y, z],
        })
    }

    pub fn side(&self) -> usize {
        self.channels[0].side()
    }

    pub fn channels(&self) -> &[SignedRecurrenceMatrix; 3] {
        &self.channels
    }
}

/// Maps `v` to `round(255 (v - min) / (max - min))`; a constant input maps to
/// all zeros.
pub fn normalize_plane(values: &[f64]) -> Result<Vec<u8>> {
    if let Some(index) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFiniteEntry { index });
    }
    let (min, max) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    if values.is_empty() || max == min {
        return Ok(alloc::vec![0; values.len()]);
    }
    let range = max - min;
    Ok(values
        .iter()
        .map(|&v| round_half_away(255.0 * ((v - min) / range)).clamp(0.0, 255.0) as u8)
        .collect())
}

pub fn normalize_channel(m: &SignedRecurrenceMatrix) -> Result<ChannelPlane> {
    Ok(ChannelPlane {
        side: m.side(),
        values: normalize_plane(m.entries())?,
    })
}

/// Normalizes x, y and z independently into the R, G and B channels.
pub fn stack_rgb(triple: &ChannelMatrixTriple) -> Result<RgbImage> {
    let [x, y, z] = triple.channels();
    let planes = [normalize_channel(x)?, normalize_channel(y)?, normalize_channel(z)?];
    let side = triple.side();
    let mut pixels = Vec::with_capacity(side * side * 3);
    for i in 0..side * side {
        pixels.extend(planes.iter().map(|p| p.values[i]));
    }
    RgbImage::new(side, pixels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::MatrixKind;
    use alloc::vec;

    fn unsigned(side: usize, entries: Vec<f64>) -> SignedRecurrenceMatrix {
        SignedRecurrenceMatrix::from_entries(side, entries, MatrixKind::UnsignedTemporal).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_plane(&[-2.0, 0.0, 0.0, 2.0]).unwrap(), vec![0, 128, 128, 255]);
        assert_eq!(normalize_plane(&[0.0; 4]).unwrap(), vec![0; 4]);
        assert_eq!(normalize_plane(&[0.0, 255.0, 255.0, 0.0]).unwrap(), vec![0, 255, 255, 0]);
        assert_eq!(
            normalize_plane(&[0.0, f64::NAN]),
            Err(Error::NonFiniteEntry { index: 1 })
        );
    }

    #[test]
    fn stack_examples() {
        let m = unsigned(2, vec![0.0, 3.0, 3.0, 0.0]);
        let gray = stack_rgb(&ChannelMatrixTriple::new(m.clone(), m.clone(), m).unwrap()).unwrap();
        for y in 0..2 {
            for x in 0..2 {
                let [r, g, b] = gray.pixel(x, y);
                assert!(r == g && g == b);
            }
        }

        let zero = unsigned(2, vec![0.0; 4]);
        let blue = unsigned(2, vec![0.0, 255.0, 255.0, 0.0]);
        let img = stack_rgb(&ChannelMatrixTriple::new(zero.clone(), zero, blue).unwrap()).unwrap();
        assert_eq!(img.width(), 2);
        assert_eq!(img.height(), 2);
        assert_eq!(img.as_bytes(), &[0, 0, 0, 0, 0, 255, 0, 0, 255, 0, 0, 0]);
    }

    #[test]
    fn triple_rejects_mismatch() {
        let two = unsigned(2, vec![0.0; 4]);
        let three = unsigned(3, vec![0.0; 9]);
        assert!(matches!(
            ChannelMatrixTriple::new(two.clone(), two.clone(), three),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        ));
        let signed =
            SignedRecurrenceMatrix::from_entries(2, vec![0.0; 4], MatrixKind::SignedTemporal).unwrap();
        assert_eq!(
            ChannelMatrixTriple::new(two.clone(), signed, two),
            Err(Error::KindMismatch)
        );
    }
}
