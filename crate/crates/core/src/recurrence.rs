//! Recurrence matrices over delay-embedded trajectories.
//!
//! All three kinds share the same `(N-1) x (N-1)` layout where entry
//! `(m, n)` is the L2 distance between states `m` and `n`. The signed kinds
//! multiply that distance by [`sign_of`](crate::sign_of) of `s_m - s_n`.

use alloc::vec::Vec;

use crate::embed::PhaseTrajectory;
use crate::sign::{l2_norm, sign_unchecked};
use crate::spectrum::PhaseSpectrum;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    UnsignedTemporal,
    SignedTemporal,
    SignedFrequency,
}

/// Square row-major matrix of (signed) pairwise state distances.
#[derive(Debug, Clone, PartialEq)]
pub struct SignedRecurrenceMatrix {
    side: usize,
    entries: Vec<f64>,
    kind: MatrixKind,
}

impl SignedRecurrenceMatrix {
    /// Wraps explicit entries, checking every structural invariant of `kind`.
    pub fn from_entries(side: usize, entries: Vec<f64>, kind: MatrixKind) -> Result<Self> {
        if entries.len() != side * side {
            return Err(Error::DimensionMismatch {
                expected: side * side,
                found: entries.len(),
            });
        }
        let matrix = Self {
            side,
            entries,
            kind,
        };
        matrix.check_invariants()?;
        Ok(matrix)
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, m: usize, n: usize) -> f64 {
        self.entries[m * self.side + n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.entries.chunks_exact(self.side.max(1))
    }

    /// Verifies zero diagonal, magnitude symmetry, the kind-specific sign
    /// structure and finiteness.
    pub fn check_invariants(&self) -> Result<()> {
        if let Some(index) = self.entries.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteEntry { index });
        }
        for m in 0..self.side {
            if self.get(m, m) != 0.0 {
                return Err(Error::InvariantViolation("non-zero diagonal"));
            }
            for n in (m + 1)..self.side {
                let (upper, lower) = (self.get(m, n), self.get(n, m));
                if upper.abs() != lower.abs() {
                    return Err(Error::InvariantViolation("magnitudes are not symmetric"));
                }
                match self.kind {
                    MatrixKind::UnsignedTemporal => {
                        if upper < 0.0 || upper != lower {
                            return Err(Error::InvariantViolation(
                                "unsigned matrix must be symmetric and non-negative",
                            ));
                        }
                    }
                    MatrixKind::SignedTemporal | MatrixKind::SignedFrequency => {
                        if upper < 0.0 && lower < 0.0 {
                            return Err(Error::InvariantViolation(
                                "mirrored entries are both negative",
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn unsigned_rp(traj: &PhaseTrajectory) -> SignedRecurrenceMatrix {
    build(traj, MatrixKind::UnsignedTemporal)
}

pub fn modified_rp_temporal(traj: &PhaseTrajectory) -> SignedRecurrenceMatrix {
    build(traj, MatrixKind::SignedTemporal)
}

/// Signed recurrence matrix of the delay-embedded phase-angle sequence.
///
/// The phases are embedded and signed exactly like temporal samples, so the
/// result is bit-identical to `modified_rp_temporal` run on the phases.
pub fn modified_rp_frequency(spectrum: &PhaseSpectrum) -> Result<SignedRecurrenceMatrix> {
    let phases = spectrum.phases();
    if phases.len() < 3 {
        return Err(Error::SpectrumTooShort { len: phases.len() });
    }
    let traj = PhaseTrajectory::from_samples(phases)?;
    Ok(build(&traj, MatrixKind::SignedFrequency))
}

fn build(traj: &PhaseTrajectory, kind: MatrixKind) -> SignedRecurrenceMatrix {
    let states = traj.states();
    let side = states.len();
    let mut entries = Vec::with_capacity(side * side);
    for sm in states {
        for sn in states {
            let diff = [sm[0] - sn[0], sm[1] - sn[1]];
            let dist = l2_norm(diff);
            let value = match kind {
                MatrixKind::UnsignedTemporal => dist,
                MatrixKind::SignedTemporal | MatrixKind::SignedFrequency => {
                    sign_unchecked(diff, dist).as_f64() * dist
                }
            };
            entries.push(value);
        }
    }
    SignedRecurrenceMatrix {
        side,
        entries,
        kind,
    }
}
