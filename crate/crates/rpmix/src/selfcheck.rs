//! Embedded oracle suite behind `rpmix selfcheck`.
//!
//! Each check compares the library against an independent computation: a
//! direct O(N²) DFT, an atan2-based angle test for the sign rule, and
//! hand-derived matrices frozen as constants.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rpmix_core::fft::Complex64;
use rpmix_core::{
    blend_with_lambda, delay_embed, modified_rp_frequency, modified_rp_temporal, normalize_plane,
    phase_spectrum, sign_of, unsigned_rp, PhaseSpectrum, PhaseTrajectory, RgbImage, Sign,
    TimeSeriesWindow,
};
use serde::Serialize;

pub type SignRule = dyn Fn([f64; 2]) -> Sign + Sync;

pub struct SelfcheckOptions {
    /// The sign implementation under test.
    pub sign_rule: Box<SignRule>,
    pub seed: u64,
    pub dft_windows: usize,
    pub random_cases: usize,
}

impl Default for SelfcheckOptions {
    fn default() -> Self {
        Self {
            sign_rule: Box::new(|d| sign_of(d).expect("finite input")),
            seed: 0x5eed,
            dft_windows: 200,
            random_cases: 2_000,
        }
    }
}

/// A sign rule that compares the cosine against an arbitrary threshold.
pub fn cosine_sign_rule(threshold: f64) -> Box<SignRule> {
    Box::new(move |d: [f64; 2]| {
        let norm = (d[0] * d[0] + d[1] * d[1]).sqrt();
        if norm == 0.0 {
            return Sign::Positive;
        }
        let cos = (d[0] + d[1]) / (norm * SQRT_2);
        if cos < threshold {
            Sign::Negative
        } else {
            Sign::Positive
        }
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelfcheckReport {
    pub checks: Vec<CheckResult>,
}

impl SelfcheckReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

type CheckOutcome = Result<String, String>;
type Check<'a> = Box<dyn Fn() -> CheckOutcome + 'a>;

pub fn run(options: &SelfcheckOptions) -> SelfcheckReport {
    let checks: [(&'static str, Check<'_>); 9] = [
        ("dft-oracle", Box::new(|| check_dft(options))),
        ("sign-oracle", Box::new(|| check_sign(options))),
        ("sign-flip", Box::new(|| check_sign_flip(options))),
        ("golden-unsigned", Box::new(check_golden_unsigned)),
        ("golden-temporal", Box::new(check_golden_temporal)),
        ("golden-frequency", Box::new(check_golden_frequency)),
        ("structural-properties", Box::new(|| check_structure(options))),
        ("frequency-path-equivalence", Box::new(|| check_frequency_path(options))),
        ("normalize-and-mixup", Box::new(check_image_goldens)),
    ];
    SelfcheckReport {
        checks: checks
            .into_iter()
            .map(|(name, check)| {
                let (passed, detail) = match check() {
                    Ok(d) => (true, d),
                    Err(d) => (false, d),
                };
                CheckResult {
                    name,
                    passed,
                    detail,
                }
            })
            .collect(),
    }
}

pub fn direct_dft(samples: &[f64]) -> Vec<Complex64> {
    let n = samples.len();
    (0..n)
        .map(|k| {
            samples.iter().enumerate().fold(Complex64::new(0.0, 0.0), |acc, (t, &x)| {
                let angle = -2.0 * PI * ((k * t % n) as f64) / n as f64;
                acc + Complex64::new(angle.cos(), angle.sin()) * x
            })
        })
        .collect()
}

/// Wrapped phase difference relative to `max(|expected|, 1)`.
pub fn phase_error(actual: f64, expected: f64) -> f64 {
    let d = (actual - expected).rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d) / expected.abs().max(1.0)
}

/// Angle oracle: negative iff the angle between `d` and (1, 1) exceeds 3π/4.
pub fn angle_sign(d: [f64; 2]) -> Sign {
    if d == [0.0, 0.0] {
        return Sign::Positive;
    }
    let mut a = d[1].atan2(d[0]) - FRAC_PI_4;
    if a > PI {
        a -= 2.0 * PI;
    } else if a < -PI {
        a += 2.0 * PI;
    }
    if a.abs() > 0.75 * PI {
        Sign::Negative
    } else {
        Sign::Positive
    }
}

fn ulp_distance(a: f64, b: f64) -> u64 {
    if a == b {
        return 0;
    }
    if a.is_sign_negative() != b.is_sign_negative() {
        return u64::MAX;
    }
    a.to_bits().abs_diff(b.to_bits())
}

fn compare_matrix(label: &str, actual: &[f64], expected: &[f64]) -> Result<(), String> {
    if actual.len() != expected.len() {
        return Err(format!("{label}: {} entries, expected {}", actual.len(), expected.len()));
    }
    for (i, (a, e)) in actual.iter().zip(expected).enumerate() {
        if ulp_distance(*a, *e) > 1 {
            return Err(format!("{label}[{i}] = {a:e}, expected {e:e}"));
        }
    }
    Ok(())
}

fn random_window(rng: &mut ChaCha8Rng, min: usize, max: usize) -> Vec<f64> {
    let n = rng.random_range(min..=max);
    (0..n).map(|_| rng.random_range(-100.0..100.0)).collect()
}

fn check_dft(options: &SelfcheckOptions) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let mut worst = 0.0f64;
    for _ in 0..options.dft_windows {
        let xs = random_window(&mut rng, 4, 256);
        let phases = phase_spectrum(&TimeSeriesWindow::from_samples(xs.clone()).map_err(|e| e.to_string())?);
        let oracle = direct_dft(&xs);
        let floor = 1e-12 * oracle.iter().map(|c| c.norm()).fold(0.0, f64::max);
        for (p, o) in phases.phases().iter().zip(&oracle) {
            if o.norm() > floor {
                worst = worst.max(phase_error(*p, o.im.atan2(o.re)));
            }
        }
    }
    if worst <= 1e-9 {
        Ok(format!("{} windows, max phase error {worst:.2e}", options.dft_windows))
    } else {
        Err(format!("max phase error {worst:.2e} exceeds 1e-9"))
    }
}

fn check_sign(options: &SelfcheckOptions) -> CheckOutcome {
    let rule = &options.sign_rule;
    for (d, expected) in [
        ([1.0, 1.0], Sign::Positive),
        ([-1.0, -1.0], Sign::Negative),
        ([-1.0, 1.0], Sign::Positive),
        ([0.0, 0.0], Sign::Positive),
    ] {
        if rule(d) != expected {
            return Err(format!("sign({d:?}) should be {expected:?}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed ^ 1);
    let mut tested = 0;
    for _ in 0..options.random_cases * 5 {
        let theta: f64 = rng.random_range(0.0..2.0 * PI);
        let r: f64 = rng.random_range(1e-3..1e3);
        let d = [r * theta.cos(), r * theta.sin()];
        if (angle_of(d) - 0.75 * PI).abs() < 1e-12 {
            continue;
        }
        tested += 1;
        if rule(d) != angle_sign(d) {
            return Err(format!("sign({d:?}) disagrees with the angle oracle"));
        }
    }
    Ok(format!("{tested} random directions"))
}

fn angle_of(d: [f64; 2]) -> f64 {
    let mut a = d[1].atan2(d[0]) - FRAC_PI_4;
    if a > PI {
        a -= 2.0 * PI;
    } else if a < -PI {
        a += 2.0 * PI;
    }
    a.abs()
}

fn check_sign_flip(options: &SelfcheckOptions) -> CheckOutcome {
    let rule = &options.sign_rule;
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed ^ 2);
    for _ in 0..options.random_cases {
        let theta: f64 = rng.random_range(0.0..2.0 * PI);
        let d = [theta.cos(), theta.sin()];
        let angle = angle_of(d);
        if !(FRAC_PI_4 - 1e-12..=0.75 * PI + 1e-12).contains(&angle)
            && rule(d).as_f64() * rule([-d[0], -d[1]]).as_f64() != -1.0
        {
            return Err(format!("sign(d)·sign(-d) != -1 for d = {d:?}"));
        }
    }
    Ok(format!("{} directions", options.random_cases))
}

fn traj(samples: &[f64]) -> Result<PhaseTrajectory, String> {
    PhaseTrajectory::from_samples(samples).map_err(|e| e.to_string())
}

fn check_golden_unsigned() -> CheckOutcome {
    compare_matrix("unsigned [0,1,0]", unsigned_rp(&traj(&[0.0, 1.0, 0.0])?).entries(), &[0.0, SQRT_2, SQRT_2, 0.0])?;
    compare_matrix("unsigned [0,1,2]", unsigned_rp(&traj(&[0.0, 1.0, 2.0])?).entries(), &[0.0, SQRT_2, SQRT_2, 0.0])?;
    compare_matrix("unsigned [0,0,0]", unsigned_rp(&traj(&[0.0; 3])?).entries(), &[0.0; 4])?;
    Ok("3 matrices".into())
}

fn check_golden_temporal() -> CheckOutcome {
    compare_matrix("mtrp [0,1,2]", modified_rp_temporal(&traj(&[0.0, 1.0, 2.0])?).entries(), &[0.0, -SQRT_2, SQRT_2, 0.0])?;
    compare_matrix("mtrp [0,1,0]", modified_rp_temporal(&traj(&[0.0, 1.0, 0.0])?).entries(), &[0.0, SQRT_2, SQRT_2, 0.0])?;
    Ok("2 matrices".into())
}

fn check_golden_frequency() -> CheckOutcome {
    let window = TimeSeriesWindow::from_samples(vec![0.0, 1.0, 0.0, 0.0]).map_err(|e| e.to_string())?;
    let spectrum = phase_spectrum(&window);
    compare_matrix("phases [0,1,0,0]", spectrum.phases(), &[0.0, -FRAC_PI_2, PI, FRAC_PI_2])?;
    let phases = PhaseSpectrum::from_phases(vec![0.0, -FRAC_PI_2, PI, FRAC_PI_2]).map_err(|e| e.to_string())?;
    let m = modified_rp_frequency(&phases).map_err(|e| e.to_string())?;
    // ‖(π/2, -3π/2)‖ = π√10/2 and ‖(-π, -π)‖ = π√2, evaluated exactly on the
    // f64 inputs and rounded once.
    let a = 4.967294132898051;
    let b = 4.442882938158366;
    compare_matrix("frp [0,-π/2,π,π/2]", m.entries(), &[0.0, a, -b, a, 0.0, a, b, a, 0.0])?;
    Ok("phase spectrum and 3x3 matrix".into())
}

fn check_structure(options: &SelfcheckOptions) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed ^ 3);
    for case in 0..options.random_cases {
        let xs = random_window(&mut rng, 3, 40);
        let t = traj(&xs)?;
        let unsigned = unsigned_rp(&t);
        let signed = modified_rp_temporal(&t);
        unsigned.check_invariants().map_err(|e| format!("case {case}: {e}"))?;
        signed.check_invariants().map_err(|e| format!("case {case}: {e}"))?;
        if unsigned.entries().iter().zip(signed.entries()).any(|(u, s)| *u != s.abs()) {
            return Err(format!("case {case}: |signed| != unsigned"));
        }
    }
    Ok(format!("{} trajectories", options.random_cases))
}

fn check_frequency_path(options: &SelfcheckOptions) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed ^ 4);
    for case in 0..options.dft_windows {
        let xs = random_window(&mut rng, 3, 64);
        let window = TimeSeriesWindow::from_samples(xs).map_err(|e| e.to_string())?;
        let spectrum = phase_spectrum(&window);
        let freq = modified_rp_frequency(&spectrum).map_err(|e| e.to_string())?;
        let as_samples = TimeSeriesWindow::from_samples(spectrum.phases().to_vec()).map_err(|e| e.to_string())?;
        let temporal = modified_rp_temporal(&delay_embed(&as_samples));
        let same = freq
            .entries()
            .iter()
            .zip(temporal.entries())
            .all(|(a, b)| a.to_bits() == b.to_bits());
        if !same {
            return Err(format!("case {case}: frequency path differs from temporal path on phases"));
        }
    }
    Ok(format!("{} windows", options.dft_windows))
}

fn check_image_goldens() -> CheckOutcome {
    let plane = normalize_plane(&[-2.0, 0.0, 0.0, 2.0]).map_err(|e| e.to_string())?;
    if plane != [0, 128, 128, 255] {
        return Err(format!("normalize [[-2,0],[0,2]] gave {plane:?}"));
    }
    let black = RgbImage::filled(2, [0, 0, 0]).map_err(|e| e.to_string())?;
    let white = RgbImage::filled(2, [255, 255, 255]).map_err(|e| e.to_string())?;
    let mid = blend_with_lambda(&black, &white, 0.5).map_err(|e| e.to_string())?;
    if mid.as_bytes().iter().any(|&v| v != 128) {
        return Err("mixup midpoint of 0 and 255 is not 128".into());
    }
    Ok("normalization and mixup midpoint".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passes_with_library_sign() {
        let report = run(&SelfcheckOptions {
            dft_windows: 20,
            random_cases: 200,
            ..SelfcheckOptions::default()
        });
        for c in &report.checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn perturbed_threshold_is_caught() {
        let report = run(&SelfcheckOptions {
            sign_rule: cosine_sign_rule(-0.5),
            dft_windows: 5,
            random_cases: 200,
            ..SelfcheckOptions::default()
        });
        assert!(!report.all_passed());
        assert!(!report.get("sign-oracle").unwrap().passed);
    }

    #[test]
    fn cosine_rule_at_true_threshold_agrees() {
        let report = run(&SelfcheckOptions {
            sign_rule: cosine_sign_rule(rpmix_core::COS_THRESHOLD),
            dft_windows: 5,
            random_cases: 500,
            ..SelfcheckOptions::default()
        });
        assert!(report.get("sign-oracle").unwrap().passed);
    }
}
