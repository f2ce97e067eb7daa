//! Synthetic corpora for integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

/// Folder name, filename token and episode count for the seven ADL classes,
/// using the per-activity sample counts 102/96/101/100/96/95/99.
pub const ADL_LAYOUT: [(&str, &str, usize); 7] = [
    ("Climb_stairs", "climb_stairs", 102),
    ("Drink_glass", "drink_glass", 96),
    ("Getup_bed", "getup_bed", 101),
    ("Pour_water", "pour_water", 100),
    ("Sitdown_chair", "sitdown_chair", 96),
    ("Standup_chair", "standup_chair", 95),
    ("Walk", "walk", 99),
];

/// Five-class layout at the 1080-episode scale of the wristband corpus.
pub const ASTRI_LAYOUT: [(&str, usize); 5] = [
    ("walking", 320),
    ("standing", 191),
    ("squatting", 189),
    ("sitting", 193),
    ("lying", 187),
];

fn synth_axis(rng: &mut ChaCha8Rng, n: usize, class: usize, axis: usize) -> Vec<i64> {
    let freq = 0.02 + 0.015 * class as f64 + 0.005 * axis as f64;
    let amp = 6.0 + 2.0 * ((class + axis) % 4) as f64;
    let offset = 20.0 + 8.0 * axis as f64;
    let phase: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    (0..n)
        .map(|t| {
            let v = offset + amp * (freq * t as f64 + phase).sin() + rng.random_range(-2.0..2.0);
            (v.round() as i64).clamp(0, 63)
        })
        .collect()
}

/// Writes a directory tree in the UCI ADL layout. Besides the seven
/// configured classes it adds an unconfigured class, a `_MODEL` folder and
/// a README, none of which may become episodes.
pub fn write_adl_replica(root: &Path, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total = 0;
    let mut stamp = 0u64;
    let mut write_episode = |dir: &Path, token: &str, class: usize, rng: &mut ChaCha8Rng| {
        stamp += 1;
        let (mm, dd, h, m, s) = (1 + stamp / 40_000 % 12, 1 + stamp / 1440 % 28, stamp / 60 % 24, stamp % 60, (stamp * 7) % 60);
        let volunteer = ["f1", "m1", "m2", "f2", "m3"][stamp as usize % 5];
        let name = format!("Accelerometer-2011-{mm:02}-{dd:02}-{h:02}-{m:02}-{s:02}-{token}-{volunteer}.txt");
        let n = rng.random_range(120..900);
        let axes: Vec<Vec<i64>> = (0..3).map(|a| synth_axis(rng, n, class, a)).collect();
        let mut body = String::with_capacity(n * 9);
        for ((x, y), z) in axes[0].iter().zip(&axes[1]).zip(&axes[2]) {
            let _ = writeln!(body, "{x} {y} {z}");
        }
        fs::write(dir.join(name), body).unwrap();
    };
    for (class, (folder, token, count)) in ADL_LAYOUT.iter().enumerate() {
        let dir = root.join(folder);
        fs::create_dir_all(&dir).unwrap();
        for _ in 0..*count {
            write_episode(&dir, token, class, &mut rng);
            total += 1;
        }
    }
    let model = root.join("Walk_MODEL");
    fs::create_dir_all(&model).unwrap();
    for _ in 0..3 {
        write_episode(&model, "walk", 6, &mut rng);
    }
    let brush = root.join("Brush_teeth");
    fs::create_dir_all(&brush).unwrap();
    for _ in 0..4 {
        write_episode(&brush, "brush_teeth", 7, &mut rng);
    }
    fs::write(root.join("README.txt"), "synthetic replica\n").unwrap();
    total
}

/// One headered CSV file per episode, label in a `label` column.
pub fn write_csv_corpus(root: &Path, layout: &[(&str, usize)], seed: u64) -> BTreeMap<String, usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    fs::create_dir_all(root).unwrap();
    let mut counts = BTreeMap::new();
    for (class, (label, count)) in layout.iter().enumerate() {
        for i in 0..*count {
            let n = rng.random_range(20..60);
            let axes: Vec<Vec<i64>> = (0..3).map(|a| synth_axis(&mut rng, n, class, a)).collect();
            let mut body = String::from("timestamp,ax,ay,az,label\n");
            for (t, ((x, y), z)) in axes[0].iter().zip(&axes[1]).zip(&axes[2]).enumerate() {
                let _ = writeln!(body, "{t},{x},{y},{z},{label}");
            }
            fs::write(root.join(format!("{label}-{i:04}.csv")), body).unwrap();
        }
        counts.insert(label.to_string(), *count);
    }
    counts
}

/// SHA-256 over every file (relative path + contents), in sorted order.
pub fn tree_digest(root: &Path) -> String {
    let mut files: Vec<PathBuf> = walkdir::WalkDir::new(root)
        .into_iter()
        .filter_map(|e| e.ok())
        .filter(|e| e.file_type().is_file())
        .map(|e| e.into_path())
        .collect();
    files.sort();
    let mut hasher = Sha256::new();
    for f in files {
        hasher.update(f.strip_prefix(root).unwrap().to_string_lossy().as_bytes());
        hasher.update([0]);
        hasher.update(fs::read(&f).unwrap());
    }
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_rpmix")
}
