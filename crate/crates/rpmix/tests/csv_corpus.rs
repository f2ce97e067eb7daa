mod support;

use std::collections::BTreeMap;
use std::path::PathBuf;

use rpmix::config::ConfigLayer;
use rpmix::{run_encode, DatasetKind, DatasetManifest, EncodingKind, Split};

#[test]
fn synthetic_1080_episode_corpus_matches_generator() {
    let input = tempfile::tempdir().unwrap();
    let output = tempfile::tempdir().unwrap();
    let expected = support::write_csv_corpus(input.path(), &support::ASTRI_LAYOUT, 11);
    assert_eq!(expected.values().sum::<usize>(), 1080);

    let layer = ConfigLayer::from_toml(
        r#"
        dataset_kind = "csv"
        window_length = 16
        encodings = ["mtrp"]
        [csv]
        x_column = "ax"
        y_column = "ay"
        z_column = "az"
        sample_rate_hz = 52.0
        "#,
    )
    .unwrap();
    let config = ConfigLayer {
        input_dir: Some(PathBuf::from(input.path())),
        output_dir: Some(PathBuf::from(output.path())),
        ..layer
    }
    .into_encode_config()
    .unwrap();
    assert_eq!(config.corpus.kind, DatasetKind::Csv);

    let report = run_encode(&config).unwrap();
    assert!(report.failures.is_empty());
    assert_eq!(report.episodes, 1080);

    let manifest = DatasetManifest::read(&report.manifest_path).unwrap();
    let mut per_class: BTreeMap<String, usize> = BTreeMap::new();
    for r in &manifest.records {
        assert_eq!(r.encoding_kind, EncodingKind::Mtrp);
        *per_class.entry(r.label.clone()).or_default() += 1;
    }
    assert_eq!(per_class, expected);

    for ((label, split), n) in manifest.episode_counts() {
        let total = expected[&label];
        let train = (0.7 * total as f64).round() as usize;
        let want = if split == Split::Train { train } else { total - train };
        assert_eq!(n, want, "{label} {split:?}");
    }
}
