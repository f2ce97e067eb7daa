use std::collections::BTreeMap;
use std::path::Path;

use proptest::prelude::*;
use rpmix::{split_train_test, DatasetManifest, EncodingKind, ManifestRecord, Split};

fn manifest(sizes: &[usize], lambdas: &[Option<f64>]) -> DatasetManifest {
    let mut records = Vec::new();
    for (c, &n) in sizes.iter().enumerate() {
        for e in 0..n {
            let id = format!("c{c}-e{e}");
            for (k, lambda) in lambdas.iter().enumerate() {
                records.push(ManifestRecord {
                    image_path: format!("images/{id}__{k}.png"),
                    label: format!("class_{c}"),
                    episode_id: id.clone(),
                    encoding_kind: if lambda.is_some() { EncodingKind::Mix } else { EncodingKind::Frp },
                    lambda: *lambda,
                    seed: (c * 1000 + e) as u64,
                    split: Split::Train,
                });
            }
        }
    }
    DatasetManifest::new(records)
}

proptest! {
    #[test]
    fn split_is_stratified_and_leak_free(
        sizes in prop::collection::vec(1usize..60, 1..8),
        ratio in 0.05f64..0.95,
        seed in any::<u64>(),
    ) {
        let m = manifest(&sizes, &[None, Some(0.5)]);
        let out = split_train_test(&m, ratio, seed).unwrap();
        prop_assert!(out.check_no_leakage().is_ok());
        prop_assert_eq!(&out, &split_train_test(&m, ratio, seed).unwrap());
        let mut train: BTreeMap<String, usize> = BTreeMap::new();
        for ((label, split), n) in out.episode_counts() {
            if split == Split::Train {
                train.insert(label, n);
            }
        }
        for (c, &n) in sizes.iter().enumerate() {
            let got = train.get(&format!("class_{c}")).copied().unwrap_or(0) as f64;
            prop_assert!((got - ratio * n as f64).abs() <= 1.0);
        }
    }

    #[test]
    fn jsonl_round_trip_is_byte_stable(
        sizes in prop::collection::vec(1usize..5, 1..4),
        lambda in 0.0f64..=1.0,
    ) {
        let m = manifest(&sizes, &[None, Some(lambda)]);
        let text = m.to_jsonl();
        let back = DatasetManifest::from_jsonl(&text, Path::new("m.jsonl")).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(back.to_jsonl(), text);
    }
}
