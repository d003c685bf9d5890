use std::time::{Duration, Instant};

use entropy_lab::entropy::{entropy_profile, h0};
use entropy_lab::{ingest, AlphabetMode};

#[test]
fn entropy_profile_of_corpus_within_budget() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus/text-corpus.txt");
    let s = ingest(&std::fs::read(path).unwrap(), &AlphabetMode::Inferred).unwrap();
    let start = Instant::now();
    let p = entropy_profile(&s, 4);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "{elapsed:?}");
    assert!(p.is_non_increasing(1e-9));
    assert!((p.values()[0] - h0(&s)).abs() < 1e-12);
}
