use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

#[test]
fn corpus_profile_to_order_four() {
    let corpus = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus/text-corpus.txt");
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_entropy-lab"))
        .args(["--no-timestamp", "--format", "csv", "entropy", "--k", "0..4"])
        .arg(&corpus)
        .output()
        .unwrap();
    let elapsed = start.elapsed();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 6);
    assert!(elapsed < Duration::from_secs(10), "{elapsed:?}");
}
