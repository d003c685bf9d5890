use crate::sequence::checked_pow;
use crate::{Error, MemoryCap, Result, Sequence};

/// Dense counts of all `σ^k` tuples over the `n - k + 1` sliding windows,
/// indexed with the first window symbol most significant.
pub fn window_counts(s: &Sequence, k: usize, cap: MemoryCap) -> Result<Vec<u64>> {
    if k < 1 || k > s.len() {
        return Err(Error::param("k", format!("need 1 <= k <= n, got k={k}, n={}", s.len())));
    }
    let sigma = s.sigma() as u64;
    let cells = checked_pow(s.sigma(), k).ok_or(Error::CapExceeded {
        what: "tuple frequency table",
        required: u128::MAX,
        cap: cap.0,
    })?;
    cap.check("tuple frequency table", cells * 8)?;
    let cells = cells as u64;
    let mut counts = vec![0u64; cells as usize];
    let text = s.symbols();
    let mut rank = text[..k - 1].iter().fold(0u64, |acc, &c| acc * sigma + c as u64);
    for &c in &text[k - 1..] {
        rank = (rank * sigma + c as u64) % cells;
        counts[rank as usize] += 1;
    }
    Ok(counts)
}

/// `max_w |freq(w) - b^-k|` over every k-tuple `w`, where `b` is the
/// alphabet size and frequencies are taken over the sliding windows.
pub fn normality_deviation(s: &Sequence, k: usize, cap: MemoryCap) -> Result<f64> {
    let counts = window_counts(s, k, cap)?;
    let windows = (s.len() - k + 1) as f64;
    let expected = 1.0 / counts.len() as f64;
    Ok(counts
        .iter()
        .map(|&c| (c as f64 / windows - expected).abs())
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{champernowne_digits, de_bruijn};
    use crate::{Alphabet, Sequence};

    #[test]
    fn de_bruijn_is_perfectly_balanced() {
        for (sigma, k) in [(2, 3), (3, 2), (4, 4)] {
            let s = de_bruijn(sigma, k, MemoryCap::DEFAULT).unwrap();
            assert_eq!(normality_deviation(&s, k, MemoryCap::DEFAULT).unwrap(), 0.0);
        }
    }

    #[test]
    fn constant_binary_string() {
        let s = Sequence::new(Alphabet::digits(2).unwrap(), vec![1; 40]).unwrap();
        assert_eq!(normality_deviation(&s, 1, MemoryCap::DEFAULT).unwrap(), 0.5);
    }

    #[test]
    fn champernowne_deviation_against_direct_count() {
        // direct counting oracle
        let dev = |n: usize| {
            let s = champernowne_digits(10, n).unwrap();
            let mut counts = [0usize; 10];
            for &d in s.symbols() {
                counts[d as usize] += 1;
            }
            let oracle = counts.iter().map(|&c| (c as f64 / n as f64 - 0.1).abs()).fold(0.0, f64::max);
            let got = normality_deviation(&s, 1, MemoryCap::DEFAULT).unwrap();
            assert!((got - oracle).abs() < 1e-15);
            got
        };
        // The digit '1' dominates through leading-digit effects, so the
        // deviation oscillates with the decade rather than shrinking steadily.
        assert!((dev(1000) - 0.077).abs() < 1e-12);
        assert!((dev(100_000) - 0.09753).abs() < 1e-12);
        assert!((dev(500_000) - 0.015366).abs() < 1e-12);
    }

    #[test]
    fn window_counts_match_enumeration() {
        let s = champernowne_digits(3, 200).unwrap();
        let counts = window_counts(&s, 3, MemoryCap::DEFAULT).unwrap();
        assert_eq!(counts.iter().sum::<u64>(), 198);
        for (rank, &c) in counts.iter().enumerate() {
            let tuple = [(rank / 9) as u32, (rank / 3 % 3) as u32, (rank % 3) as u32];
            let oracle = s.symbols().windows(3).filter(|w| *w == tuple).count() as u64;
            assert_eq!(c, oracle);
        }
    }

    #[test]
    fn parameter_errors() {
        let s = champernowne_digits(10, 5).unwrap();
        assert!(normality_deviation(&s, 0, MemoryCap::DEFAULT).is_err());
        assert!(normality_deviation(&s, 6, MemoryCap::DEFAULT).is_err());
        assert!(matches!(
            normality_deviation(&s, 5, MemoryCap(1000)),
            Err(Error::CapExceeded { .. })
        ));
    }
}
