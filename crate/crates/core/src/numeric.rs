/// Neumaier's variant of Kahan compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = NeumaierSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Smallest `w` with `2^w >= x`; `ceil_log2(0) == ceil_log2(1) == 0`.
pub fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

/// Total self-information `Σ c·log2(N/c)` of a count vector, in bits.
pub(crate) fn counts_information(counts: impl IntoIterator<Item = u64> + Clone) -> f64 {
    let total: u64 = counts.clone().into_iter().sum();
    if total == 0 {
        return 0.0;
    }
    let log_total = (total as f64).log2();
    counts
        .into_iter()
        .filter(|&c| c > 0)
        .map(|c| c as f64 * (log_total - (c as f64).log2()))
        .collect::<NeumaierSum>()
        .value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_log2_small_values() {
        let expected = [(0, 0), (1, 0), (2, 1), (3, 2), (4, 2), (5, 3), (8, 3), (9, 4)];
        for (x, w) in expected {
            assert_eq!(ceil_log2(x), w, "x = {x}");
        }
        assert_eq!(ceil_log2(u64::MAX), 64);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut s = NeumaierSum::new();
        s.add(1e16);
        for _ in 0..10 {
            s.add(1.0);
        }
        s.add(-1e16);
        assert_eq!(s.value(), 10.0);
    }

    #[test]
    fn information_of_uniform_counts() {
        assert_eq!(counts_information([2u64, 2, 2, 2]), 16.0);
        assert_eq!(counts_information([5u64, 0]), 0.0);
        assert_eq!(counts_information(Vec::<u64>::new()), 0.0);
    }
}
