//! Shannon entropy and kth-order empirical entropy.
//!
//! `H_0(s)` is the entropy of the normalized symbol histogram of `s`.
//! For `k >= 1`, `H_k(s) = (1/n) Σ_w |s_w|·H_0(s_w)` where `s_w` collects the
//! symbols that immediately follow each occurrence of the length-`k` context
//! `w`. Only contexts that occur are visited, so byte alphabets stay cheap.
//! All logarithms are base 2 and `0·log(1/0)` is taken as 0.

mod context;
mod markov;

pub use context::{context_string, ContextEntry, ContextTable};
pub use markov::{
    deserialize_model, fit_markov, self_information, serialize_model, ConditionalModel, MarkovModel, SerializedModel,
    MODEL_HEADER_BITS, MODEL_MAGIC,
};

use serde::{Deserialize, Serialize};

use crate::numeric::{counts_information, NeumaierSum};
use crate::{frequencies, Error, Result, Sequence};

/// Tolerance on `Σ p_i = 1` accepted by [`Distribution::new`].
pub const DISTRIBUTION_TOLERANCE: f64 = 1e-12;

/// A probability distribution over `σ` outcomes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Distribution {
    probabilities: Vec<f64>,
}

impl Distribution {
    pub fn new(probabilities: Vec<f64>) -> Result<Self> {
        if probabilities.is_empty() || probabilities.iter().any(|p| !p.is_finite() || *p < 0.0) {
            let sum = probabilities.iter().sum();
            return Err(Error::InvalidDistribution { sum });
        }
        let sum = probabilities.iter().copied().collect::<NeumaierSum>().value();
        if (sum - 1.0).abs() > DISTRIBUTION_TOLERANCE {
            return Err(Error::InvalidDistribution { sum });
        }
        Ok(Distribution { probabilities })
    }

    /// Normalize non-negative weights.
    pub fn from_weights(weights: &[f64]) -> Result<Self> {
        let total = weights.iter().copied().collect::<NeumaierSum>().value();
        if !(total > 0.0) || weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidDistribution { sum: total });
        }
        Self::new(weights.iter().map(|w| w / total).collect())
    }

    pub fn uniform(sigma: usize) -> Result<Self> {
        Self::new(vec![1.0 / sigma as f64; sigma])
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn len(&self) -> usize {
        self.probabilities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probabilities.is_empty()
    }
}

/// `H(P) = Σ p_i log2(1/p_i)` in bits.
pub fn shannon_entropy(p: &Distribution) -> f64 {
    p.probabilities
        .iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| -x * x.log2())
        .collect::<NeumaierSum>()
        .value()
}

/// Zeroth-order empirical entropy in bits per character; 0 for the empty
/// sequence.
pub fn h0(s: &Sequence) -> f64 {
    if s.is_empty() {
        return 0.0;
    }
    let f = frequencies(s);
    counts_information(f.counts().iter().copied()) / s.len() as f64
}

/// kth-order empirical entropy in bits per character.
///
/// The first `k` positions have no full context and contribute nothing, so
/// `hk(s, k) == 0` whenever `k >= n`.
pub fn hk(s: &Sequence, k: usize) -> f64 {
    if k == 0 {
        return h0(s);
    }
    if k >= s.len() {
        return 0.0;
    }
    ContextTable::build(s, k).information() / s.len() as f64
}

/// `H_0, ..., H_kmax` of one sequence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropyProfile {
    values: Vec<f64>,
}

impl EntropyProfile {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, k: usize) -> Option<f64> {
        self.values.get(k).copied()
    }

    /// Whether each value is at most its predecessor plus `tolerance`.
    pub fn is_non_increasing(&self, tolerance: f64) -> bool {
        self.values.windows(2).all(|w| w[1] <= w[0] + tolerance)
    }
}

pub fn entropy_profile(s: &Sequence, kmax: usize) -> EntropyProfile {
    EntropyProfile {
        values: (0..=kmax).map(|k| hk(s, k)).collect(),
    }
}
