use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::entropy::{ConditionalModel, ContextEntry, MarkovModel};
use crate::{Error, Result, Sequence, Symbol};

/// Portable seeded generator used by every sampler in this crate.
///
/// The stream is ChaCha8 keyed through `SeedableRng::seed_from_u64` (PCG32
/// expansion of the seed). Integers below `bound` are drawn by rejection:
/// 64-bit words smaller than `2^64 mod bound` are discarded and the rest are
/// reduced modulo `bound`, so the result is exactly uniform.
#[derive(Debug, Clone)]
pub struct SampleRng(ChaCha8Rng);

impl SampleRng {
    pub fn new(seed: u64) -> Self {
        SampleRng(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let r = self.0.next_u64();
            if r >= threshold {
                return r % bound;
            }
        }
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovSample {
    pub sequence: Sequence,
    /// Output positions at which the walk hit a context the model has never
    /// seen and restarted from a random occurring context.
    pub restarts: Vec<usize>,
}

fn draw(rng: &mut SampleRng, entry: &ContextEntry) -> Symbol {
    let mut r = rng.below(entry.total());
    for &(sym, count) in &entry.followers {
        if r < count {
            return sym;
        }
        r -= count;
    }
    unreachable!("draw below the follower total")
}

/// Walk the model for `n` symbols.
///
/// The output opens with the initial context (`start`, or a uniformly chosen
/// occurring context), then each symbol is drawn from `p(·|w)` for the last
/// `k` symbols `w`. A context with no recorded followers triggers a restart:
/// the context is replaced, without emitting anything, by a uniformly chosen
/// occurring context and the position is recorded.
pub fn markov_sample(model: &MarkovModel, n: usize, seed: u64, start: Option<&[Symbol]>) -> Result<MarkovSample> {
    let entries = model.table().entries();
    if entries.is_empty() {
        return Err(Error::param("model", "has no context with followers"));
    }
    let k = model.order();
    let mut rng = SampleRng::new(seed);
    let mut context: Vec<Symbol> = match start {
        Some(w) => {
            if w.len() != k {
                return Err(Error::param("start", format!("context has length {}, model order is {k}", w.len())));
            }
            if let Some(&bad) = w.iter().find(|&&s| s as usize >= model.sigma()) {
                return Err(Error::param("start", format!("symbol {bad} is outside the alphabet")));
            }
            w.to_vec()
        }
        None => entries[rng.below(entries.len() as u64) as usize].context.clone(),
    };
    let mut out: Vec<Symbol> = context.iter().copied().take(n).collect();
    let mut restarts = Vec::new();
    while out.len() < n {
        let entry = match model.table().get(&context) {
            Some(e) => e,
            None => {
                restarts.push(out.len());
                let e = &entries[rng.below(entries.len() as u64) as usize];
                context.clone_from(&e.context);
                e
            }
        };
        let next = draw(&mut rng, entry);
        out.push(next);
        if k > 0 {
            context.rotate_left(1);
            context[k - 1] = next;
        }
    }
    Ok(MarkovSample {
        sequence: Sequence::new(model.alphabet().clone(), out)?,
        restarts,
    })
}
