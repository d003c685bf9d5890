use serde::{Deserialize, Serialize};

use crate::numeric::{counts_information, NeumaierSum};
use crate::{FrequencyVector, Sequence, Symbol};

/// `s_w`: the symbols immediately following each occurrence of `w` in `s`,
/// in left-to-right order. An absent context yields the empty sequence.
pub fn context_string(s: &Sequence, w: &[Symbol]) -> Sequence {
    let text = s.symbols();
    let followers = if w.len() >= text.len() {
        Vec::new()
    } else {
        (0..text.len() - w.len())
            .filter(|&j| &text[j..j + w.len()] == w)
            .map(|j| text[j + w.len()])
            .collect()
    };
    Sequence::new(s.alphabet().clone(), followers).expect("followers come from the same alphabet")
}

/// One occurring context and how often each symbol follows it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextEntry {
    pub context: Vec<Symbol>,
    /// `(symbol, count)` pairs with nonzero counts, sorted by symbol.
    pub followers: Vec<(Symbol, u64)>,
}

impl ContextEntry {
    /// `|s_w|`.
    pub fn total(&self) -> u64 {
        self.followers.iter().map(|&(_, c)| c).sum()
    }

    pub fn count(&self, symbol: Symbol) -> u64 {
        self.followers
            .binary_search_by_key(&symbol, |&(s, _)| s)
            .map(|i| self.followers[i].1)
            .unwrap_or(0)
    }
}

/// Sparse table of follower counts for every order-`k` context occurring in
/// a sequence, sorted lexicographically by context.
///
/// Position `i` contributes to context `s[i-k..i]` for `k <= i < n`, so the
/// counts sum to `max(n - k, 0)`. For `k = 0` there is a single empty context
/// whose followers are the plain symbol frequencies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextTable {
    order: usize,
    sigma: usize,
    entries: Vec<ContextEntry>,
}

impl ContextTable {
    pub fn build(s: &Sequence, k: usize) -> Self {
        let text = s.symbols();
        let mut entries: Vec<ContextEntry> = Vec::new();
        if k < text.len() {
            let mut positions: Vec<usize> = (k..text.len()).collect();
            positions.sort_unstable_by(|&a, &b| text[a - k..=a].cmp(&text[b - k..=b]));
            for &i in &positions {
                let (context, next) = (&text[i - k..i], text[i]);
                match entries.last_mut() {
                    Some(e) if e.context == context => match e.followers.last_mut() {
                        Some((sym, count)) if *sym == next => *count += 1,
                        _ => e.followers.push((next, 1)),
                    },
                    _ => entries.push(ContextEntry {
                        context: context.to_vec(),
                        followers: vec![(next, 1)],
                    }),
                }
            }
        }
        ContextTable {
            order: k,
            sigma: s.sigma(),
            entries,
        }
    }

    pub(crate) fn from_entries(order: usize, sigma: usize, entries: Vec<ContextEntry>) -> Self {
        ContextTable { order, sigma, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn entries(&self) -> &[ContextEntry] {
        &self.entries
    }

    pub fn get(&self, context: &[Symbol]) -> Option<&ContextEntry> {
        self.entries
            .binary_search_by(|e| e.context.as_slice().cmp(context))
            .ok()
            .map(|i| &self.entries[i])
    }

    /// Dense follower counts of `context` (all zero if it never occurs).
    pub fn follower_counts(&self, context: &[Symbol]) -> FrequencyVector {
        let mut counts = vec![0u64; self.sigma];
        if let Some(e) = self.get(context) {
            for &(sym, c) in &e.followers {
                counts[sym as usize] = c;
            }
        }
        FrequencyVector::from_counts(counts)
    }

    /// `Σ_w |s_w|`.
    pub fn total(&self) -> u64 {
        self.entries.iter().map(ContextEntry::total).sum()
    }

    /// `Σ_w |s_w|·H_0(s_w)` in bits, i.e. `n·H_k(s)`.
    pub fn information(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| counts_information(e.followers.iter().map(|&(_, c)| c)))
            .collect::<NeumaierSum>()
            .value()
    }
}
