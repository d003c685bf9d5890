//! Burrows-Wheeler transform with an explicit sentinel.
//!
//! Symbols are shifted up by one so the sentinel is index 0, strictly
//! smallest. The transform of `s` is the last column of the sorted
//! rotations of `s$`, a string of length `n + 1` over `σ + 1` symbols.

use super::suffix_array::suffix_array;
use crate::{Alphabet, Error, Result, Sequence, Symbol};

pub const SENTINEL: Symbol = 0;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BwtResult {
    pub alphabet: Alphabet,
    /// Last column; source symbol `c` appears as `c + 1`.
    pub transformed: Vec<Symbol>,
    /// Row of the transformed column holding the sentinel.
    pub sentinel_position: usize,
}

impl BwtResult {
    /// The column rendered with the alphabet's bytes and `marker` for the
    /// sentinel.
    pub fn render(&self, marker: u8) -> Vec<u8> {
        self.transformed
            .iter()
            .map(|&c| match c {
                SENTINEL => marker,
                c => self.alphabet.symbol(c - 1).unwrap_or(b'?'),
            })
            .collect()
    }
}

pub fn bwt(s: &Sequence) -> Result<BwtResult> {
    if s.is_empty() {
        return Err(Error::param("sequence", "input must be non-empty"));
    }
    let mut text: Vec<Symbol> = s.symbols().iter().map(|&c| c + 1).collect();
    text.push(SENTINEL);
    let sa = suffix_array(&text);
    let n1 = text.len();
    let mut sentinel_position = 0;
    let transformed = sa
        .iter()
        .enumerate()
        .map(|(row, &p)| {
            if p == 0 {
                sentinel_position = row;
                text[n1 - 1]
            } else {
                text[p as usize - 1]
            }
        })
        .collect();
    Ok(BwtResult {
        alphabet: s.alphabet().clone(),
        transformed,
        sentinel_position,
    })
}

pub fn ibwt(result: &BwtResult) -> Result<Sequence> {
    let malformed = |pos: usize, reason: String| Error::malformed("bwt", pos as u64, reason);
    let column = &result.transformed;
    let sigma1 = result.alphabet.size() + 1;
    let mut sentinels = 0;
    let mut counts = vec![0usize; sigma1 + 1];
    for (i, &c) in column.iter().enumerate() {
        if c as usize >= sigma1 {
            return Err(malformed(i, format!("symbol {c} outside alphabet of size {sigma1}")));
        }
        if c == SENTINEL {
            sentinels += 1;
        }
        counts[c as usize + 1] += 1;
    }
    if sentinels != 1 {
        return Err(malformed(0, format!("expected one sentinel, found {sentinels}")));
    }
    if column[result.sentinel_position.min(column.len() - 1)] != SENTINEL {
        return Err(malformed(result.sentinel_position, "sentinel position disagrees with column".into()));
    }
    for c in 1..=sigma1 {
        counts[c] += counts[c - 1];
    }
    // LF mapping: row i's last symbol starts row lf[i]
    let mut lf = vec![0usize; column.len()];
    for (i, &c) in column.iter().enumerate() {
        lf[i] = counts[c as usize];
        counts[c as usize] += 1;
    }
    // row 0 is the rotation starting with the sentinel, i.e. ending in s[n-1]
    let n = column.len() - 1;
    let mut out = vec![0 as Symbol; n];
    let mut row = 0;
    for slot in out.iter_mut().rev() {
        let c = column[row];
        if c == SENTINEL {
            return Err(malformed(row, "cycle closes before the full length".into()));
        }
        *slot = c - 1;
        row = lf[row];
    }
    if column[row] != SENTINEL {
        return Err(malformed(row, "walk does not return to the sentinel".into()));
    }
    Sequence::new(result.alphabet.clone(), out)
}
