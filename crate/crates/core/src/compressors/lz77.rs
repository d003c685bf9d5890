//! Greedy LZ77 with an unbounded window, and the LZ76 production parse.
//!
//! Phrase payload: for each phrase, `offset` and `length` in
//! `⌈log2(n+1)⌉` bits each, then the next symbol in `⌈log2 σ⌉` bits. The
//! phrase count is implied by the original length in the container.

use serde::{Deserialize, Serialize};

use super::container::{Algorithm, CompressedBlob};
use super::matcher::PriorMatcher;
use crate::bitio::{BitReader, BitWriter};
use crate::{ceil_log2, Error, Result, Sequence, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lz77Phrase {
    /// Distance back to the copy source; 0 for a literal-only phrase.
    pub offset: usize,
    pub length: usize,
    pub next: Symbol,
}

fn require_nonempty(s: &Sequence, what: &'static str) -> Result<()> {
    if s.is_empty() {
        return Err(Error::param(what, "input must be non-empty"));
    }
    Ok(())
}

/// Number of phrases in the LZ76 exhaustive-history parse: each phrase
/// extends the longest prefix of the remainder that already starts at some
/// earlier position (the copy may overlap the phrase) by one symbol. The
/// last phrase may end without the extra symbol.
pub fn lz76_complexity(s: &Sequence) -> Result<usize> {
    require_nonempty(s, "sequence")?;
    let text = s.symbols();
    let n = text.len();
    let mut matcher = PriorMatcher::new(text);
    let (mut i, mut phrases) = (0, 0);
    while i < n {
        let len = matcher.longest_prior(i, n - i).map_or(0, |(_, l)| l);
        phrases += 1;
        let end = (i + len + 1).min(n);
        for p in i..end {
            matcher.insert(p);
        }
        i = end;
    }
    Ok(phrases)
}

pub fn lz77_parse(s: &Sequence) -> Result<Vec<Lz77Phrase>> {
    require_nonempty(s, "sequence")?;
    let text = s.symbols();
    let n = text.len();
    let mut matcher = PriorMatcher::new(text);
    let mut phrases = Vec::new();
    let mut i = 0;
    while i < n {
        let (offset, length) = matcher.longest_prior(i, n - i - 1).map_or((0, 0), |(j, l)| (i - j, l));
        phrases.push(Lz77Phrase {
            offset,
            length,
            next: text[i + length],
        });
        for p in i..=i + length {
            matcher.insert(p);
        }
        i += length + 1;
    }
    Ok(phrases)
}

/// Bits per phrase for a source of length `n` over `sigma` symbols.
pub fn lz77_phrase_bits(n: usize, sigma: usize) -> u64 {
    2 * ceil_log2(n as u64 + 1) as u64 + ceil_log2(sigma as u64) as u64
}

pub fn lz77_encode(s: &Sequence) -> Result<CompressedBlob> {
    let phrases = lz77_parse(s)?;
    let pos_width = ceil_log2(s.len() as u64 + 1);
    let sym_width = ceil_log2(s.sigma() as u64);
    let mut w = BitWriter::new();
    for p in &phrases {
        w.write_bits(p.offset as u64, pos_width);
        w.write_bits(p.length as u64, pos_width);
        w.write_bits(p.next as u64, sym_width);
    }
    let bits = w.bit_len();
    Ok(CompressedBlob::new(Algorithm::Lz77, s, w.into_bytes(), bits))
}

pub fn lz77_decode(blob: &CompressedBlob) -> Result<Sequence> {
    blob.expect(Algorithm::Lz77)?;
    let n = blob.original_len()?;
    let sigma = blob.alphabet.size();
    let pos_width = ceil_log2(n as u64 + 1);
    let sym_width = ceil_log2(sigma as u64);
    let mut r = BitReader::new(&blob.payload, blob.payload_bits, "lz77");
    let mut out: Vec<Symbol> = Vec::with_capacity(n);
    while out.len() < n {
        let offset = r.read_bits(pos_width)? as usize;
        let length = r.read_bits(pos_width)? as usize;
        let next = r.read_bits(sym_width)? as Symbol;
        if (offset == 0) != (length == 0) || offset > out.len() {
            return Err(r.malformed(format!("phrase (offset {offset}, length {length}) at output {}", out.len())));
        }
        if out.len() + length + 1 > n || next as usize >= sigma {
            return Err(r.malformed("phrase overruns the original length or alphabet"));
        }
        let start = out.len() - offset;
        for t in 0..length {
            out.push(out[start + t]);
        }
        out.push(next);
    }
    if r.remaining() != 0 {
        return Err(r.malformed("trailing payload bits"));
    }
    Sequence::new(blob.alphabet.clone(), out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::de_bruijn;
    use crate::{ingest, Alphabet, AlphabetMode, MemoryCap};
    use proptest::prelude::*;

    fn seq(text: &[u8]) -> Sequence {
        ingest(text, &AlphabetMode::Inferred).unwrap()
    }

    /// Brute-force greedy parse: longest match from any earlier start, ties
    /// to the nearest source.
    fn brute_parse(text: &[Symbol]) -> Vec<Lz77Phrase> {
        let n = text.len();
        let mut out = Vec::new();
        let mut i = 0;
        while i < n {
            let (mut off, mut len) = (0, 0);
            for j in 0..i {
                let l = (0..n - i - 1).take_while(|&t| text[j + t] == text[i + t]).count();
                if l > 0 && l >= len {
                    (off, len) = (i - j, l);
                }
            }
            out.push(Lz77Phrase {
                offset: off,
                length: len,
                next: text[i + len],
            });
            i += len + 1;
        }
        out
    }

    /// LZ76 by definition: extend each phrase while the candidate occurs
    /// starting strictly before its own last symbol's position.
    fn brute_lz76(text: &[Symbol]) -> usize {
        let n = text.len();
        let (mut i, mut count) = (0, 0);
        while i < n {
            let mut len = 0;
            while i + len < n && (0..i).any(|j| text[j..=j + len] == text[i..=i + len]) {
                len += 1;
            }
            count += 1;
            i = (i + len + 1).min(n);
        }
        count
    }

    #[test]
    fn constant_run() {
        let s = seq(b"AAAAAAA");
        let p = lz77_parse(&s).unwrap();
        assert_eq!(
            p,
            vec![
                Lz77Phrase { offset: 0, length: 0, next: 0 },
                Lz77Phrase { offset: 1, length: 5, next: 0 },
            ]
        );
        let blob = lz77_encode(&s).unwrap();
        assert_eq!(blob.payload_bits, 2 * lz77_phrase_bits(7, 1));
        assert_eq!(lz77_decode(&blob).unwrap(), s);
    }

    #[test]
    fn two_literals() {
        let p = lz77_parse(&seq(b"AB")).unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.iter().all(|x| x.offset == 0 && x.length == 0));
    }

    #[test]
    fn lz76_examples() {
        assert_eq!(lz76_complexity(&seq(b"A")).unwrap(), 1);
        let c = lz76_complexity(&seq(&[b'A'; 64])).unwrap();
        assert!(c <= 8);
        assert_eq!(c, 2);
        // the classical example 0001101001000101 parses as 0.001.10.100.1000.101
        assert_eq!(lz76_complexity(&seq(b"0001101001000101")).unwrap(), 6);
        let db = de_bruijn(2, 6, MemoryCap::default()).unwrap();
        let constant = Sequence::new(db.alphabet().clone(), vec![0; db.len()]).unwrap();
        assert!(lz76_complexity(&db).unwrap() > lz76_complexity(&constant).unwrap());
    }

    #[test]
    fn empty_input_rejected() {
        let e = ingest(b"", &AlphabetMode::Bytes).unwrap();
        assert!(lz77_parse(&e).is_err());
        assert!(lz76_complexity(&e).is_err());
    }

    #[test]
    fn corrupt_payload_rejected() {
        let s = seq(b"ABABABAB");
        let mut blob = lz77_encode(&s).unwrap();
        blob.payload_bits -= 1;
        assert!(lz77_decode(&blob).is_err());
        let mut blob = lz77_encode(&s).unwrap();
        blob.payload[0] |= 0x0f;
        assert!(matches!(lz77_decode(&blob), Err(Error::Malformed { .. })));
        let mut blob = lz77_encode(&s).unwrap();
        blob.algorithm = Algorithm::Lz78;
        assert!(lz77_decode(&blob).is_err());
    }

    fn small_sequence() -> impl Strategy<Value = Sequence> {
        (1usize..5).prop_flat_map(|sigma| {
            proptest::collection::vec(0..sigma as u32, 1..150).prop_map(move |data| {
                Sequence::new(Alphabet::new((b'a'..b'a' + sigma as u8).collect()).unwrap(), data).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn parse_matches_brute_force(s in small_sequence()) {
            prop_assert_eq!(lz77_parse(&s).unwrap(), brute_parse(s.symbols()));
            prop_assert_eq!(lz76_complexity(&s).unwrap(), brute_lz76(s.symbols()));
        }

        #[test]
        fn roundtrip(s in small_sequence()) {
            let blob = lz77_encode(&s).unwrap();
            let back = CompressedBlob::from_bytes(&blob.to_bytes()).unwrap();
            prop_assert_eq!(lz77_decode(&back).unwrap(), s);
        }
    }
}
