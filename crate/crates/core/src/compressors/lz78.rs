//! LZ78 trie parsing.
//!
//! Phrase `t` (numbered from 1) stores its parent id in `⌈log2 t⌉` bits
//! (the parent is one of phrases `0..t`, 0 being the empty phrase) followed
//! by its extension symbol in `⌈log2 σ⌉` bits. When the input ends inside an
//! existing dictionary phrase, the final phrase has no extension; the
//! decoder recognizes it because the parent alone exactly fills the
//! remaining length, so the "no extension" marker costs no bits.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::container::{Algorithm, CompressedBlob};
use crate::bitio::{BitReader, BitWriter};
use crate::{ceil_log2, Error, Result, Sequence, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lz78Phrase {
    pub parent: u32,
    /// `None` only for a final phrase that repeats an existing one.
    pub extension: Option<Symbol>,
}

pub fn lz78_parse(s: &Sequence) -> Result<Vec<Lz78Phrase>> {
    if s.is_empty() {
        return Err(Error::param("sequence", "input must be non-empty"));
    }
    let mut children: HashMap<(u32, Symbol), u32> = HashMap::new();
    let mut phrases = Vec::new();
    let mut node = 0u32;
    for &c in s.symbols() {
        match children.get(&(node, c)) {
            Some(&child) => node = child,
            None => {
                phrases.push(Lz78Phrase {
                    parent: node,
                    extension: Some(c),
                });
                children.insert((node, c), phrases.len() as u32);
                node = 0;
            }
        }
    }
    if node != 0 {
        phrases.push(Lz78Phrase {
            parent: node,
            extension: None,
        });
    }
    Ok(phrases)
}

pub fn lz78_encode(s: &Sequence) -> Result<CompressedBlob> {
    let phrases = lz78_parse(s)?;
    let sym_width = ceil_log2(s.sigma() as u64);
    let mut w = BitWriter::new();
    for (i, p) in phrases.iter().enumerate() {
        w.write_bits(p.parent as u64, ceil_log2(i as u64 + 1));
        if let Some(c) = p.extension {
            w.write_bits(c as u64, sym_width);
        }
    }
    let bits = w.bit_len();
    Ok(CompressedBlob::new(Algorithm::Lz78, s, w.into_bytes(), bits))
}

pub fn lz78_decode(blob: &CompressedBlob) -> Result<Sequence> {
    blob.expect(Algorithm::Lz78)?;
    let n = blob.original_len()?;
    let sigma = blob.alphabet.size();
    let sym_width = ceil_log2(sigma as u64);
    let mut r = BitReader::new(&blob.payload, blob.payload_bits, "lz78");
    let mut out: Vec<Symbol> = Vec::with_capacity(n);
    // (start, length) of each phrase inside `out`; id 0 is the empty phrase
    let mut spans: Vec<(usize, usize)> = vec![(0, 0)];
    while out.len() < n {
        let t = spans.len() as u64;
        let parent = r.read_bits(ceil_log2(t))? as usize;
        if parent >= spans.len() {
            return Err(r.malformed(format!("phrase {t} refers to unknown phrase {parent}")));
        }
        let (start, len) = spans[parent];
        let remaining = n - out.len();
        if len > remaining {
            return Err(r.malformed("phrase overruns the original length"));
        }
        let begin = out.len();
        out.extend_from_within(start..start + len);
        if len == remaining {
            if parent == 0 {
                return Err(r.malformed("empty final phrase"));
            }
            break;
        }
        let c = r.read_bits(sym_width)? as Symbol;
        if c as usize >= sigma {
            return Err(r.malformed(format!("symbol {c} outside alphabet of size {sigma}")));
        }
        out.push(c);
        spans.push((begin, len + 1));
    }
    if r.remaining() != 0 {
        return Err(r.malformed("trailing payload bits"));
    }
    Sequence::new(blob.alphabet.clone(), out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ingest, Alphabet, AlphabetMode};
    use proptest::prelude::*;

    fn seq(text: &[u8]) -> Sequence {
        ingest(text, &AlphabetMode::Inferred).unwrap()
    }

    /// Dictionary of explicit strings, scanned linearly.
    fn brute_parse(text: &[Symbol]) -> Vec<Lz78Phrase> {
        let mut dict: Vec<Vec<Symbol>> = vec![vec![]];
        let mut out = Vec::new();
        let mut i = 0;
        while i < text.len() {
            let (mut best, mut best_len) = (0, 0);
            for (id, w) in dict.iter().enumerate() {
                if w.len() > best_len && text[i..].starts_with(w) {
                    (best, best_len) = (id, w.len());
                }
            }
            if i + best_len == text.len() {
                out.push(Lz78Phrase { parent: best as u32, extension: None });
                break;
            }
            out.push(Lz78Phrase { parent: best as u32, extension: Some(text[i + best_len]) });
            dict.push(text[i..=i + best_len].to_vec());
            i += best_len + 1;
        }
        out
    }

    #[test]
    fn aaaa() {
        let s = seq(b"AAAA");
        let p = lz78_parse(&s).unwrap();
        assert_eq!(
            p,
            vec![
                Lz78Phrase { parent: 0, extension: Some(0) },
                Lz78Phrase { parent: 1, extension: Some(0) },
                Lz78Phrase { parent: 1, extension: None },
            ]
        );
        // σ = 1: parents in 0, 1 and 2 bits, no symbol bits
        let blob = lz78_encode(&s).unwrap();
        assert_eq!(blob.payload_bits, 3);
        assert_eq!(lz78_decode(&blob).unwrap(), s);
    }

    #[test]
    fn single_symbol() {
        let s = seq(b"Z");
        assert_eq!(lz78_parse(&s).unwrap().len(), 1);
        assert_eq!(lz78_decode(&lz78_encode(&s).unwrap()).unwrap(), s);
    }

    #[test]
    fn corrupt_payload_rejected() {
        let s = seq(b"ABAABABAABAAB");
        let good = lz78_encode(&s).unwrap();
        let mut blob = good.clone();
        blob.payload_bits += 8;
        blob.payload.push(0xff);
        assert!(lz78_decode(&blob).is_err());
        let mut blob = good.clone();
        blob.payload_bits = 3;
        blob.payload.truncate(1);
        blob.payload[0] &= 0b111;
        assert!(matches!(lz78_decode(&blob), Err(Error::Malformed { stage: "lz78", .. })));
        let mut blob = good;
        blob.original_len += 50;
        assert!(lz78_decode(&blob).is_err());
    }

    fn small_sequence() -> impl Strategy<Value = Sequence> {
        (1usize..6).prop_flat_map(|sigma| {
            proptest::collection::vec(0..sigma as u32, 1..200).prop_map(move |data| {
                Sequence::new(Alphabet::new((b'a'..b'a' + sigma as u8).collect()).unwrap(), data).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn parse_matches_brute_force(s in small_sequence()) {
            prop_assert_eq!(lz78_parse(&s).unwrap(), brute_parse(s.symbols()));
        }

        #[test]
        fn roundtrip(s in small_sequence()) {
            let blob = CompressedBlob::from_bytes(&lz78_encode(&s).unwrap().to_bytes()).unwrap();
            prop_assert_eq!(lz78_decode(&blob).unwrap(), s);
        }
    }
}
