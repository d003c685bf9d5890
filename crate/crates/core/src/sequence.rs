//! Alphabets, sequences and symbol frequencies.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Index of a symbol within its [`Alphabet`].
pub type Symbol = u32;

const ABSENT: u16 = u16::MAX;

/// An ordered set of distinct byte symbols. Symbol `i` is `symbols()[i]`.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<u8>,
    index: [u16; 256],
}

impl Alphabet {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet must contain at least one symbol".into()));
        }
        let mut index = [ABSENT; 256];
        for (i, &b) in symbols.iter().enumerate() {
            if index[b as usize] != ABSENT {
                return Err(Error::InvalidAlphabet(format!("symbol 0x{b:02x} declared twice")));
            }
            index[b as usize] = i as u16;
        }
        Ok(Alphabet { symbols, index })
    }

    /// All 256 byte values in numeric order.
    pub fn bytes() -> Self {
        Self::new((0..=255).collect()).expect("byte alphabet is valid")
    }

    /// The observed byte values of `data`, sorted.
    pub fn inferred(data: &[u8]) -> Result<Self> {
        let mut seen = [false; 256];
        for &b in data {
            seen[b as usize] = true;
        }
        let symbols: Vec<u8> = (0..=255u8).filter(|&b| seen[b as usize]).collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("cannot infer an alphabet from empty input".into()));
        }
        Self::new(symbols)
    }

    /// Digit alphabet for base `b`: `0-9a-zA-Z` up to base 62, raw byte
    /// values `0..b` for larger bases.
    pub fn digits(base: usize) -> Result<Self> {
        const DIGITS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
        match base {
            0 => Err(Error::param("base", "must be at least 1")),
            1..=62 => Self::new(DIGITS[..base].to_vec()),
            63..=256 => Self::new((0..base).map(|b| b as u8).collect()),
            _ => Err(Error::param("base", format!("{base} exceeds the byte alphabet"))),
        }
    }

    /// Parse an alphabet declaration: one symbol per line, order significant.
    ///
    /// A line is either a single byte or one of the escapes `\n`, `\r`,
    /// `\t`, `\\`, `\s` (space) or `\xHH`. Blank lines are ignored.
    pub fn parse_declaration(text: &[u8]) -> Result<Self> {
        let mut symbols = Vec::new();
        for (lineno, raw) in text.split(|&b| b == b'\n').enumerate() {
            let line = raw.strip_suffix(b"\r").unwrap_or(raw);
            if line.is_empty() {
                continue;
            }
            let sym = match line {
                [b] => *b,
                b"\\n" => b'\n',
                b"\\r" => b'\r',
                b"\\t" => b'\t',
                b"\\\\" => b'\\',
                b"\\s" => b' ',
                [b'\\', b'x', hi, lo] => std::str::from_utf8(&[*hi, *lo])
                    .ok()
                    .and_then(|h| u8::from_str_radix(h, 16).ok())
                    .ok_or_else(|| Error::InvalidAlphabet(format!("line {}: bad hex escape", lineno + 1)))?,
                _ => {
                    return Err(Error::InvalidAlphabet(format!(
                        "line {}: expected a single symbol, found {:?}",
                        lineno + 1,
                        String::from_utf8_lossy(line)
                    )))
                }
            };
            symbols.push(sym);
        }
        Self::new(symbols)
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn index_of(&self, byte: u8) -> Option<Symbol> {
        match self.index[byte as usize] {
            ABSENT => None,
            i => Some(i as Symbol),
        }
    }

    pub fn symbol(&self, index: Symbol) -> Option<u8> {
        self.symbols.get(index as usize).copied()
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({:?})", String::from_utf8_lossy(&self.symbols))
    }
}

/// How [`ingest`] maps bytes to symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphabetMode {
    /// All 256 byte values.
    Bytes,
    /// Exactly the declared symbols; any other byte is rejected.
    Explicit(Alphabet),
    /// The sorted set of bytes that actually occur.
    Inferred,
}

/// A finite string of symbol indices over an explicit alphabet.
#[derive(Clone, PartialEq, Eq)]
pub struct Sequence {
    alphabet: Alphabet,
    data: Vec<Symbol>,
}

impl Sequence {
    pub fn new(alphabet: Alphabet, data: Vec<Symbol>) -> Result<Self> {
        let sigma = alphabet.size();
        if let Some((position, &symbol)) = data.iter().enumerate().find(|(_, &s)| s as usize >= sigma) {
            return Err(Error::SymbolOutOfRange {
                symbol,
                position,
                sigma,
            });
        }
        Ok(Sequence { alphabet, data })
    }

    /// Map bytes through `alphabet`, rejecting bytes it does not contain.
    pub fn from_bytes(alphabet: Alphabet, bytes: &[u8]) -> Result<Self> {
        let data = bytes
            .iter()
            .enumerate()
            .map(|(offset, &byte)| alphabet.index_of(byte).ok_or(Error::UndeclaredSymbol { byte, offset }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Sequence { alphabet, data })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn sigma(&self) -> usize {
        self.alphabet.size()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.data
    }

    /// The byte stream this sequence denotes.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.data.iter().map(|&s| self.alphabet.symbols[s as usize]).collect()
    }
}

impl fmt::Debug for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const PREVIEW: usize = 64;
        let bytes: Vec<u8> = self.to_bytes().into_iter().take(PREVIEW).collect();
        write!(f, "Sequence(n={}, sigma={}, {:?}", self.len(), self.sigma(), String::from_utf8_lossy(&bytes))?;
        if self.len() > PREVIEW {
            write!(f, "...")?;
        }
        write!(f, ")")
    }
}

/// Read raw bytes into a [`Sequence`].
pub fn ingest(bytes: &[u8], mode: &AlphabetMode) -> Result<Sequence> {
    let alphabet = match mode {
        AlphabetMode::Bytes => Alphabet::bytes(),
        AlphabetMode::Explicit(a) => a.clone(),
        AlphabetMode::Inferred => Alphabet::inferred(bytes)?,
    };
    Sequence::from_bytes(alphabet, bytes)
}

/// Occurrence count of every alphabet symbol.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrequencyVector {
    counts: Vec<u64>,
    total: u64,
}

impl FrequencyVector {
    pub fn from_symbols(symbols: &[Symbol], sigma: usize) -> Self {
        let mut counts = vec![0u64; sigma];
        for &s in symbols {
            counts[s as usize] += 1;
        }
        FrequencyVector {
            counts,
            total: symbols.len() as u64,
        }
    }

    pub fn from_counts(counts: Vec<u64>) -> Self {
        let total = counts.iter().sum();
        FrequencyVector { counts, total }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn count(&self, symbol: Symbol) -> u64 {
        self.counts.get(symbol as usize).copied().unwrap_or(0)
    }
}

pub fn frequencies(s: &Sequence) -> FrequencyVector {
    FrequencyVector::from_symbols(s.symbols(), s.sigma())
}

/// Upper bound, in bytes, on any dense table or buffer the library
/// materializes from a size parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemoryCap(pub u64);

impl MemoryCap {
    pub const DEFAULT: MemoryCap = MemoryCap(2 << 30);

    pub fn check(self, what: &'static str, required: u128) -> Result<()> {
        if required > self.0 as u128 {
            Err(Error::CapExceeded {
                what,
                required,
                cap: self.0,
            })
        } else {
            Ok(())
        }
    }

    /// Reject an output of `n` symbols that would not fit under the cap.
    pub fn check_length(self, n: usize) -> Result<()> {
        self.check("sequence of length n", n as u128 * std::mem::size_of::<Symbol>() as u128)
    }
}

impl Default for MemoryCap {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// `base^exp`, or `None` on overflow.
pub(crate) fn checked_pow(base: usize, exp: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base as u128)?;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nort() -> Alphabet {
        Alphabet::new(b"NORT".to_vec()).unwrap()
    }

    #[test]
    fn toronto_over_explicit_alphabet() {
        let s = ingest(b"TORONTO", &AlphabetMode::Explicit(nort())).unwrap();
        assert_eq!(s.len(), 7);
        assert_eq!(s.sigma(), 4);
        assert_eq!(s.symbols(), &[3, 1, 2, 1, 0, 3, 1]);
        assert_eq!(frequencies(&s).counts(), &[1, 3, 1, 2]);
        assert_eq!(frequencies(&s).total(), 7);
    }

    #[test]
    fn empty_stream_gives_empty_sequence() {
        let s = ingest(b"", &AlphabetMode::Explicit(nort())).unwrap();
        assert!(s.is_empty());
        let f = frequencies(&s);
        assert_eq!(f.counts(), &[0, 0, 0, 0]);
        assert_eq!(f.total(), 0);
    }

    #[test]
    fn byte_mode_is_identity() {
        let s = ingest(b"AAB", &AlphabetMode::Bytes).unwrap();
        assert_eq!(s.sigma(), 256);
        assert_eq!(s.symbols(), &[65, 65, 66]);
    }

    #[test]
    fn constant_string_frequencies() {
        let s = ingest(b"AAAA", &AlphabetMode::Inferred).unwrap();
        assert_eq!(s.sigma(), 1);
        assert_eq!(frequencies(&s).counts(), &[4]);
    }

    #[test]
    fn undeclared_symbol_names_byte_and_offset() {
        let err = ingest(b"TORXNTO", &AlphabetMode::Explicit(nort())).unwrap_err();
        assert_eq!(err, Error::UndeclaredSymbol { byte: b'X', offset: 3 });
    }

    #[test]
    fn alphabet_rejects_duplicates_and_empty() {
        assert!(Alphabet::new(b"ABA".to_vec()).is_err());
        assert!(Alphabet::new(Vec::new()).is_err());
        assert!(Alphabet::inferred(b"").is_err());
    }

    #[test]
    fn declaration_file_with_escapes() {
        let a = Alphabet::parse_declaration(b"T\nO\n\\n\n\\x00\n\\s\r\n\nR\n").unwrap();
        assert_eq!(a.symbols(), &[b'T', b'O', b'\n', 0, b' ', b'R']);
        assert!(Alphabet::parse_declaration(b"AB\n").is_err());
        assert!(Alphabet::parse_declaration(b"\\xZZ\n").is_err());
    }

    #[test]
    fn sequence_rejects_out_of_range_symbols() {
        let err = Sequence::new(nort(), vec![0, 4]).unwrap_err();
        assert!(matches!(err, Error::SymbolOutOfRange { symbol: 4, position: 1, sigma: 4 }));
    }

    #[test]
    fn digit_alphabets() {
        assert_eq!(Alphabet::digits(10).unwrap().symbols(), b"0123456789");
        assert_eq!(Alphabet::digits(100).unwrap().symbol(99), Some(99));
        assert!(Alphabet::digits(257).is_err());
    }

    #[test]
    fn memory_cap_check() {
        assert!(MemoryCap(10).check("t", 10).is_ok());
        assert!(matches!(MemoryCap(10).check("t", 11), Err(Error::CapExceeded { .. })));
    }

    proptest! {
        #[test]
        fn ingest_round_trips(bytes in proptest::collection::vec(any::<u8>(), 0..512)) {
            let byte_mode = ingest(&bytes, &AlphabetMode::Bytes).unwrap();
            prop_assert_eq!(byte_mode.to_bytes(), bytes.clone());
            if !bytes.is_empty() {
                let inferred = ingest(&bytes, &AlphabetMode::Inferred).unwrap();
                prop_assert_eq!(inferred.to_bytes(), bytes);
            }
        }

        #[test]
        fn frequencies_are_permutation_invariant(
            mut bytes in proptest::collection::vec(0u8..6, 1..256),
            seed in any::<u64>(),
        ) {
            let a = Alphabet::new((0..6).collect()).unwrap();
            let before = frequencies(&Sequence::from_bytes(a.clone(), &bytes).unwrap());
            // Fisher-Yates driven by a xorshift stream
            let mut x = seed | 1;
            for i in (1..bytes.len()).rev() {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                bytes.swap(i, (x % (i as u64 + 1)) as usize);
            }
            let after = frequencies(&Sequence::from_bytes(a, &bytes).unwrap());
            prop_assert_eq!(before.counts().iter().sum::<u64>(), before.total());
            prop_assert_eq!(before, after);
        }
    }
}
