//! The `CompressedBlob` container.
//!
//! Byte layout, all integers little-endian:
//!
//! | field            | size        |
//! |------------------|-------------|
//! | magic `ELB1`     | 4           |
//! | algorithm id     | 1           |
//! | original length  | 8           |
//! | σ                | 2           |
//! | alphabet symbols | σ           |
//! | payload bits     | 8           |
//! | payload          | ⌈bits / 8⌉  |
//!
//! Algorithm ids: 1 = LZ77, 2 = LZ78, 3 = order-0 arithmetic, 4 = BWT
//! pipeline. Payload bits are packed LSB-first (bit `i` is bit `i % 8` of
//! byte `i / 8`) and the final byte is zero-padded. Padding is the only
//! byte-granular quantity and is reported apart from the header and payload.

use serde::{Deserialize, Serialize};

use crate::{Alphabet, Error, Result, Sequence};

pub const BLOB_MAGIC: &[u8; 4] = b"ELB1";

const STAGE: &str = "container";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Lz77,
    Lz78,
    Order0,
    Bwt,
}

impl Algorithm {
    pub fn id(self) -> u8 {
        match self {
            Algorithm::Lz77 => 1,
            Algorithm::Lz78 => 2,
            Algorithm::Order0 => 3,
            Algorithm::Bwt => 4,
        }
    }

    pub fn from_id(id: u8) -> Option<Self> {
        match id {
            1 => Some(Algorithm::Lz77),
            2 => Some(Algorithm::Lz78),
            3 => Some(Algorithm::Order0),
            4 => Some(Algorithm::Bwt),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Lz77 => "lz77",
            Algorithm::Lz78 => "lz78",
            Algorithm::Order0 => "order0",
            Algorithm::Bwt => "bwt",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompressedBlob {
    pub algorithm: Algorithm,
    pub original_len: u64,
    pub alphabet: Alphabet,
    pub payload: Vec<u8>,
    pub payload_bits: u64,
}

impl CompressedBlob {
    pub(crate) fn new(algorithm: Algorithm, source: &Sequence, payload: Vec<u8>, payload_bits: u64) -> Self {
        debug_assert_eq!(payload.len() as u64, payload_bits.div_ceil(8));
        CompressedBlob {
            algorithm,
            original_len: source.len() as u64,
            alphabet: source.alphabet().clone(),
            payload,
            payload_bits,
        }
    }

    pub fn header_bits(&self) -> u64 {
        8 * (4 + 1 + 8 + 2 + self.alphabet.size() as u64 + 8)
    }

    /// Header plus payload bits, excluding the final byte's padding.
    pub fn total_bits(&self) -> u64 {
        self.header_bits() + self.payload_bits
    }

    pub fn padding_bits(&self) -> u64 {
        self.payload.len() as u64 * 8 - self.payload_bits
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity((self.header_bits() / 8) as usize + self.payload.len());
        out.extend_from_slice(BLOB_MAGIC);
        out.push(self.algorithm.id());
        out.extend_from_slice(&self.original_len.to_le_bytes());
        out.extend_from_slice(&(self.alphabet.size() as u16).to_le_bytes());
        out.extend_from_slice(self.alphabet.symbols());
        out.extend_from_slice(&self.payload_bits.to_le_bytes());
        out.extend_from_slice(&self.payload);
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut at = 0usize;
        let mut take = |len: usize| -> Result<&[u8]> {
            let field = bytes
                .get(at..at + len)
                .ok_or_else(|| Error::malformed(STAGE, 8 * at as u64, "truncated header"))?;
            at += len;
            Ok(field)
        };
        if take(4)? != BLOB_MAGIC {
            return Err(Error::malformed(STAGE, 0, "bad magic"));
        }
        let id = take(1)?[0];
        let algorithm =
            Algorithm::from_id(id).ok_or_else(|| Error::malformed(STAGE, 32, format!("unknown algorithm id {id}")))?;
        let original_len = u64::from_le_bytes(take(8)?.try_into().unwrap());
        let sigma = u16::from_le_bytes(take(2)?.try_into().unwrap()) as usize;
        let alphabet = Alphabet::new(take(sigma)?.to_vec())
            .map_err(|e| Error::malformed(STAGE, 15 * 8, format!("alphabet: {e}")))?;
        let bits_at = 8 * (15 + sigma) as u64;
        let payload_bits = u64::from_le_bytes(take(8)?.try_into().unwrap());
        let payload = &bytes[at..];
        if payload_bits.div_ceil(8) != payload.len() as u64 {
            return Err(Error::malformed(
                STAGE,
                bits_at,
                format!("payload of {payload_bits} bits does not fill {} bytes", payload.len()),
            ));
        }
        if payload_bits % 8 != 0 && payload.last().unwrap() >> (payload_bits % 8) != 0 {
            return Err(Error::malformed(STAGE, 8 * at as u64 + payload_bits, "nonzero padding"));
        }
        Ok(CompressedBlob {
            algorithm,
            original_len,
            alphabet,
            payload: payload.to_vec(),
            payload_bits,
        })
    }

    /// Decode with the algorithm named in the header.
    pub fn decode(&self) -> Result<Sequence> {
        match self.algorithm {
            Algorithm::Lz77 => super::lz77_decode(self),
            Algorithm::Lz78 => super::lz78_decode(self),
            Algorithm::Order0 => super::order0_decode(self),
            Algorithm::Bwt => super::bwt_pipeline_decode(self),
        }
    }

    pub(crate) fn expect(&self, algorithm: Algorithm) -> Result<()> {
        if self.algorithm != algorithm {
            return Err(Error::malformed(
                STAGE,
                32,
                format!("expected a {} blob, found {}", algorithm.name(), self.algorithm.name()),
            ));
        }
        Ok(())
    }

    pub(crate) fn original_len(&self) -> Result<usize> {
        usize::try_from(self.original_len).map_err(|_| Error::malformed(STAGE, 40, "original length too large"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blob() -> CompressedBlob {
        CompressedBlob {
            algorithm: Algorithm::Lz78,
            original_len: 5,
            alphabet: Alphabet::new(b"ab".to_vec()).unwrap(),
            payload: vec![0b0001_0110],
            payload_bits: 5,
        }
    }

    #[test]
    fn layout_and_accounting() {
        let b = blob();
        let bytes = b.to_bytes();
        assert_eq!(&bytes[..4], b"ELB1");
        assert_eq!(bytes[4], 2);
        assert_eq!(bytes.len(), 4 + 1 + 8 + 2 + 2 + 8 + 1);
        assert_eq!(b.header_bits(), 200);
        assert_eq!(b.total_bits(), 205);
        assert_eq!(b.padding_bits(), 3);
        assert_eq!(CompressedBlob::from_bytes(&bytes).unwrap(), b);
    }

    #[test]
    fn rejects_corruption() {
        let bytes = blob().to_bytes();
        let err = |b: &[u8]| CompressedBlob::from_bytes(b).unwrap_err();
        assert!(matches!(err(b"nope"), Error::Malformed { bit_offset: 0, .. }));
        assert!(matches!(err(&bytes[..10]), Error::Malformed { .. }));
        let mut bad = bytes.clone();
        bad[4] = 9;
        assert!(matches!(err(&bad), Error::Malformed { bit_offset: 32, .. }));
        let mut bad = bytes.clone();
        *bad.last_mut().unwrap() |= 0x80;
        assert!(matches!(err(&bad), Error::Malformed { .. }));
        let mut bad = bytes.clone();
        bad.push(0);
        assert!(matches!(err(&bad), Error::Malformed { .. }));
        let mut bad = bytes;
        bad[15] = b'a';
        bad[16] = b'a';
        assert!(matches!(err(&bad), Error::Malformed { .. }));
    }
}
