//! BWT → MTF → RLE0 → order-0 arithmetic coding.
//!
//! Payload: the token count `m` in 64 bits, then an order-0 section over the
//! `σ + 2` RLE token values (count table and code). The BWT column includes
//! its sentinel, so no primary index is stored.

use serde::{Deserialize, Serialize};

use super::bwt::{bwt, ibwt, BwtResult, SENTINEL};
use super::container::{Algorithm, CompressedBlob};
use super::mtf::{imtf, mtf};
use super::order0::{decode_section, empirical_information, encode_section};
use super::rle::{rle0, unrle0};
use crate::bitio::{BitReader, BitWriter};
use crate::{Result, Sequence};

pub const TOKEN_COUNT_BITS: u64 = 64;

/// Per-stage accounting of one pipeline run, in bits unless noted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub n: u64,
    pub sigma: u64,
    /// Symbols in the BWT column (`n + 1`).
    pub bwt_symbols: u64,
    /// Zero ranks in the MTF output.
    pub mtf_zero_ranks: u64,
    /// RLE tokens fed to the entropy coder.
    pub rle_tokens: u64,
    pub token_count_bits: u64,
    pub count_table_bits: u64,
    pub code_bits: u64,
    pub payload_bits: u64,
    pub header_bits: u64,
    pub padding_bits: u64,
    /// Header plus payload.
    pub total_bits: u64,
    /// `m·H_0` of the token stream: the ideal order-0 code length.
    pub token_information: f64,
}

impl PipelineReport {
    /// The coder's own overhead per source symbol:
    /// `(code bits − m·H_0(tokens)) / n`.
    pub fn effective_mu(&self) -> f64 {
        (self.code_bits as f64 - self.token_information) / self.n as f64
    }

    /// Whether the itemized stages add up to the total.
    pub fn is_consistent(&self) -> bool {
        self.token_count_bits + self.count_table_bits + self.code_bits == self.payload_bits
            && self.header_bits + self.payload_bits == self.total_bits
    }
}

pub fn bwt_pipeline_encode(s: &Sequence) -> Result<(CompressedBlob, PipelineReport)> {
    let transformed = bwt(s)?;
    let sigma1 = s.sigma() + 1;
    let ranks = mtf(&transformed.transformed, sigma1)?;
    let mtf_zero_ranks = ranks.iter().filter(|&&r| r == 0).count() as u64;
    let tokens = rle0(&ranks);
    let mut w = BitWriter::new();
    w.write_bits(tokens.len() as u64, TOKEN_COUNT_BITS as u32);
    let section = encode_section(&mut w, &tokens, sigma1 + 1)?;
    let payload_bits = w.bit_len();
    let blob = CompressedBlob::new(Algorithm::Bwt, s, w.into_bytes(), payload_bits);
    let report = PipelineReport {
        n: s.len() as u64,
        sigma: s.sigma() as u64,
        bwt_symbols: transformed.transformed.len() as u64,
        mtf_zero_ranks,
        rle_tokens: tokens.len() as u64,
        token_count_bits: TOKEN_COUNT_BITS,
        count_table_bits: section.count_table,
        code_bits: section.code,
        payload_bits,
        header_bits: blob.header_bits(),
        padding_bits: blob.padding_bits(),
        total_bits: blob.total_bits(),
        token_information: empirical_information(&tokens, sigma1 + 1),
    };
    Ok((blob, report))
}

pub fn bwt_pipeline_decode(blob: &CompressedBlob) -> Result<Sequence> {
    blob.expect(Algorithm::Bwt)?;
    let n = blob.original_len()?;
    let sigma1 = blob.alphabet.size() + 1;
    let mut r = BitReader::new(&blob.payload, blob.payload_bits, "bwt-pipeline");
    let m = r.read_bits(TOKEN_COUNT_BITS as u32)?;
    // every token yields at least one rank
    if m > n as u64 + 1 {
        return Err(r.malformed(format!("{m} tokens for {} column symbols", n + 1)));
    }
    let tokens = decode_section(&mut r, m, sigma1 + 1)?;
    let ranks = unrle0(&tokens, sigma1, n + 1)?;
    if ranks.len() != n + 1 {
        return Err(r.malformed(format!("decoded {} column symbols, expected {}", ranks.len(), n + 1)));
    }
    let column = imtf(&ranks, sigma1)?;
    let sentinel_position = column.iter().position(|&c| c == SENTINEL).unwrap_or(0);
    ibwt(&BwtResult {
        alphabet: blob.alphabet.clone(),
        transformed: column,
        sentinel_position,
    })
}
