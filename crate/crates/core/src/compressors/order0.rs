//! Semi-static order-0 arithmetic coding.
//!
//! Payload: `σ` symbol counts in `⌈log2(n+1)⌉` bits each, then the
//! arithmetic code. The coder is the integer range coder of Witten, Neal
//! and Cleary with 62-bit registers and underflow (E3) handling; its final
//! flush emits two bits plus pending underflow bits. Total coded length is
//! at most `n·H_0 + 2 + ORDER0_SLACK_BITS` for `n ≤ 2^30`; register rounding
//! costs under `n·n·2^-60·log2(e)` bits, well below the slack.

use super::container::{Algorithm, CompressedBlob};
use crate::bitio::{BitReader, BitWriter};
use crate::{ceil_log2, Error, Result, Sequence, Symbol};

/// Documented coder slack `c` beyond `n·H_0 + 2`.
pub const ORDER0_SLACK_BITS: f64 = 1.0;

const PRECISION: u32 = 62;
const WHOLE: u64 = 1 << PRECISION;
const HALF: u64 = WHOLE / 2;
const QUARTER: u64 = WHOLE / 4;
/// Largest total count accepted, leaving ample register headroom.
pub(crate) const MAX_TOTAL: u64 = 1 << 40;

/// Bit counts of an order-0 coded section.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub(crate) struct SectionBits {
    pub count_table: u64,
    pub code: u64,
}

fn cumulative(counts: &[u64]) -> Vec<u64> {
    let mut cum = Vec::with_capacity(counts.len() + 1);
    cum.push(0);
    for &c in counts {
        cum.push(cum.last().unwrap() + c);
    }
    cum
}

struct Encoder<'w> {
    low: u64,
    high: u64,
    pending: u64,
    out: &'w mut BitWriter,
}

impl Encoder<'_> {
    fn emit(&mut self, bit: bool) {
        self.out.write_bit(bit);
        for _ in 0..self.pending {
            self.out.write_bit(!bit);
        }
        self.pending = 0;
    }

    fn encode(&mut self, lo: u64, hi: u64, total: u64) {
        let range = (self.high - self.low + 1) as u128;
        self.high = self.low + (range * hi as u128 / total as u128) as u64 - 1;
        self.low += (range * lo as u128 / total as u128) as u64;
        loop {
            if self.high < HALF {
                self.emit(false);
            } else if self.low >= HALF {
                self.emit(true);
                self.low -= HALF;
                self.high -= HALF;
            } else if self.low >= QUARTER && self.high < HALF + QUARTER {
                self.pending += 1;
                self.low -= QUARTER;
                self.high -= QUARTER;
            } else {
                break;
            }
            self.low <<= 1;
            self.high = (self.high << 1) | 1;
        }
    }

    fn finish(mut self) {
        self.pending += 1;
        self.emit(self.low >= QUARTER);
    }
}

/// Write the count table and the code for `symbols` over `0..sigma`.
pub(crate) fn encode_section(w: &mut BitWriter, symbols: &[Symbol], sigma: usize) -> Result<SectionBits> {
    let n = symbols.len() as u64;
    if n > MAX_TOTAL {
        return Err(Error::param("sequence", format!("order-0 coder accepts at most 2^40 symbols, got {n}")));
    }
    let mut counts = vec![0u64; sigma];
    for &c in symbols {
        counts[c as usize] += 1;
    }
    let width = ceil_log2(n + 1);
    let start = w.bit_len();
    for &c in &counts {
        w.write_bits(c, width);
    }
    let count_table = w.bit_len() - start;
    let cum = cumulative(&counts);
    // a single occurring symbol needs no code at all
    if counts.iter().filter(|&&c| c > 0).count() > 1 {
        let mut enc = Encoder {
            low: 0,
            high: WHOLE - 1,
            pending: 0,
            out: w,
        };
        for &c in symbols {
            enc.encode(cum[c as usize], cum[c as usize + 1], n);
        }
        enc.finish();
    }
    Ok(SectionBits {
        count_table,
        code: w.bit_len() - start - count_table,
    })
}

/// Read a section written by [`encode_section`] holding `n` symbols. Code
/// bits past the end of the stream read as zeros, so the section must be the
/// last thing in it.
pub(crate) fn decode_section(r: &mut BitReader, n: u64, sigma: usize) -> Result<Vec<Symbol>> {
    if n > MAX_TOTAL {
        return Err(r.malformed(format!("symbol count {n} exceeds 2^40")));
    }
    let width = ceil_log2(n + 1);
    let mut counts = Vec::with_capacity(sigma);
    for _ in 0..sigma {
        counts.push(r.read_bits(width)?);
    }
    if counts.iter().sum::<u64>() != n {
        return Err(r.malformed(format!("symbol counts do not sum to {n}")));
    }
    let occurring: Vec<usize> = (0..sigma).filter(|&c| counts[c] > 0).collect();
    if occurring.len() == 1 {
        return Ok(vec![occurring[0] as Symbol; n as usize]);
    }
    let mut out = Vec::with_capacity(n as usize);
    if n == 0 {
        return Ok(out);
    }
    let cum = cumulative(&counts);
    let (mut low, mut high, mut value) = (0u64, WHOLE - 1, 0u64);
    for _ in 0..PRECISION {
        value = (value << 1) | r.read_bit_or_zero() as u64;
    }
    for _ in 0..n {
        if value < low || value > high {
            return Err(r.malformed("code value left the coding interval"));
        }
        let range = (high - low + 1) as u128;
        let target = (((value - low + 1) as u128 * n as u128 - 1) / range) as u64;
        // the symbol whose cumulative interval contains target
        let c = cum.partition_point(|&x| x <= target) - 1;
        if c >= sigma {
            return Err(r.malformed("code value outside every symbol interval"));
        }
        out.push(c as Symbol);
        high = low + (range * cum[c + 1] as u128 / n as u128) as u64 - 1;
        low += (range * cum[c] as u128 / n as u128) as u64;
        loop {
            if high < HALF {
            } else if low >= HALF {
                low -= HALF;
                high -= HALF;
                value = value.wrapping_sub(HALF);
            } else if low >= QUARTER && high < HALF + QUARTER {
                low -= QUARTER;
                high -= QUARTER;
                value = value.wrapping_sub(QUARTER);
            } else {
                break;
            }
            low <<= 1;
            high = (high << 1) | 1;
            value = (value << 1) | r.read_bit_or_zero() as u64;
            if value >= WHOLE {
                return Err(r.malformed("code value left the coding interval"));
            }
        }
    }
    Ok(out)
}

pub fn order0_encode(s: &Sequence) -> Result<CompressedBlob> {
    if s.is_empty() {
        return Err(Error::param("sequence", "input must be non-empty"));
    }
    let mut w = BitWriter::new();
    encode_section(&mut w, s.symbols(), s.sigma())?;
    let bits = w.bit_len();
    Ok(CompressedBlob::new(Algorithm::Order0, s, w.into_bytes(), bits))
}

pub fn order0_decode(blob: &CompressedBlob) -> Result<Sequence> {
    blob.expect(Algorithm::Order0)?;
    let mut r = BitReader::new(&blob.payload, blob.payload_bits, "order0");
    let symbols = decode_section(&mut r, blob.original_len, blob.alphabet.size())?;
    Sequence::new(blob.alphabet.clone(), symbols)
}

/// Bits of the count table for `n` symbols over `sigma` values.
pub fn order0_count_table_bits(n: usize, sigma: usize) -> u64 {
    sigma as u64 * ceil_log2(n as u64 + 1) as u64
}

/// `n·H_0(s)` for a symbol slice.
pub(crate) fn empirical_information(symbols: &[Symbol], sigma: usize) -> f64 {
    let mut counts = vec![0u64; sigma];
    for &c in symbols {
        counts[c as usize] += 1;
    }
    crate::numeric::counts_information(counts)
}

/// Code bits of an order-0 blob, excluding its count table.
pub fn order0_code_bits(blob: &CompressedBlob) -> u64 {
    blob.payload_bits - order0_count_table_bits(blob.original_len as usize, blob.alphabet.size())
}
