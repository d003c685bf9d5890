//! LSB-first bit packing: bit `i` of the stream is bit `i % 8` of byte `i / 8`,
//! and multi-bit fields are written least significant bit first.

use crate::{Error, Result};

#[derive(Debug, Default, Clone)]
pub(crate) struct BitWriter {
    bytes: Vec<u8>,
    bit_len: u64,
}

impl BitWriter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn write_bit(&mut self, bit: bool) {
        let offset = (self.bit_len % 8) as u32;
        if offset == 0 {
            self.bytes.push(0);
        }
        if bit {
            *self.bytes.last_mut().unwrap() |= 1 << offset;
        }
        self.bit_len += 1;
    }

    pub fn write_bits(&mut self, value: u64, width: u32) {
        debug_assert!(width == 64 || value >> width == 0, "{value} does not fit in {width} bits");
        for i in 0..width {
            self.write_bit((value >> i) & 1 == 1);
        }
    }

    pub fn write_zeros(&mut self, count: u64) {
        let target = self.bit_len + count;
        self.bytes.resize(target.div_ceil(8) as usize, 0);
        self.bit_len = target;
    }

    pub fn bit_len(&self) -> u64 {
        self.bit_len
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes
    }
}

#[derive(Debug, Clone)]
pub(crate) struct BitReader<'a> {
    bytes: &'a [u8],
    bit_len: u64,
    pos: u64,
    stage: &'static str,
}

impl<'a> BitReader<'a> {
    /// A reader over the first `bit_len` bits of `bytes`; `stage` names the
    /// format in error messages.
    pub fn new(bytes: &'a [u8], bit_len: u64, stage: &'static str) -> Self {
        debug_assert!(bit_len <= bytes.len() as u64 * 8);
        BitReader {
            bytes,
            bit_len,
            pos: 0,
            stage,
        }
    }

    pub fn remaining(&self) -> u64 {
        self.bit_len - self.pos
    }

    fn bit_at(&self, pos: u64) -> bool {
        (self.bytes[(pos / 8) as usize] >> (pos % 8)) & 1 == 1
    }

    pub fn read_bit(&mut self) -> Result<bool> {
        if self.pos >= self.bit_len {
            return Err(Error::malformed(self.stage, self.pos, "unexpected end of data"));
        }
        let bit = self.bit_at(self.pos);
        self.pos += 1;
        Ok(bit)
    }

    /// Like [`read_bit`](Self::read_bit) but yields zeros past the end.
    pub fn read_bit_or_zero(&mut self) -> bool {
        let bit = self.pos < self.bit_len && self.bit_at(self.pos);
        self.pos += 1;
        bit
    }

    pub fn read_bits(&mut self, width: u32) -> Result<u64> {
        if self.remaining() < width as u64 {
            return Err(Error::malformed(
                self.stage,
                self.pos,
                format!("needed {width} bits, {} left", self.remaining()),
            ));
        }
        let mut value = 0u64;
        for i in 0..width {
            if self.read_bit()? {
                value |= 1 << i;
            }
        }
        Ok(value)
    }

    pub fn malformed(&self, reason: impl Into<String>) -> Error {
        Error::malformed(self.stage, self.pos, reason)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fields_are_packed_lsb_first() {
        let mut w = BitWriter::new();
        w.write_bits(0b101, 3);
        w.write_bits(0b11, 2);
        w.write_zeros(4);
        w.write_bit(true);
        assert_eq!(w.bit_len(), 10);
        let bytes = w.into_bytes();
        assert_eq!(bytes, vec![0b0001_1101, 0b0000_0010]);
        let mut r = BitReader::new(&bytes, 10, "test");
        assert_eq!(r.read_bits(3).unwrap(), 0b101);
        assert_eq!(r.read_bits(2).unwrap(), 0b11);
        assert_eq!(r.read_bits(4).unwrap(), 0);
        assert!(r.read_bit().unwrap());
        let err = r.read_bit().unwrap_err();
        assert!(matches!(err, Error::Malformed { bit_offset: 10, .. }));
        assert!(!r.read_bit_or_zero());
    }

    #[test]
    fn full_width_values() {
        let mut w = BitWriter::new();
        w.write_bits(u64::MAX, 64);
        w.write_bits(0, 0);
        let bytes = w.into_bytes();
        assert_eq!(BitReader::new(&bytes, 64, "t").read_bits(64).unwrap(), u64::MAX);
    }
}
