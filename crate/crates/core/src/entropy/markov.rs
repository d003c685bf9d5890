use crate::bitio::{BitReader, BitWriter};
use crate::entropy::{ContextEntry, ContextTable};
use crate::numeric::{ceil_log2, NeumaierSum};
use crate::sequence::checked_pow;
use crate::{Alphabet, Error, MemoryCap, Result, Sequence, Symbol};

/// Magic bytes opening a serialized model.
pub const MODEL_MAGIC: &[u8; 4] = b"EMK1";
/// Fixed header: magic, σ (u32), k (u16), n (u64), all little-endian.
pub const MODEL_HEADER_BITS: u64 = 8 * (4 + 4 + 2 + 8);

/// A conditional distribution `p(c | w)` over an alphabet, with `|w|` fixed.
pub trait ConditionalModel {
    fn order(&self) -> usize;
    fn sigma(&self) -> usize;
    fn probability(&self, context: &[Symbol], symbol: Symbol) -> f64;
}

/// Maximum-likelihood order-k model: `p(c|w) = count(c after w) / |s_w|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovModel {
    alphabet: Alphabet,
    source_len: u64,
    table: ContextTable,
}

impl MarkovModel {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn table(&self) -> &ContextTable {
        &self.table
    }

    /// Length of the sequence the counts were taken from.
    pub fn source_len(&self) -> u64 {
        self.source_len
    }

    /// `p(·|w)` as `(symbol, probability)` pairs, or `None` for a context
    /// that never occurred.
    pub fn conditional(&self, context: &[Symbol]) -> Option<Vec<(Symbol, f64)>> {
        let entry = self.table.get(context)?;
        let total = entry.total() as f64;
        Some(entry.followers.iter().map(|&(s, c)| (s, c as f64 / total)).collect())
    }

    /// Width of one count in the serialized table: `ceil(log2(n + 1))`.
    pub fn count_width(&self) -> u32 {
        ceil_log2(self.source_len + 1)
    }

    /// Number of dense cells `σ^(k+1)`, if it fits in a `u128`.
    pub fn cell_count(&self) -> Option<u128> {
        checked_pow(self.sigma(), self.order() + 1)
    }

    /// Exact size of [`serialize_model`]'s output in bits:
    /// `σ^(k+1)·ceil(log2(n+1)) + 144`.
    pub fn table_bits(&self) -> Option<u128> {
        self.cell_count()?
            .checked_mul(self.count_width() as u128)?
            .checked_add(MODEL_HEADER_BITS as u128)
    }
}

impl ConditionalModel for MarkovModel {
    fn order(&self) -> usize {
        self.table.order()
    }

    fn sigma(&self) -> usize {
        self.alphabet.size()
    }

    fn probability(&self, context: &[Symbol], symbol: Symbol) -> f64 {
        match self.table.get(context) {
            Some(e) => e.count(symbol) as f64 / e.total() as f64,
            None => 0.0,
        }
    }
}

pub fn fit_markov(s: &Sequence, k: usize) -> Result<MarkovModel> {
    if s.len() <= k {
        return Err(Error::NoConditionedPositions { n: s.len(), k });
    }
    Ok(MarkovModel {
        alphabet: s.alphabet().clone(),
        source_len: s.len() as u64,
        table: ContextTable::build(s, k),
    })
}

/// `Σ_{i>k} log2(1 / p(s[i] | s[i-k..i]))` in bits. The first `k` symbols
/// are given for free.
pub fn self_information<M: ConditionalModel + ?Sized>(s: &Sequence, model: &M) -> Result<f64> {
    let k = model.order();
    if k >= s.len() {
        return Err(Error::NoConditionedPositions { n: s.len(), k });
    }
    if model.sigma() != s.sigma() {
        return Err(Error::param(
            "model",
            format!("alphabet size {} does not match the sequence's {}", model.sigma(), s.sigma()),
        ));
    }
    let text = s.symbols();
    let mut acc = NeumaierSum::new();
    for i in k..text.len() {
        let p = model.probability(&text[i - k..i], text[i]);
        if !(p > 0.0) {
            return Err(Error::ZeroProbability { position: i });
        }
        acc.add(-p.log2());
    }
    Ok(acc.value())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SerializedModel {
    pub bits: u64,
    pub bytes: Vec<u8>,
}

/// Dense count table with a fixed header.
///
/// Layout: `EMK1`, σ as u32, k as u16, n as u64 (little-endian), then the
/// σ^(k+1) counts in lexicographic (context, follower) order, the first
/// context symbol most significant. Each count takes `ceil(log2(n+1))` bits,
/// LSB-first. The final byte is zero-padded; `bits` excludes the padding.
pub fn serialize_model(model: &MarkovModel, cap: MemoryCap) -> Result<SerializedModel> {
    let sigma = model.sigma();
    let k = model.order();
    let width = model.count_width();
    let total_bits = model.table_bits().ok_or(Error::CapExceeded {
        what: "model count table",
        required: u128::MAX,
        cap: cap.0,
    })?;
    cap.check("model count table", total_bits.div_ceil(8))?;
    let sigma32 = u32::try_from(sigma).map_err(|_| Error::param("sigma", "does not fit in 32 bits"))?;
    let k16 = u16::try_from(k).map_err(|_| Error::param("k", "does not fit in 16 bits"))?;

    let mut w = BitWriter::new();
    for &b in MODEL_MAGIC {
        w.write_bits(b as u64, 8);
    }
    w.write_bits(sigma32 as u64, 32);
    w.write_bits(k16 as u64, 16);
    w.write_bits(model.source_len, 64);

    let mut next_cell: u64 = 0;
    for entry in model.table.entries() {
        let context_rank = entry.context.iter().fold(0u64, |acc, &s| acc * sigma as u64 + s as u64);
        for &(sym, count) in &entry.followers {
            let cell = context_rank * sigma as u64 + sym as u64;
            w.write_zeros((cell - next_cell) * width as u64);
            w.write_bits(count, width);
            next_cell = cell + 1;
        }
    }
    let cells = model.cell_count().expect("checked by table_bits") as u64;
    w.write_zeros((cells - next_cell) * width as u64);

    debug_assert_eq!(w.bit_len() as u128, total_bits);
    Ok(SerializedModel {
        bits: w.bit_len(),
        bytes: w.into_bytes(),
    })
}

/// Inverse of [`serialize_model`]; `alphabet` supplies the symbol labels.
pub fn deserialize_model(bytes: &[u8], alphabet: &Alphabet) -> Result<MarkovModel> {
    const STAGE: &str = "model";
    let mut r = BitReader::new(bytes, bytes.len() as u64 * 8, STAGE);
    for &b in MODEL_MAGIC {
        if r.read_bits(8)? != b as u64 {
            return Err(Error::malformed(STAGE, 0, "bad magic"));
        }
    }
    let sigma = r.read_bits(32)? as usize;
    let k = r.read_bits(16)? as usize;
    let n = r.read_bits(64)?;
    if sigma != alphabet.size() {
        return Err(Error::malformed(
            STAGE,
            32,
            format!("alphabet size {sigma} does not match the supplied alphabet ({})", alphabet.size()),
        ));
    }
    let width = ceil_log2(n + 1);
    let mut entries: Vec<ContextEntry> = Vec::new();
    if width > 0 {
        let cells = checked_pow(sigma, k + 1)
            .filter(|&c| c.saturating_mul(width as u128) <= r.remaining() as u128)
            .ok_or_else(|| r.malformed("count table is truncated"))? as u64;
        for cell in 0..cells {
            let count = r.read_bits(width)?;
            if count == 0 {
                continue;
            }
            let sym = (cell % sigma as u64) as Symbol;
            let mut rank = cell / sigma as u64;
            let mut context = vec![0 as Symbol; k];
            for slot in context.iter_mut().rev() {
                *slot = (rank % sigma as u64) as Symbol;
                rank /= sigma as u64;
            }
            match entries.last_mut() {
                Some(e) if e.context == context => e.followers.push((sym, count)),
                _ => entries.push(ContextEntry {
                    context,
                    followers: vec![(sym, count)],
                }),
            }
        }
    }
    let table = ContextTable::from_entries(k, sigma, entries);
    if table.total() != n.saturating_sub(k as u64) {
        return Err(r.malformed(format!(
            "counts sum to {}, expected {}",
            table.total(),
            n.saturating_sub(k as u64)
        )));
    }
    Ok(MarkovModel {
        alphabet: alphabet.clone(),
        source_len: n,
        table,
    })
}
