use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("byte 0x{byte:02x} at offset {offset} is not in the declared alphabet")]
    UndeclaredSymbol { byte: u8, offset: usize },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("symbol index {symbol} at position {position} is outside an alphabet of size {sigma}")]
    SymbolOutOfRange {
        symbol: u32,
        position: usize,
        sigma: usize,
    },

    #[error("invalid distribution: probabilities sum to {sum}")]
    InvalidDistribution { sum: f64 },

    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("sequence of length {n} has no positions conditioned on a context of order {k}")]
    NoConditionedPositions { n: usize, k: usize },

    #[error("transition at position {position} has zero probability under the model")]
    ZeroProbability { position: usize },

    #[error("{what} needs {required} bytes, over the memory cap of {cap} bytes")]
    CapExceeded {
        what: &'static str,
        required: u128,
        cap: u64,
    },

    #[error("malformed {stage} data at bit offset {bit_offset}: {reason}")]
    Malformed {
        stage: &'static str,
        bit_offset: u64,
        reason: String,
    },
}

impl Error {
    pub(crate) fn malformed(stage: &'static str, bit_offset: u64, reason: impl Into<String>) -> Self {
        Error::Malformed {
            stage,
            bit_offset,
            reason: reason.into(),
        }
    }

    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
