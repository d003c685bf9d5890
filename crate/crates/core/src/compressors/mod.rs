//! Lempel-Ziv parsers and the Burrows-Wheeler pipeline, each with an exact
//! decoder and bit-level size accounting.

mod bwt;
mod container;
mod lz77;
mod lz78;
mod matcher;
mod mtf;
mod order0;
mod pipeline;
mod rle;
mod suffix_array;

pub use bwt::{bwt, ibwt, BwtResult, SENTINEL};
pub use container::{Algorithm, CompressedBlob, BLOB_MAGIC};
pub use lz77::{lz76_complexity, lz77_decode, lz77_encode, lz77_parse, lz77_phrase_bits, Lz77Phrase};
pub use lz78::{lz78_decode, lz78_encode, lz78_parse, Lz78Phrase};
pub use mtf::{imtf, mtf};
pub use order0::{order0_code_bits, order0_count_table_bits, order0_decode, order0_encode, ORDER0_SLACK_BITS};
pub use pipeline::{bwt_pipeline_decode, bwt_pipeline_encode, PipelineReport, TOKEN_COUNT_BITS};
pub use rle::{rle0, unrle0, RUN_A, RUN_B};
pub use suffix_array::{lcp_array, suffix_array};

use crate::{Result, Sequence};

/// Encode `s` with `algorithm`.
pub fn encode(s: &Sequence, algorithm: Algorithm) -> Result<CompressedBlob> {
    match algorithm {
        Algorithm::Lz77 => lz77_encode(s),
        Algorithm::Lz78 => lz78_encode(s),
        Algorithm::Order0 => order0_encode(s),
        Algorithm::Bwt => bwt_pipeline_encode(s).map(|(blob, _)| blob),
    }
}
