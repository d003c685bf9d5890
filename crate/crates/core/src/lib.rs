//! String-complexity laboratory.
//!
//! Exact kth-order empirical entropy, generators for sequences whose
//! complexity is known in closed form (de Bruijn sequences, Champernowne and
//! Copeland-Erdős digit streams, Markov samples), Lempel-Ziv parsers, a
//! Burrows-Wheeler compression pipeline with bit-exact accounting, and
//! evaluators for the classical entropy-based compression bounds.
//!
//! Every module works on [`Sequence`], a string of symbol indices over an
//! explicit ordered [`Alphabet`].

pub mod bounds;
pub mod compressors;
pub mod entropy;
mod bitio;
mod error;
pub mod generators;
mod numeric;
pub mod sequence;

pub use error::{Error, Result};
pub use numeric::{ceil_log2, NeumaierSum};
pub use sequence::{frequencies, ingest, AlphabetMode, Alphabet, FrequencyVector, MemoryCap, Sequence, Symbol};
