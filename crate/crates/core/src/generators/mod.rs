//! Sequences with analytically known structure.

mod de_bruijn;
mod digits;
mod markov_sample;
mod normality;
mod spec;

pub use de_bruijn::de_bruijn;
pub use digits::{champernowne_digits, copeland_erdos_digits, Primes, MAX_PRIMES};
pub use markov_sample::{markov_sample, MarkovSample, SampleRng};
pub use normality::{normality_deviation, window_counts};
pub use spec::GeneratorSpec;
