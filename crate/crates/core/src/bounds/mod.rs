//! Entropy-based compression bounds evaluated against measured sizes.

mod convergence;
mod entropy_bounds;
mod huffman;
mod report;
mod zeta;

pub use convergence::{convergence_experiment, ConvergenceRow, Family};
pub use entropy_bounds::{
    klv_bound, klv_report, manzini_bound, verify_manzini, ManziniVerification, DEFAULT_KLV_C, REFERENCE_MU, ZETA_EPS,
};
pub use huffman::{huffman_code, huffman_interval_check, noiseless_interval_check, HuffmanCode};
pub use report::{BoundFormula, BoundParams, BoundReport, BoundTerm};
pub use zeta::zeta;
