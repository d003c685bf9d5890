//! Acceptance suite for `entropy-lab`; see `tests/acceptance.rs`.
