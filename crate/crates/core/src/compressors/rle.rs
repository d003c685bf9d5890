//! Wheeler's 1-2 run-length code for zero runs in MTF output.
//!
//! A run of `L` zeros is written as the bijective base-2 digits of `L`,
//! least significant first, with `RUN_A` for digit 1 and `RUN_B` for digit 2
//! (so `L = Σ d_i 2^i`). A nonzero rank `r` becomes token `r + 1`. Ranks
//! over `σ` values therefore map to tokens over `σ + 1` values.

use crate::{Error, Result, Symbol};

pub const RUN_A: Symbol = 0;
pub const RUN_B: Symbol = 1;

fn push_run(out: &mut Vec<Symbol>, mut len: u64) {
    while len > 0 {
        if len % 2 == 1 {
            out.push(RUN_A);
            len = (len - 1) / 2;
        } else {
            out.push(RUN_B);
            len = (len - 2) / 2;
        }
    }
}

pub fn rle0(ranks: &[Symbol]) -> Vec<Symbol> {
    let mut out = Vec::with_capacity(ranks.len());
    let mut run = 0u64;
    for &r in ranks {
        if r == 0 {
            run += 1;
        } else {
            push_run(&mut out, run);
            run = 0;
            out.push(r + 1);
        }
    }
    push_run(&mut out, run);
    out
}

/// Inverse of [`rle0`]; `sigma` bounds the recovered ranks and `limit` their
/// count.
pub fn unrle0(tokens: &[Symbol], sigma: usize, limit: usize) -> Result<Vec<Symbol>> {
    let mut out = Vec::with_capacity(tokens.len());
    let (mut run, mut weight) = (0u64, 1u64);
    for (i, &t) in tokens.iter().enumerate() {
        if t == RUN_A || t == RUN_B {
            let digit = if t == RUN_A { 1 } else { 2 };
            run = weight
                .checked_mul(digit)
                .and_then(|d| run.checked_add(d))
                .ok_or_else(|| Error::malformed("rle", i as u64, "run length overflows"))?;
            weight = weight.saturating_mul(2);
            continue;
        }
        if t as usize > sigma {
            return Err(Error::malformed("rle", i as u64, format!("token {t} outside {} values", sigma + 1)));
        }
        flush_run(&mut out, run, limit, i)?;
        (run, weight) = (0, 1);
        out.push(t - 1);
    }
    flush_run(&mut out, run, limit, tokens.len())?;
    if out.len() > limit {
        return Err(Error::malformed("rle", tokens.len() as u64, "more ranks than expected"));
    }
    Ok(out)
}

fn flush_run(out: &mut Vec<Symbol>, run: u64, limit: usize, at: usize) -> Result<()> {
    if run > (limit - out.len().min(limit)) as u64 {
        return Err(Error::malformed("rle", at as u64, "more ranks than expected"));
    }
    out.resize(out.len() + run as usize, 0);
    Ok(())
}
