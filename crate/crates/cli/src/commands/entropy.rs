use rayon::prelude::*;
use serde_json::{json, Value};

use entropy_lab::entropy::{hk, MODEL_HEADER_BITS};
use entropy_lab::{ceil_log2, MemoryCap};

use super::{alphabet_mode, display, load};
use crate::args::EntropyArgs;
use crate::error::CliResult;
use crate::output::Report;

/// Bits of the dense order-k model table, or `None` when materializing it
/// would exceed the memory cap (H_k itself is computed sparsely either way).
fn table_bits(sigma: usize, n: usize, k: usize, cap: MemoryCap) -> Option<u128> {
    if n <= k {
        return None;
    }
    let cells = (sigma as u128).checked_pow(k as u32 + 1)?;
    let bits = cells.checked_mul(ceil_log2(n as u64 + 1) as u128)?.checked_add(MODEL_HEADER_BITS as u128)?;
    (bits.div_ceil(8) <= cap.0 as u128).then_some(bits)
}

pub fn entropy(args: &EntropyArgs, cap: MemoryCap) -> CliResult<Report> {
    let mode = alphabet_mode(&args.alphabet)?;
    let files: Vec<Value> = args
        .files
        .par_iter()
        .map(|path| {
            let s = load(path, &mode)?;
            let orders: Vec<Value> = args
                .k
                .clone()
                .map(|k| {
                    let bits = table_bits(s.sigma(), s.len(), k, cap);
                    json!({
                        "k": k,
                        "H_k": hk(&s, k),
                        "table_bits": bits.and_then(|b| u64::try_from(b).ok()),
                    })
                })
                .collect();
            Ok(json!({
                "path": display(path),
                "n": s.len(),
                "sigma": s.sigma(),
                "orders": orders,
            }))
        })
        .collect::<CliResult<_>>()?;

    let mut report = Report::new("entropy", vec!["path", "n", "sigma", "k", "H_k", "table_bits"]);
    for f in &files {
        for o in f["orders"].as_array().unwrap() {
            report.rows.push(vec![
                f["path"].clone(),
                f["n"].clone(),
                f["sigma"].clone(),
                o["k"].clone(),
                o["H_k"].clone(),
                o["table_bits"].clone(),
            ]);
        }
    }
    report.set("files", files);
    Ok(report)
}
