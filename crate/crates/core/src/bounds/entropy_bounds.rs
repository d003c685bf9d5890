use serde::{Deserialize, Serialize};

use super::report::{BoundFormula, BoundParams, BoundReport, BoundTerm};
use super::zeta::zeta;
use crate::compressors::{bwt_pipeline_encode, PipelineReport};
use crate::entropy::hk;
use crate::{Error, Result, Sequence};

/// The value of `μ` quoted for arithmetic-coded implementations.
pub const REFERENCE_MU: f64 = 0.01;

/// Default constant for the `O(σ^{k+1} log σ)` term of the KLV bound.
pub const DEFAULT_KLV_C: f64 = 1.0;

/// Tolerance used when evaluating `ζ(λ)` inside bounds.
pub const ZETA_EPS: f64 = 1e-12;

fn check_finite_nonneg(name: &'static str, x: f64) -> Result<()> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::param(name, format!("must be finite and non-negative, got {x}")));
    }
    Ok(())
}

fn log2_sigma(sigma: usize) -> f64 {
    (sigma as f64).log2()
}

/// `8·H_k·n + (μ + 2/25)·n + σ^k·(2σ·log2 σ + 9)`.
pub fn manzini_bound(s: &Sequence, k: usize, mu: f64) -> Result<BoundFormula> {
    check_finite_nonneg("mu", mu)?;
    let n = s.len() as f64;
    let sigma = s.sigma();
    let sigma_k = (sigma as f64).powi(k as i32);
    Ok(BoundFormula {
        terms: vec![
            BoundTerm::new("entropy", 8.0 * hk(s, k) * n),
            BoundTerm::new("mu", mu * n),
            BoundTerm::new("two_25ths", 2.0 / 25.0 * n),
            BoundTerm::new("contexts", sigma_k * (2.0 * sigma as f64 * log2_sigma(sigma) + 9.0)),
        ],
    })
}

/// `λ·H_k·n + n·log2 ζ(λ) + c·σ^{k+1}·log2 σ`.
pub fn klv_bound(s: &Sequence, k: usize, lambda: f64, c: f64) -> Result<BoundFormula> {
    check_finite_nonneg("c", c)?;
    let z = zeta(lambda, ZETA_EPS)?;
    let n = s.len() as f64;
    let sigma = s.sigma();
    Ok(BoundFormula {
        terms: vec![
            BoundTerm::new("entropy", lambda * hk(s, k) * n),
            BoundTerm::new("zeta", n * z.log2()),
            BoundTerm::new("contexts", c * (sigma as f64).powi(k as i32 + 1) * log2_sigma(sigma)),
        ],
    })
}

/// One pipeline run checked against the Manzini bound at several orders.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManziniVerification {
    pub pipeline: PipelineReport,
    /// Effective `μ` of this implementation, used in the reports.
    pub mu_measured: f64,
    pub mu_reference: f64,
    pub reports: Vec<BoundReport>,
}

/// Compress `s` with the BWT pipeline and compare its total size with the
/// Manzini bound for each `k`, using the pipeline's own measured `μ`
/// (clamped at zero).
pub fn verify_manzini(s: &Sequence, ks: &[usize]) -> Result<ManziniVerification> {
    let (_, pipeline) = bwt_pipeline_encode(s)?;
    let mu_measured = pipeline.effective_mu().max(0.0);
    let reports = ks
        .iter()
        .map(|&k| {
            let formula = manzini_bound(s, k, mu_measured)?;
            let params = BoundParams {
                k: Some(k),
                sigma: s.sigma(),
                n: s.len(),
                mu: Some(mu_measured),
                ..BoundParams::default()
            };
            Ok(BoundReport::upper("manzini", params, formula, pipeline.total_bits as f64))
        })
        .collect::<Result<_>>()?;
    Ok(ManziniVerification {
        pipeline,
        mu_measured,
        mu_reference: REFERENCE_MU,
        reports,
    })
}

/// The KLV bound for `s` against `measured_bits`.
pub fn klv_report(s: &Sequence, k: usize, lambda: f64, c: f64, measured_bits: f64) -> Result<BoundReport> {
    let formula = klv_bound(s, k, lambda, c)?;
    let params = BoundParams {
        k: Some(k),
        lambda: Some(lambda),
        sigma: s.sigma(),
        n: s.len(),
        c: Some(c),
        ..BoundParams::default()
    };
    Ok(BoundReport::upper("klv", params, formula, measured_bits))
}
