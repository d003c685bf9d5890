use serde::{Deserialize, Serialize};

use crate::compressors::{bwt_pipeline_encode, lz77_encode, lz78_encode};
use crate::entropy::hk;
use crate::generators::{champernowne_digits, de_bruijn};
use crate::{Alphabet, Error, MemoryCap, Result, Sequence};

/// A family of strings indexed by a size parameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    /// `A^n`.
    Constant,
    /// `A^n B`, of length `n + 1`.
    ConstantThenB,
    /// de Bruijn sequence of order `param` over `sigma` symbols.
    DeBruijn { sigma: usize },
    /// First `param` digits of the Champernowne word in `base`.
    Champernowne { base: usize },
}

impl Family {
    pub fn generate(&self, param: usize, cap: MemoryCap) -> Result<Sequence> {
        let ab = || Alphabet::new(b"AB".to_vec());
        cap.check_length(param.saturating_add(1))?;
        match *self {
            Family::Constant => {
                if param == 0 {
                    return Err(Error::param("n", "must be at least 1"));
                }
                Sequence::new(Alphabet::new(b"A".to_vec())?, vec![0; param])
            }
            Family::ConstantThenB => {
                let mut data = vec![0; param];
                data.push(1);
                Sequence::new(ab()?, data)
            }
            Family::DeBruijn { sigma } => de_bruijn(sigma, param, cap),
            Family::Champernowne { base } => champernowne_digits(base, param),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub n: usize,
    #[serde(rename = "H_k")]
    pub hk: f64,
    pub lz77_ratio: f64,
    pub lz78_ratio: f64,
    pub bwt_ratio: f64,
}

/// Compressed size per symbol (container header included) for each member
/// of `family`, alongside `H_k`. Generated lengths must strictly increase.
pub fn convergence_experiment(family: &Family, params: &[usize], k: usize, cap: MemoryCap) -> Result<Vec<ConvergenceRow>> {
    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(params.len());
    for &param in params {
        let s = family.generate(param, cap)?;
        if let Some(prev) = rows.last() {
            if s.len() <= prev.n {
                return Err(Error::param(
                    "params",
                    format!("lengths must strictly increase; {} follows {}", s.len(), prev.n),
                ));
            }
        }
        let n = s.len() as f64;
        rows.push(ConvergenceRow {
            n: s.len(),
            hk: hk(&s, k),
            lz77_ratio: lz77_encode(&s)?.total_bits() as f64 / n,
            lz78_ratio: lz78_encode(&s)?.total_bits() as f64 / n,
            bwt_ratio: bwt_pipeline_encode(&s)?.1.total_bits as f64 / n,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_family_ratios_fall() {
        let rows = convergence_experiment(&Family::Constant, &[100, 1_000, 10_000, 100_000], 0, MemoryCap::default())
            .unwrap();
        for w in rows.windows(2) {
            assert!(w[1].lz77_ratio < w[0].lz77_ratio);
            assert!(w[1].lz78_ratio < w[0].lz78_ratio);
            assert!(w[1].bwt_ratio < w[0].bwt_ratio);
        }
        assert!(rows.iter().all(|r| r.hk == 0.0));
        assert!(rows.last().unwrap().lz77_ratio < 0.01);
    }

    #[test]
    fn constant_then_b_lz78_gap_grows() {
        let rows =
            convergence_experiment(&Family::ConstantThenB, &[1_000, 10_000, 100_000], 0, MemoryCap::default()).unwrap();
        let gaps: Vec<f64> = rows.iter().map(|r| r.lz78_ratio / r.hk).collect();
        assert!(rows.windows(2).all(|w| w[1].hk < w[0].hk));
        assert!(gaps.windows(2).all(|w| w[1] > w[0]), "{gaps:?}");
    }

    #[test]
    fn de_bruijn_family_near_one_bit() {
        let ks: Vec<usize> = (2..=12).collect();
        let rows = convergence_experiment(&Family::DeBruijn { sigma: 2 }, &ks, 0, MemoryCap::default()).unwrap();
        let last = rows.last().unwrap();
        assert!((last.hk - 1.0).abs() < 1e-3);
        assert!(last.lz77_ratio >= last.hk && last.lz78_ratio >= last.hk);
        // sorted rotations u0, u1 always have distinct predecessors, so the
        // column costs about one bit per pair
        assert!(last.bwt_ratio > 0.3 && last.bwt_ratio < 0.6, "{last:?}");
    }

    #[test]
    fn lengths_must_increase() {
        assert!(convergence_experiment(&Family::Constant, &[10, 10], 0, MemoryCap::default()).is_err());
        assert!(convergence_experiment(&Family::Constant, &[0], 0, MemoryCap::default()).is_err());
    }
}
