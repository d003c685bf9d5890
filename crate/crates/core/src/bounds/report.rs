use serde::{Deserialize, Serialize};

use crate::NeumaierSum;

/// One additive term of a bound formula.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundTerm {
    pub name: String,
    pub bits: f64,
}

impl BoundTerm {
    pub fn new(name: &str, bits: f64) -> Self {
        BoundTerm {
            name: name.to_string(),
            bits,
        }
    }
}

/// A bound formula as a list of itemized terms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundFormula {
    pub terms: Vec<BoundTerm>,
}

impl BoundFormula {
    pub fn total(&self) -> f64 {
        self.terms.iter().map(|t| t.bits).collect::<NeumaierSum>().value()
    }

    pub fn term(&self, name: &str) -> Option<f64> {
        self.terms.iter().find(|t| t.name == name).map(|t| t.bits)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct BoundParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    pub sigma: usize,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
}

/// A bound evaluated against a measurement.
///
/// Upper bounds are satisfied when `measured ≤ formula`. Interval reports
/// (`lower_bits` set) additionally require `lower ≤ measured` and treat the
/// formula value as an open upper end.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound: String,
    pub params: BoundParams,
    pub terms: Vec<BoundTerm>,
    pub formula_bits: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_bits: Option<f64>,
    pub measured_bits: f64,
    pub slack_bits: f64,
    pub satisfied: bool,
}

impl BoundReport {
    pub fn upper(bound: &str, params: BoundParams, formula: BoundFormula, measured_bits: f64) -> Self {
        let formula_bits = formula.total();
        BoundReport {
            bound: bound.to_string(),
            params,
            terms: formula.terms,
            formula_bits,
            lower_bits: None,
            measured_bits,
            slack_bits: formula_bits - measured_bits,
            satisfied: measured_bits <= formula_bits,
        }
    }

    /// `lower ≤ measured < formula`.
    pub fn half_open(
        bound: &str,
        params: BoundParams,
        formula: BoundFormula,
        lower_bits: f64,
        measured_bits: f64,
    ) -> Self {
        let formula_bits = formula.total();
        BoundReport {
            bound: bound.to_string(),
            params,
            terms: formula.terms,
            formula_bits,
            lower_bits: Some(lower_bits),
            measured_bits,
            slack_bits: formula_bits - measured_bits,
            satisfied: lower_bits <= measured_bits && measured_bits < formula_bits,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn upper_report_invariants() {
        let f = BoundFormula {
            terms: vec![BoundTerm::new("a", 1.5), BoundTerm::new("b", 2.5)],
        };
        assert_eq!(f.term("b"), Some(2.5));
        let r = BoundReport::upper("t", BoundParams::default(), f.clone(), 4.0);
        assert_eq!(r.formula_bits, 4.0);
        assert!(r.satisfied);
        assert_eq!(r.slack_bits, 0.0);
        assert!(!BoundReport::upper("t", BoundParams::default(), f, 4.5).satisfied);
    }

    #[test]
    fn half_open_excludes_upper_end() {
        let f = BoundFormula {
            terms: vec![BoundTerm::new("h", 1.0), BoundTerm::new("one", 1.0)],
        };
        assert!(BoundReport::half_open("t", BoundParams::default(), f.clone(), 1.0, 1.0).satisfied);
        assert!(!BoundReport::half_open("t", BoundParams::default(), f.clone(), 1.0, 2.0).satisfied);
        assert!(!BoundReport::half_open("t", BoundParams::default(), f, 1.0, 0.5).satisfied);
    }
}
