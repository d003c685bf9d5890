use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use super::report::{BoundFormula, BoundParams, BoundReport, BoundTerm};
use crate::entropy::{shannon_entropy, Distribution};
use crate::NeumaierSum;

/// A binary prefix-free code given by its codeword lengths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuffmanCode {
    /// Codeword length per symbol; `None` for zero-probability symbols,
    /// which get no codeword.
    pub lengths: Vec<Option<u32>>,
}

impl HuffmanCode {
    pub fn expected_length(&self, p: &Distribution) -> f64 {
        self.lengths
            .iter()
            .zip(p.probabilities())
            .filter_map(|(l, &q)| l.map(|l| q * l as f64))
            .collect::<NeumaierSum>()
            .value()
    }

    /// `Σ 2^-l` over assigned codewords.
    pub fn kraft_sum(&self) -> f64 {
        self.lengths.iter().flatten().map(|&l| 0.5f64.powi(l as i32)).sum()
    }

    /// Canonical codewords (MSB-first bit strings), shorter codes first and
    /// ties by symbol index.
    pub fn codewords(&self) -> Vec<Option<String>> {
        let mut order: Vec<usize> = (0..self.lengths.len()).filter(|&i| self.lengths[i].is_some()).collect();
        order.sort_by_key(|&i| (self.lengths[i], i));
        let mut out = vec![None; self.lengths.len()];
        let (mut code, mut prev_len) = (0u128, 0u32);
        for (rank, &i) in order.iter().enumerate() {
            let len = self.lengths[i].unwrap();
            if rank > 0 {
                code = (code + 1) << (len - prev_len);
            }
            prev_len = len;
            out[i] = Some(if len == 0 {
                String::new()
            } else {
                format!("{code:0width$b}", width = len as usize)
            });
        }
        out
    }
}

#[derive(Debug, PartialEq)]
struct Node {
    weight: f64,
    /// Leaves use their symbol index, merged nodes `σ + creation order`,
    /// so equal weights resolve toward the lowest-index symbol.
    id: usize,
}

impl Eq for Node {}

impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight.total_cmp(&other.weight).then(self.id.cmp(&other.id))
    }
}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Huffman code for `p`. A single positive-probability symbol gets the
/// empty codeword, which is trivially prefix-free.
pub fn huffman_code(p: &Distribution) -> HuffmanCode {
    let sigma = p.len();
    let mut heap: BinaryHeap<Reverse<Node>> = p
        .probabilities()
        .iter()
        .enumerate()
        .filter(|(_, &q)| q > 0.0)
        .map(|(id, &weight)| Reverse(Node { weight, id }))
        .collect();
    // parent pointer per node id
    let mut parent: Vec<Option<usize>> = vec![None; 2 * sigma];
    let mut next_id = sigma;
    while heap.len() > 1 {
        let Reverse(a) = heap.pop().unwrap();
        let Reverse(b) = heap.pop().unwrap();
        parent[a.id] = Some(next_id);
        parent[b.id] = Some(next_id);
        heap.push(Reverse(Node {
            weight: a.weight + b.weight,
            id: next_id,
        }));
        next_id += 1;
    }
    let lengths = (0..sigma)
        .map(|i| {
            (p.probabilities()[i] > 0.0).then(|| {
                let (mut depth, mut node) = (0, i);
                while let Some(up) = parent[node] {
                    depth += 1;
                    node = up;
                }
                depth
            })
        })
        .collect();
    HuffmanCode { lengths }
}

/// Check `H(P) ≤ expected_length < H(P) + 1`.
pub fn noiseless_interval_check(p: &Distribution, expected_length: f64) -> BoundReport {
    let h = shannon_entropy(p);
    let formula = BoundFormula {
        terms: vec![BoundTerm::new("entropy", h), BoundTerm::new("one_bit", 1.0)],
    };
    let params = BoundParams {
        sigma: p.len(),
        n: 1,
        ..BoundParams::default()
    };
    BoundReport::half_open("noiseless", params, formula, h, expected_length)
}

/// Build the Huffman code for `p` and check its expected length.
pub fn huffman_interval_check(p: &Distribution) -> BoundReport {
    noiseless_interval_check(p, huffman_code(p).expected_length(p))
}
