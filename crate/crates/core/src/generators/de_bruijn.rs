use crate::{Alphabet, Error, MemoryCap, Result, Sequence, Symbol};

/// A σ-ary de Bruijn sequence of order k, linearized.
///
/// The cyclic sequence is the concatenation, in lexicographic order, of the
/// Lyndon words over `0..σ` whose length divides `k`. Appending its first
/// `k - 1` symbols yields a string of length `σ^k + k - 1` in which every
/// k-tuple occurs exactly once as a window.
pub fn de_bruijn(sigma: usize, k: usize, cap: MemoryCap) -> Result<Sequence> {
    if sigma < 2 {
        return Err(Error::param("sigma", format!("de Bruijn sequences need σ >= 2, got {sigma}")));
    }
    if k < 1 {
        return Err(Error::param("k", "de Bruijn sequences need k >= 1"));
    }
    let alphabet = Alphabet::digits(sigma)?;
    let cycle_len = crate::sequence::checked_pow(sigma, k)
        .ok_or(Error::CapExceeded {
            what: "de Bruijn sequence",
            required: u128::MAX,
            cap: cap.0,
        })?;
    cap.check(
        "de Bruijn sequence",
        (cycle_len + k as u128 - 1) * std::mem::size_of::<Symbol>() as u128,
    )?;

    let mut out: Vec<Symbol> = Vec::with_capacity(cycle_len as usize + k - 1);
    // Fredricksen-Kessler-Maiorana: iterate Lyndon prefixes in lexicographic order.
    let top = (sigma - 1) as Symbol;
    let mut word: Vec<Symbol> = vec![0];
    loop {
        if k % word.len() == 0 {
            out.extend_from_slice(&word);
        }
        let p = word.len();
        // extend periodically to length k
        while word.len() < k {
            word.push(word[word.len() - p]);
        }
        while word.last() == Some(&top) {
            word.pop();
        }
        match word.last_mut() {
            Some(x) => *x += 1,
            None => break,
        }
    }
    debug_assert_eq!(out.len() as u128, cycle_len);
    let head: Vec<Symbol> = out[..k - 1].to_vec();
    out.extend(head);
    Sequence::new(alphabet, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    /// Window-enumeration oracle: every k-window and its multiplicity.
    fn windows(s: &Sequence, k: usize) -> HashMap<Vec<Symbol>, usize> {
        let mut m = HashMap::new();
        for w in s.symbols().windows(k) {
            *m.entry(w.to_vec()).or_insert(0) += 1;
        }
        m
    }

    #[test]
    fn binary_order_two() {
        let s = de_bruijn(2, 2, MemoryCap::DEFAULT).unwrap();
        assert_eq!(s.len(), 5);
        assert_eq!(s.to_bytes(), b"00110");
        let w = windows(&s, 2);
        assert_eq!(w.len(), 4);
        assert!(w.values().all(|&c| c == 1));
    }

    #[test]
    fn binary_order_one() {
        let s = de_bruijn(2, 1, MemoryCap::DEFAULT).unwrap();
        assert_eq!(s.to_bytes(), b"01");
    }

    #[test]
    fn ternary_order_three() {
        let s = de_bruijn(3, 3, MemoryCap::DEFAULT).unwrap();
        assert_eq!(s.len(), 29);
        let w = windows(&s, 3);
        assert_eq!(w.len(), 27);
        assert!(w.values().all(|&c| c == 1));
    }

    #[test]
    fn every_tuple_exactly_once() {
        for sigma in 2..=4usize {
            for k in 1..=6usize {
                let s = de_bruijn(sigma, k, MemoryCap::DEFAULT).unwrap();
                let expected = sigma.pow(k as u32);
                assert_eq!(s.len(), expected + k - 1);
                let w = windows(&s, k);
                assert_eq!(w.len(), expected, "σ={sigma} k={k}");
                assert!(w.values().all(|&c| c == 1));
            }
        }
    }

    #[test]
    fn parameter_and_cap_errors() {
        assert!(de_bruijn(1, 3, MemoryCap::DEFAULT).is_err());
        assert!(de_bruijn(2, 0, MemoryCap::DEFAULT).is_err());
        assert!(matches!(de_bruijn(2, 20, MemoryCap(1 << 20)), Err(Error::CapExceeded { .. })));
        assert!(matches!(de_bruijn(256, 100, MemoryCap::DEFAULT), Err(Error::CapExceeded { .. })));
    }
}
