use crate::{Alphabet, Error, Result, Sequence, Symbol};

/// Copeland-Erdős expansions draw on at most this many primes.
pub const MAX_PRIMES: usize = 10_000_000;

const SEGMENT: u64 = 1 << 16;

fn check_params(base: usize, n: usize) -> Result<Alphabet> {
    if base < 2 {
        return Err(Error::param("base", format!("must be at least 2, got {base}")));
    }
    if n < 1 {
        return Err(Error::param("n", "must be at least 1"));
    }
    Alphabet::digits(base)
}

/// Append the base-`base` digits of `value` (most significant first).
fn push_digits(out: &mut Vec<Symbol>, mut value: u64, base: u64) {
    let start = out.len();
    loop {
        out.push((value % base) as Symbol);
        value /= base;
        if value == 0 {
            break;
        }
    }
    out[start..].reverse();
}

fn concatenate(base: usize, n: usize, values: impl Iterator<Item = u64>) -> Option<Vec<Symbol>> {
    let mut out = Vec::with_capacity(n + 64);
    for v in values {
        if out.len() >= n {
            break;
        }
        push_digits(&mut out, v, base as u64);
    }
    if out.len() < n {
        return None;
    }
    out.truncate(n);
    Some(out)
}

/// First `n` digits after the point of Champernowne's number in base `b`:
/// the concatenation of 1, 2, 3, ... written in base `b`.
pub fn champernowne_digits(base: usize, n: usize) -> Result<Sequence> {
    let alphabet = check_params(base, n)?;
    let digits = concatenate(base, n, 1u64..).expect("the integers never run out");
    Sequence::new(alphabet, digits)
}

/// First `n` digits of the concatenation of the primes 2, 3, 5, 7, 11, ...
/// written in base `b`.
pub fn copeland_erdos_digits(base: usize, n: usize) -> Result<Sequence> {
    let alphabet = check_params(base, n)?;
    let digits = concatenate(base, n, Primes::new().take(MAX_PRIMES)).ok_or(Error::param(
        "n",
        format!("more digits than the first {MAX_PRIMES} primes provide"),
    ))?;
    Sequence::new(alphabet, digits)
}

/// The primes in increasing order, from a segmented sieve of Eratosthenes.
#[derive(Debug, Clone)]
pub struct Primes {
    /// Sieving primes, all primes up to `base_limit`.
    base: Vec<u64>,
    base_limit: u64,
    segment_start: u64,
    pending: std::vec::IntoIter<u64>,
}

impl Primes {
    pub fn new() -> Self {
        Primes {
            base: Vec::new(),
            base_limit: 1,
            segment_start: 0,
            pending: Vec::new().into_iter(),
        }
    }

    fn ensure_base(&mut self, limit: u64) {
        if limit <= self.base_limit {
            return;
        }
        let limit = limit.max(self.base_limit * 2);
        let mut composite = vec![false; limit as usize + 1];
        self.base.clear();
        for i in 2..=limit {
            if !composite[i as usize] {
                self.base.push(i);
                let mut j = i * i;
                while j <= limit {
                    composite[j as usize] = true;
                    j += i;
                }
            }
        }
        self.base_limit = limit;
    }

    fn sieve_next_segment(&mut self) {
        let lo = self.segment_start;
        let hi = lo + SEGMENT;
        self.ensure_base((hi as f64).sqrt() as u64 + 1);
        let mut composite = vec![false; SEGMENT as usize];
        for &p in &self.base {
            if p * p >= hi {
                break;
            }
            let mut m = (p * p).max(lo.div_ceil(p) * p);
            while m < hi {
                composite[(m - lo) as usize] = true;
                m += p;
            }
        }
        let found: Vec<u64> = (lo.max(2)..hi).filter(|&v| !composite[(v - lo) as usize]).collect();
        self.pending = found.into_iter();
        self.segment_start = hi;
    }
}

impl Default for Primes {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for Primes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            if let Some(p) = self.pending.next() {
                return Some(p);
            }
            self.sieve_next_segment();
        }
    }
}
