//! Longest previous factor queries for greedy Lempel-Ziv parsing.
//!
//! Positions are inserted left to right. For a query position `i`, the
//! longest match among inserted sources `j < i` comes from the nearest
//! inserted suffixes in suffix-array order; the source reported is the
//! largest such `j` (smallest offset) among all sources achieving that
//! length. Matches may overlap the query position.

use crate::compressors::suffix_array::{lcp_array, suffix_array};
use crate::Symbol;

/// Segment tree over `u32` with an associative, idempotent-friendly `op`.
struct SegTree {
    size: usize,
    tree: Vec<u32>,
    op: fn(u32, u32) -> u32,
    identity: u32,
}

impl SegTree {
    fn new(values: &[u32], op: fn(u32, u32) -> u32, identity: u32) -> Self {
        let size = values.len().next_power_of_two().max(1);
        let mut tree = vec![identity; 2 * size];
        tree[size..size + values.len()].copy_from_slice(values);
        for i in (1..size).rev() {
            tree[i] = op(tree[2 * i], tree[2 * i + 1]);
        }
        SegTree {
            size,
            tree,
            op,
            identity,
        }
    }

    fn set(&mut self, i: usize, value: u32) {
        let mut node = i + self.size;
        self.tree[node] = value;
        while node > 1 {
            node /= 2;
            self.tree[node] = (self.op)(self.tree[2 * node], self.tree[2 * node + 1]);
        }
    }

    /// Fold over `[l, r)`.
    fn query(&self, l: usize, r: usize) -> u32 {
        let (mut l, mut r) = (l + self.size, r + self.size);
        let mut acc = self.identity;
        while l < r {
            if l & 1 == 1 {
                acc = (self.op)(acc, self.tree[l]);
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                acc = (self.op)(acc, self.tree[r]);
            }
            l /= 2;
            r /= 2;
        }
        acc
    }

    /// Smallest `i >= start` whose value satisfies `pred`. `pred` must hold
    /// for a fold whenever it holds for one of its operands.
    fn first_where(&self, start: usize, pred: &dyn Fn(u32) -> bool) -> Option<usize> {
        self.first_rec(1, 0, self.size, start, pred)
    }

    fn first_rec(&self, node: usize, lo: usize, hi: usize, start: usize, pred: &dyn Fn(u32) -> bool) -> Option<usize> {
        if hi <= start || !pred(self.tree[node]) {
            return None;
        }
        if hi - lo == 1 {
            return Some(lo);
        }
        let mid = (lo + hi) / 2;
        self.first_rec(2 * node, lo, mid, start, pred)
            .or_else(|| self.first_rec(2 * node + 1, mid, hi, start, pred))
    }

    /// Largest `i < end` whose value satisfies `pred`.
    fn last_where(&self, end: usize, pred: &dyn Fn(u32) -> bool) -> Option<usize> {
        self.last_rec(1, 0, self.size, end, pred)
    }

    fn last_rec(&self, node: usize, lo: usize, hi: usize, end: usize, pred: &dyn Fn(u32) -> bool) -> Option<usize> {
        if lo >= end || !pred(self.tree[node]) {
            return None;
        }
        if hi - lo == 1 {
            return Some(lo);
        }
        let mid = (lo + hi) / 2;
        self.last_rec(2 * node + 1, mid, hi, end, pred)
            .or_else(|| self.last_rec(2 * node, lo, mid, end, pred))
    }
}

pub(crate) struct PriorMatcher {
    rank: Vec<u32>,
    lcp: SegTree,
    /// Per rank: inserted position + 1, or 0.
    seen: SegTree,
}

impl PriorMatcher {
    pub fn new(text: &[Symbol]) -> Self {
        let sa = suffix_array(text);
        let lcp = lcp_array(text, &sa);
        let mut rank = vec![0u32; text.len()];
        for (r, &p) in sa.iter().enumerate() {
            rank[p as usize] = r as u32;
        }
        PriorMatcher {
            rank,
            lcp: SegTree::new(&lcp, u32::min, u32::MAX),
            seen: SegTree::new(&vec![0; text.len()], u32::max, 0),
        }
    }

    pub fn insert(&mut self, pos: usize) {
        self.seen.set(self.rank[pos] as usize, pos as u32 + 1);
    }

    /// LCP of the suffixes at ranks `a < b`.
    fn lcp_between(&self, a: usize, b: usize) -> usize {
        self.lcp.query(a + 1, b + 1) as usize
    }

    /// Longest match for position `i` against inserted sources, truncated
    /// to `cap`, as `(source, length)`. `None` if no source shares even one
    /// symbol (or `cap == 0`).
    pub fn longest_prior(&self, i: usize, cap: usize) -> Option<(usize, usize)> {
        if cap == 0 {
            return None;
        }
        let n = self.rank.len();
        let r = self.rank[i] as usize;
        let inserted = |v: u32| v > 0;
        let mut best = 0;
        if let Some(left) = self.seen.last_where(r, &inserted) {
            best = best.max(self.lcp_between(left, r));
        }
        if let Some(right) = self.seen.first_where(r + 1, &inserted) {
            best = best.max(self.lcp_between(r, right));
        }
        let len = best.min(cap);
        if len == 0 {
            return None;
        }
        let len32 = len as u32;
        let below = move |v: u32| v < len32;
        // lcp[0] == 0 < len, so the left boundary always exists
        let lo = self.lcp.last_where(r + 1, &below).unwrap_or(0);
        let hi = self.lcp.first_where(r + 1, &below).map_or(n - 1, |p| p - 1);
        let source = self.seen.query(lo, hi + 1) as usize - 1;
        Some((source, len))
    }
}
