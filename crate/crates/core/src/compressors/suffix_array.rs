//! Suffix sorting by prefix doubling with counting sorts, `O(n log n)`.

use crate::Symbol;

/// Suffix array of `text`: suffix start positions in lexicographic order,
/// a proper prefix sorting before any of its extensions.
pub fn suffix_array(text: &[Symbol]) -> Vec<u32> {
    let n = text.len();
    assert!(n < u32::MAX as usize, "text too long for 32-bit suffix indices");
    let mut sa: Vec<u32> = (0..n as u32).collect();
    if n <= 1 {
        return sa;
    }
    sa.sort_unstable_by_key(|&i| text[i as usize]);
    let mut rank = vec![0u32; n];
    for j in 1..n {
        let (prev, cur) = (sa[j - 1] as usize, sa[j] as usize);
        rank[cur] = rank[prev] + u32::from(text[prev] != text[cur]);
    }
    let mut next_rank = vec![0u32; n];
    let mut by_second: Vec<u32> = Vec::with_capacity(n);
    let mut counts: Vec<u32> = Vec::new();
    let mut k = 1;
    while (rank[sa[n - 1] as usize] as usize) < n - 1 {
        // order by the second half-key: short suffixes first, then shifted
        by_second.clear();
        by_second.extend((n - k..n).map(|i| i as u32));
        by_second.extend(sa.iter().filter(|&&p| p as usize >= k).map(|&p| p - k as u32));

        // stable counting sort by the first half-key
        let classes = rank[sa[n - 1] as usize] as usize + 1;
        counts.clear();
        counts.resize(classes + 1, 0);
        for &r in &rank {
            counts[r as usize + 1] += 1;
        }
        for c in 1..=classes {
            counts[c] += counts[c - 1];
        }
        for &p in &by_second {
            let slot = &mut counts[rank[p as usize] as usize];
            sa[*slot as usize] = p;
            *slot += 1;
        }

        let second = |i: usize| if i + k < n { rank[i + k] as i64 } else { -1 };
        next_rank[sa[0] as usize] = 0;
        for j in 1..n {
            let (prev, cur) = (sa[j - 1] as usize, sa[j] as usize);
            let same = rank[prev] == rank[cur] && second(prev) == second(cur);
            next_rank[cur] = next_rank[prev] + u32::from(!same);
        }
        std::mem::swap(&mut rank, &mut next_rank);
        k *= 2;
    }
    sa
}

/// Kasai's LCP array: `lcp[r]` is the longest common prefix of the suffixes
/// at ranks `r - 1` and `r`; `lcp[0] = 0`.
pub fn lcp_array(text: &[Symbol], sa: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut rank = vec![0u32; n];
    for (r, &p) in sa.iter().enumerate() {
        rank[p as usize] = r as u32;
    }
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}
