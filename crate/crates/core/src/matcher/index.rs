//! Constant-time longest-common-extension queries on a word, both forwards and
//! mirrored, from a suffix array over `w # w^R`.

use crate::word::Symbol;

pub(crate) struct LceIndex {
    n: usize,
    rank: Vec<u32>,
    sparse: Vec<Vec<u32>>,
}

impl LceIndex {
    pub fn new(word: &[Symbol]) -> Self {
        let n = word.len();
        let sep = Symbol::MAX as u32 + 1;
        let text: Vec<u32> = word
            .iter()
            .map(|&s| s as u32)
            .chain(std::iter::once(sep))
            .chain(word.iter().rev().map(|&s| s as u32))
            .collect();
        let sa = suffix_array(&text);
        let mut rank = vec![0u32; text.len()];
        for (r, &i) in sa.iter().enumerate() {
            rank[i as usize] = r as u32;
        }
        let lcp = kasai(&text, &sa, &rank);
        LceIndex {
            n,
            rank,
            sparse: sparse_table(lcp),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    fn lce_text(&self, i: usize, j: usize) -> usize {
        if i == j {
            return self.rank.len() - i;
        }
        let (a, b) = (self.rank[i] as usize, self.rank[j] as usize);
        let (lo, hi) = if a < b { (a + 1, b) } else { (b + 1, a) };
        self.range_min(lo, hi) as usize
    }

    /// Length of the longest common prefix of `w[i..]` and `w[j..]`.
    pub fn forward(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.n && j < self.n);
        if i == j {
            return self.n - i;
        }
        self.lce_text(i, j)
    }

    /// Largest `k` with `w[a - t] == w[b + t]` for all `t < k`.
    pub fn mirror(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.n && b < self.n);
        let ra = self.n + 1 + (self.n - 1 - a);
        self.lce_text(ra, b)
    }

    fn range_min(&self, lo: usize, hi: usize) -> u32 {
        let span = hi - lo + 1;
        let level = usize::BITS as usize - 1 - span.leading_zeros() as usize;
        let row = &self.sparse[level];
        row[lo].min(row[hi + 1 - (1 << level)])
    }
}

fn suffix_array(text: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut sa: Vec<u32> = (0..n as u32).collect();
    let mut rank: Vec<u32> = text.to_vec();
    let mut tmp = vec![0u32; n];
    let mut k = 1;
    loop {
        let key = |i: u32| {
            let i = i as usize;
            let second = if i + k < n { rank[i + k] as u64 + 1 } else { 0 };
            ((rank[i] as u64) << 32) | second
        };
        sa.sort_unstable_by_key(|&i| key(i));
        tmp[sa[0] as usize] = 0;
        for w in 1..n {
            let bump = (key(sa[w - 1]) != key(sa[w])) as u32;
            tmp[sa[w] as usize] = tmp[sa[w - 1] as usize] + bump;
        }
        std::mem::swap(&mut rank, &mut tmp);
        if rank[sa[n - 1] as usize] as usize == n - 1 {
            return sa;
        }
        k *= 2;
    }
}

fn kasai(text: &[u32], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = text.len();
    // lcp[r] = lcp(sa[r-1], sa[r]); lcp[0] = 0
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

fn sparse_table(base: Vec<u32>) -> Vec<Vec<u32>> {
    let n = base.len();
    let mut table = vec![base];
    let mut width = 1;
    while 2 * width <= n {
        let prev = table.last().expect("non-empty");
        let row: Vec<u32> = (0..=n - 2 * width)
            .map(|i| prev[i].min(prev[i + width]))
            .collect();
        table.push(row);
        width *= 2;
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_forward(w: &[u8], i: usize, j: usize) -> usize {
        (0..).take_while(|&t| i + t < w.len() && j + t < w.len() && w[i + t] == w[j + t]).count()
    }

    fn naive_mirror(w: &[u8], a: usize, b: usize) -> usize {
        (0..)
            .take_while(|&t| t <= a && b + t < w.len() && w[a - t] == w[b + t])
            .count()
    }

    #[test]
    fn agrees_with_naive_scan() {
        let words: Vec<Vec<u8>> = vec![
            vec![0],
            vec![0, 0, 1, 1, 0, 0, 1],
            vec![0, 1, 0, 1, 0, 1, 0, 1, 1, 0],
            (0..97u32).map(|i| ((i * i + 3 * i) % 3) as u8).collect(),
        ];
        for w in &words {
            let idx = LceIndex::new(w);
            for i in 0..w.len() {
                for j in 0..w.len() {
                    assert_eq!(idx.forward(i, j), naive_forward(w, i, j), "{w:?} {i} {j}");
                    assert_eq!(idx.mirror(i, j), naive_mirror(w, i, j), "{w:?} {i} {j}");
                }
            }
        }
    }
}
