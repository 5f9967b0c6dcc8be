//! Naive reference matcher shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// Naive search over the raw pattern text: lowercase letter = variable,
/// uppercase = its reversal. Returns every occurrence as
/// (start, end, images in first-occurrence order).
pub fn oracle(w: &[u8], pat: &str) -> Vec<(usize, usize, Vec<Vec<u8>>)> {
    let mut out = Vec::new();
    scan(w, pat, &mut |start, end, images| out.push((start, end, images())));
    out
}

/// Whether any factor of `w` is an instance of `pat`.
pub fn oracle_meets(w: &[u8], pat: &str) -> bool {
    let mut found = false;
    scan(w, pat, &mut |_, _, _| found = true);
    found
}

type Visit<'a> = dyn FnMut(usize, usize, &dyn Fn() -> Vec<Vec<u8>>) + 'a;

fn scan(w: &[u8], pat: &str, visit: &mut Visit<'_>) {
    let mut order: Vec<char> = Vec::new();
    // (slot of the variable, reversed?)
    let mut letters: Vec<(usize, bool)> = Vec::new();
    for c in pat.chars() {
        let v = c.to_ascii_lowercase();
        if !order.contains(&v) {
            order.push(v);
        }
        letters.push((order.iter().position(|&x| x == v).unwrap(), c.is_ascii_uppercase()));
    }

    // images[slot] = Some((pos, len, reversed)): the factor w[pos..pos+len]
    // was read for this variable, with the given orientation
    type Image = Option<(usize, usize, bool)>;

    fn plain(w: &[u8], (pos, len, rev): (usize, usize, bool)) -> Vec<u8> {
        let mut t = w[pos..pos + len].to_vec();
        if rev {
            t.reverse();
        }
        t
    }

    fn go(w: &[u8], letters: &[(usize, bool)], i: usize, j: usize, images: &mut Vec<Image>, start: usize, visit: &mut Visit<'_>) {
        if i == letters.len() {
            let snapshot = images.clone();
            visit(start, j, &|| snapshot.iter().map(|x| plain(w, x.unwrap())).collect());
            return;
        }
        let (slot, rev) = letters[i];
        if let Some((pos, len, was_rev)) = images[slot] {
            if w.len() - j < len {
                return;
            }
            // same orientation: plain copy; opposite: mirrored copy
            let ok = if rev == was_rev {
                (0..len).all(|t| w[j + t] == w[pos + t])
            } else {
                (0..len).all(|t| w[j + t] == w[pos + len - 1 - t])
            };
            if ok {
                go(w, letters, i + 1, j + len, images, start, visit);
            }
            return;
        }
        for len in 1..=w.len() - j {
            images[slot] = Some((j, len, rev));
            go(w, letters, i + 1, j + len, images, start, visit);
        }
        images[slot] = None;
    }

    let mut images: Vec<Image> = vec![None; order.len()];
    for start in 0..w.len() {
        go(w, &letters, 0, start, &mut images, start, visit);
    }
}

pub fn patterns(max_len: usize) -> Vec<String> {
    let mut all = BTreeSet::new();
    let mut layer = vec![String::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &layer {
            for c in ['a', 'A', 'b', 'B'] {
                let q = format!("{p}{c}");
                all.insert(q.clone());
                next.push(q);
            }
        }
        layer = next;
    }
    all.into_iter().collect()
}

pub fn binary_words(max_len: usize) -> impl Iterator<Item = Vec<u8>> {
    (1..=max_len).flat_map(|n| (0u32..1 << n).map(move |code| (0..n).map(|i| ((code >> (n - 1 - i)) & 1) as u8).collect()))
}
