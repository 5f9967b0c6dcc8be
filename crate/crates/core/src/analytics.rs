//! Factor statistics: squares, palindromes, unary powers, factor complexity.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matcher::index::LceIndex;
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    All,
    Even,
    Odd,
}

impl Parity {
    fn admits(self, len: usize) -> bool {
        match self {
            Parity::All => true,
            Parity::Even => len % 2 == 0,
            Parity::Odd => len % 2 == 1,
        }
    }
}

impl FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Parity::All),
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            _ => Err(Error::Domain(format!("unknown parity {s:?} (expected all, even or odd)"))),
        }
    }
}

/// Every occurrence `(position, root)` of a square `rr` with `|r| >= min_root_len`,
/// ordered by position, then root length.
pub fn list_squares(w: &Word, min_root_len: usize) -> Result<Vec<(usize, Word)>> {
    if min_root_len == 0 {
        return Err(Error::Domain("min_root_len must be at least 1".into()));
    }
    let n = w.len();
    let mut out = Vec::new();
    if n < 2 {
        return Ok(out);
    }
    let idx = LceIndex::new(w.symbols());
    for p in 0..n {
        for l in min_root_len..=(n - p) / 2 {
            if idx.forward(p, p + l) >= l {
                out.push((p, w.factor(p, p + l)));
            }
        }
    }
    Ok(out)
}

/// The distinct roots among all squares of `w`.
pub fn square_roots(w: &Word, min_root_len: usize) -> Result<Vec<Word>> {
    let mut roots: Vec<Word> = list_squares(w, min_root_len)?
        .into_iter()
        .map(|(_, r)| r)
        .collect();
    roots.sort_by(|a, b| (a.len(), a.symbols()).cmp(&(b.len(), b.symbols())));
    roots.dedup();
    Ok(roots)
}

/// Every palindromic factor occurrence `(position, length)` with length at least
/// `min_len` and the given parity, ordered by position, then length.
pub fn list_palindromes(w: &Word, min_len: usize, parity: Parity) -> Result<Vec<(usize, usize)>> {
    if min_len == 0 {
        return Err(Error::Domain("min_len must be at least 1".into()));
    }
    let s: Vec<i64> = w.symbols().iter().map(|&c| c as i64).collect();
    let n = s.len() as i64;
    let at = |i: i64| s[i as usize];
    // Manacher: odd[i] counts odd palindromes centred on i, even[i] counts
    // even palindromes centred just before i.
    let mut odd = vec![0i64; s.len()];
    let mut even = vec![0i64; s.len()];
    let (mut l, mut r) = (0i64, -1i64);
    for i in 0..n {
        let mut k = if i > r { 1 } else { odd[(l + r - i) as usize].min(r - i + 1) };
        while i - k >= 0 && i + k < n && at(i - k) == at(i + k) {
            k += 1;
        }
        odd[i as usize] = k;
        if i + k - 1 > r {
            l = i - k + 1;
            r = i + k - 1;
        }
    }
    let (mut l, mut r) = (0i64, -1i64);
    for i in 0..n {
        let mut k = if i > r { 0 } else { even[(l + r - i + 1) as usize].min(r - i + 1) };
        while i - k - 1 >= 0 && i + k < n && at(i - k - 1) == at(i + k) {
            k += 1;
        }
        even[i as usize] = k;
        if i + k - 1 > r {
            l = i - k;
            r = i + k - 1;
        }
    }
    let mut out = Vec::new();
    for i in 0..s.len() {
        for j in 0..odd[i] as usize {
            let len = 2 * j + 1;
            if len >= min_len && parity.admits(len) {
                out.push((i - j, len));
            }
        }
        for j in 1..=even[i] as usize {
            let len = 2 * j;
            if len >= min_len && parity.admits(len) {
                out.push((i - j, len));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Longest run of a single letter.
pub fn max_unary_power(w: &Word) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::Domain("max_unary_power of the empty word".into()));
    }
    let s = w.symbols();
    let mut best = 1;
    let mut run = 1;
    for i in 1..s.len() {
        run = if s[i] == s[i - 1] { run + 1 } else { 1 };
        best = best.max(run);
    }
    Ok(best)
}

/// Number of distinct factors of length `n`.
pub fn factor_complexity(w: &Word, n: usize) -> Result<usize> {
    if n == 0 || n > w.len() {
        return Err(Error::Domain(format!(
            "factor length {n} out of range 1..={}",
            w.len()
        )));
    }
    Ok(w.symbols().windows(n).collect::<HashSet<_>>().len())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Evidence {
    /// Some length `n` has at most `n` distinct factors.
    Periodic(usize),
    /// Complexity exceeded `n` for every `n` up to the bound.
    Aperiodic(usize),
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::Periodic(n) => write!(f, "PERIODIC-EVIDENCE({n})"),
            Evidence::Aperiodic(n) => write!(f, "APERIODIC-EVIDENCE({n})"),
        }
    }
}

/// Morse–Hedlund test on a finite prefix: an ultimately periodic word has
/// complexity at most `n` for some `n`. This is evidence, not proof: prefix
/// counts only bound the true complexity from below.
pub fn morse_hedlund_evidence(w: &Word, n_max: usize) -> Result<Evidence> {
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    if w.len() < 2 * n_max {
        return Err(Error::Domain(format!(
            "prefix of length {} is too short for n_max {n_max} (need at least {})",
            w.len(),
            2 * n_max
        )));
    }
    for n in 1..=n_max {
        if factor_complexity(w, n)? <= n {
            return Ok(Evidence::Periodic(n));
        }
    }
    Ok(Evidence::Aperiodic(n_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::generate;

    fn w(s: &str) -> Word {
        Word::parse_digits(s).unwrap()
    }

    fn naive_palindromes(s: &[u8], min_len: usize, parity: Parity) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..s.len() {
            for j in i + min_len..=s.len() {
                let f = &s[i..j];
                if parity.admits(j - i) && f.iter().eq(f.iter().rev()) {
                    out.push((i, j - i));
                }
            }
        }
        out
    }

    #[test]
    fn squares() {
        let sq = list_squares(&w("0011001"), 1).unwrap();
        let shown: Vec<_> = sq.iter().map(|(p, r)| (*p, r.to_digits())).collect();
        assert_eq!(shown, vec![(0, "0".into()), (2, "1".into()), (4, "0".into())]);
        assert!(list_squares(&w("010"), 1).unwrap().is_empty());
        assert!(list_squares(&w("010"), 0).is_err());
    }

    #[test]
    fn palindromes_match_naive() {
        assert_eq!(list_palindromes(&w("011"), 2, Parity::Even).unwrap(), vec![(1, 2)]);
        let word = generate("tau_prime", 200).unwrap();
        for parity in [Parity::All, Parity::Even, Parity::Odd] {
            for min in 1..4 {
                assert_eq!(
                    list_palindromes(&word, min, parity).unwrap(),
                    naive_palindromes(word.symbols(), min, parity)
                );
            }
        }
        let word = w("0010110100110");
        assert_eq!(
            list_palindromes(&word, 1, Parity::All).unwrap(),
            naive_palindromes(word.symbols(), 1, Parity::All)
        );
    }

    #[test]
    fn unary_powers() {
        assert_eq!(max_unary_power(&w("0110101")).unwrap(), 2);
        assert_eq!(max_unary_power(&w("0000")).unwrap(), 4);
        assert!(max_unary_power(&w("")).is_err());
    }

    #[test]
    fn complexity() {
        assert_eq!(factor_complexity(&w("0101"), 2).unwrap(), 2);
        assert_eq!(factor_complexity(&w("0011001"), 2).unwrap(), 4);
        assert_eq!(factor_complexity(&generate("alt01", 100).unwrap(), 3).unwrap(), 2);
        assert!(factor_complexity(&w("01"), 3).is_err());
    }

    #[test]
    fn evidence() {
        let alt = generate("alt01", 100).unwrap();
        assert_eq!(morse_hedlund_evidence(&alt, 5).unwrap(), Evidence::Periodic(2));
        let alt3 = generate("alt012", 100).unwrap();
        assert_eq!(morse_hedlund_evidence(&alt3, 5).unwrap(), Evidence::Periodic(3));
        let tp = generate("tau_prime", 5000).unwrap();
        assert_eq!(morse_hedlund_evidence(&tp, 10).unwrap(), Evidence::Aperiodic(10));
        assert!(morse_hedlund_evidence(&alt, 60).is_err());
        assert_eq!(Evidence::Aperiodic(10).to_string(), "APERIODIC-EVIDENCE(10)");
    }
}
