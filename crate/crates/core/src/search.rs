//! Depth-first exploration of all words over a k-letter alphabet that avoid
//! a pattern. A finite tree certifies k-unavoidability; reaching the depth
//! bound yields a long avoiding word (evidence of avoidability, not proof).

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matcher::{ends_with_occurrence, meets_symbols};
use crate::pattern::Pattern;
use crate::word::{Symbol, Word, MAX_ALPHABET};

/// Upper bound on the words enumerated by `exhaustive_unavoidability`.
pub const RESOURCE_GUARD: u64 = 1 << 26;
/// Upper bound on tree nodes visited by `search` and `count_avoiders`.
pub const NODE_GUARD: u64 = 1 << 23;
pub const DEFAULT_DEPTH: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every word of this length meets the pattern; some shorter word avoids it.
    Unavoidable(usize),
    /// An avoiding word of the full search depth (lexicographically least).
    DepthExhausted(Word),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub pattern: Pattern,
    pub alphabet_size: u8,
    pub verdict: Verdict,
    pub nodes_explored: u64,
    pub wall_time_ms: u64,
}

#[derive(Serialize)]
struct OutcomeRecord {
    pattern: String,
    k: u8,
    verdict: &'static str,
    #[serde(rename = "L")]
    l: Option<usize>,
    witness: Option<String>,
    nodes_explored: u64,
    wall_time_ms: u64,
}

impl SearchOutcome {
    pub fn is_unavoidable(&self) -> bool {
        matches!(self.verdict, Verdict::Unavoidable(_))
    }

    /// One-line JSON record.
    pub fn to_json(&self) -> String {
        let (verdict, l, witness) = match &self.verdict {
            Verdict::Unavoidable(l) => ("unavoidable", Some(*l), None),
            Verdict::DepthExhausted(w) => ("depth_exhausted", None, Some(w.to_digits())),
        };
        let rec = OutcomeRecord {
            pattern: self.pattern.to_string(),
            k: self.alphabet_size,
            verdict,
            l,
            witness,
            nodes_explored: self.nodes_explored,
            wall_time_ms: self.wall_time_ms,
        };
        serde_json::to_string(&rec).expect("plain record serializes")
    }
}

impl fmt::Display for SearchOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::Unavoidable(l) => write!(
                f,
                "{} is {}-unavoidable: every word of length {l} meets it",
                self.pattern, self.alphabet_size
            ),
            Verdict::DepthExhausted(w) => write!(
                f,
                "{} conjectured {}-avoidable: avoiding word of length {} found",
                self.pattern,
                self.alphabet_size,
                w.len()
            ),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Fix the first letter to 0; sound because meeting a pattern is
    /// invariant under permutations of the alphabet.
    pub fix_first_letter: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            fix_first_letter: true,
        }
    }
}

fn check_alphabet(k: u8) -> Result<()> {
    if k == 0 || k > MAX_ALPHABET {
        return Err(Error::Domain(format!("alphabet size must be in 1..={MAX_ALPHABET}, got {k}")));
    }
    Ok(())
}

pub fn search(p: &Pattern, k: u8, max_depth: usize) -> Result<SearchOutcome> {
    search_with(p, k, max_depth, SearchOptions::default())
}

pub fn search_with(p: &Pattern, k: u8, max_depth: usize, opts: SearchOptions) -> Result<SearchOutcome> {
    check_alphabet(k)?;
    if max_depth == 0 {
        return Err(Error::Domain("max_depth must be at least 1".into()));
    }
    let clock = Instant::now();
    let mut word: Vec<Symbol> = Vec::with_capacity(max_depth);
    // next[d]: next letter to try at position d
    let mut next: Vec<Symbol> = vec![0];
    let mut nodes = 0u64;
    let mut longest = 0usize;
    let verdict = loop {
        let d = word.len();
        let limit = if d == 0 && opts.fix_first_letter { 1 } else { k };
        let c = next[d];
        if c >= limit {
            if d == 0 {
                break Verdict::Unavoidable(longest + 1);
            }
            next.pop();
            word.pop();
            continue;
        }
        next[d] = c + 1;
        word.push(c);
        nodes += 1;
        if nodes > NODE_GUARD {
            return Err(Error::ResourceGuard(format!(
                "search tree exceeds {NODE_GUARD} nodes (longest avoider so far {longest})"
            )));
        }
        if ends_with_occurrence(&word, p) {
            word.pop();
            continue;
        }
        longest = longest.max(word.len());
        if word.len() == max_depth {
            break Verdict::DepthExhausted(Word::new(word, k)?);
        }
        next.push(0);
    };
    Ok(SearchOutcome {
        pattern: p.clone(),
        alphabet_size: k,
        verdict,
        nodes_explored: nodes,
        wall_time_ms: clock.elapsed().as_millis() as u64,
    })
}

/// Whether every word of length `len` over `k` letters meets `p`, by direct
/// enumeration of all `k^len` words.
pub fn exhaustive_unavoidability(p: &Pattern, k: u8, len: usize) -> Result<bool> {
    check_alphabet(k)?;
    let total = (k as u64).checked_pow(len as u32).filter(|&t| t <= RESOURCE_GUARD);
    let Some(total) = total else {
        return Err(Error::ResourceGuard(format!(
            "{k}^{len} words exceed the enumeration limit of {RESOURCE_GUARD}"
        )));
    };
    let mut w = vec![0 as Symbol; len];
    for mut code in 0..total {
        for slot in w.iter_mut().rev() {
            *slot = (code % k as u64) as Symbol;
            code /= k as u64;
        }
        if !meets_symbols(&w, p) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `c[n]` = number of words of length `n` over `k` letters avoiding `p`, for `n` in `0..=n_max`.
pub fn count_avoiders(p: &Pattern, k: u8, n_max: usize) -> Result<Vec<u64>> {
    check_alphabet(k)?;
    let mut counts = vec![0u64; n_max + 1];
    counts[0] = 1;
    if n_max == 0 {
        return Ok(counts);
    }
    // count words starting with 0, then scale by the k choices of first letter
    let mut word: Vec<Symbol> = Vec::with_capacity(n_max);
    let mut next: Vec<Symbol> = vec![0];
    let mut nodes = 0u64;
    loop {
        let d = word.len();
        let limit = if d == 0 { 1 } else { k };
        let c = next[d];
        if c >= limit {
            if d == 0 {
                break;
            }
            next.pop();
            word.pop();
            continue;
        }
        next[d] = c + 1;
        word.push(c);
        nodes += 1;
        if nodes > NODE_GUARD {
            return Err(Error::ResourceGuard(format!(
                "avoider tree exceeds {NODE_GUARD} nodes before length {n_max}"
            )));
        }
        if ends_with_occurrence(&word, p) {
            word.pop();
            continue;
        }
        counts[word.len()] += 1;
        if word.len() == n_max {
            word.pop();
            continue;
        }
        next.push(0);
    }
    for c in counts.iter_mut().skip(1) {
        *c *= k as u64;
    }
    Ok(counts)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexEstimate {
    /// One more than the largest k (contiguous from 1) certified unavoidable.
    pub lower_bound: usize,
    /// Least k at which the search reached its depth bound.
    pub candidate: Option<usize>,
    pub depth_used: usize,
    pub outcomes: Vec<SearchOutcome>,
}

/// Searches k = 1, 2, … up to `k_max`, stopping at the first depth-exhausted k.
pub fn estimate_index(p: &Pattern, k_max: u8, depth: usize) -> Result<IndexEstimate> {
    check_alphabet(k_max)?;
    let mut est = IndexEstimate {
        lower_bound: 1,
        candidate: None,
        depth_used: depth,
        outcomes: Vec::new(),
    };
    for k in 1..=k_max {
        let out = search(p, k, depth)?;
        let unavoidable = out.is_unavoidable();
        est.outcomes.push(out);
        if unavoidable {
            est.lower_bound = k as usize + 1;
        } else {
            est.candidate = Some(k as usize);
            break;
        }
    }
    Ok(est)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcher::meets;

    fn p(s: &str) -> Pattern {
        Pattern::parse(s).unwrap()
    }

    #[test]
    fn thue_baselines() {
        assert_eq!(search(&p("aa"), 2, 100).unwrap().verdict, Verdict::Unavoidable(4));
        assert_eq!(search(&p("a"), 3, 10).unwrap().verdict, Verdict::Unavoidable(1));
        for (s, k) in [("aa", 3), ("aA", 2), ("aaa", 2)] {
            let out = search(&p(s), k, 300).unwrap();
            let Verdict::DepthExhausted(w) = &out.verdict else {
                panic!("{s} at {k}: {out}");
            };
            assert_eq!(w.len(), 300);
            assert!(!meets(w, &p(s)));
        }
    }

    #[test]
    fn witnesses_are_least() {
        let out = search(&p("aA"), 2, 8).unwrap();
        assert_eq!(out.verdict, Verdict::DepthExhausted(Word::parse_digits("01010101").unwrap()));
    }

    #[test]
    fn exhaustive() {
        assert!(exhaustive_unavoidability(&p("aa"), 2, 4).unwrap());
        assert!(!exhaustive_unavoidability(&p("aa"), 2, 3).unwrap());
        assert!(exhaustive_unavoidability(&p("aa"), 2, 27).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(count_avoiders(&p("aa"), 2, 3).unwrap(), vec![1, 2, 2, 2]);
        assert_eq!(count_avoiders(&p("a"), 2, 2).unwrap(), vec![1, 0, 0]);
        let c = count_avoiders(&p("aA"), 2, 4).unwrap();
        assert!(c[4] >= 2);
    }

    #[test]
    fn symmetry_pruning_is_sound() {
        let off = SearchOptions {
            fix_first_letter: false,
        };
        for s in ["a", "ab", "aba", "aA", "aBa", "Ab", "AbA"] {
            let a = search(&p(s), 2, 50).unwrap().verdict;
            let b = search_with(&p(s), 2, 50, off).unwrap().verdict;
            assert_eq!(a, b, "{s}");
        }
    }

    #[test]
    fn json_record() {
        let out = search(&p("aa"), 2, 100).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.to_json()).unwrap();
        assert_eq!(v["pattern"], "aa");
        assert_eq!(v["k"], 2);
        assert_eq!(v["verdict"], "unavoidable");
        assert_eq!(v["L"], 4);
        assert!(v["witness"].is_null());
    }

    #[test]
    fn index_estimates() {
        let e = estimate_index(&p("abba"), 3, 300).unwrap();
        assert_eq!((e.lower_bound, e.candidate), (3, Some(3)));
        let e = estimate_index(&p("aba"), 4, 300).unwrap();
        assert_eq!((e.lower_bound, e.candidate), (5, None));
    }
}
