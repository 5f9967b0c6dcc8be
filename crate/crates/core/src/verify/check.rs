use std::collections::BTreeSet;

use crate::analytics::{list_palindromes, list_squares, morse_hedlund_evidence, square_roots, Evidence, Parity};
use crate::error::Result;
use crate::generators::generate;
use crate::matcher::{count_occurrences, divides, find_occurrence, meets, stream_avoids};
use crate::pattern::Pattern;
use crate::search::{count_avoiders, estimate_index, exhaustive_unavoidability, search, Verdict, RESOURCE_GUARD};
use crate::word::{digits, Word};

use super::report::Status;

/// One finite instance standing in for a claim about infinite words.
#[derive(Clone, Debug)]
pub struct LemmaCheck {
    pub id: String,
    /// The claim being checked, in words.
    pub anchor: String,
    pub check: Check,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expectation {
    /// Unavoidable, optionally at an exact length.
    Unavoidable(Option<usize>),
    /// The search reaches its depth bound.
    Avoidable,
}

#[derive(Clone, Debug)]
pub enum Check {
    Count { word: String, pattern: String, expected: u64 },
    Meets { word: String, pattern: String, expected: bool },
    Divides { p: String, q: String, expected: bool },
    /// Every pattern avoids the generator prefix.
    StreamAvoids { generator: String, patterns: Vec<String> },
    StreamMeets { generator: String, pattern: String },
    /// No square with root at least `min_root` in the prefix.
    NoSquares { generator: String, min_root: usize, len: Option<usize> },
    SquareRoots { generator: String, expected: Vec<String> },
    NoPalindromes { generator: String, min_len: usize, parity: Parity, len: Option<usize> },
    ForbiddenFactors { generator: String, factors: Vec<String>, len: Option<usize> },
    /// Between consecutive `111` blocks the number of 0s is odd.
    OddZerosBetweenTriples { generator: String },
    Aperiodic { generator: String, n_max: usize },
    Search { pattern: String, k: u8, expect: Expectation },
    /// estimate_index bounds; the largest unavoidable k is re-certified exhaustively.
    Index { pattern: String, k_max: u8, lower_bound: usize, candidate: Option<usize> },
    /// Every word `prefix · {0,1}^m` of the given total length meets the pattern.
    PrefixFamilyMeets { prefix: String, len: usize, pattern: String },
    Growth { pattern: String, k: u8, expected: Vec<u64> },
    /// The parent divides the pattern, and both avoid the generator prefix.
    Consequence { parent: String, pattern: String, generator: String },
    /// No verdict is claimed; the binary search outcome is recorded.
    Informational { pattern: String, k: u8 },
}

fn pat(s: &str) -> Result<Pattern> {
    Pattern::parse(s)
}

fn verdict(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn prefix(generator: &str, len: Option<usize>, default: usize) -> Result<Word> {
    generate(generator, len.unwrap_or(default))
}

impl Check {
    pub fn expected(&self, prefix_len: usize) -> String {
        let n = prefix_len;
        match self {
            Check::Count { expected, .. } => format!("{expected} occurrences"),
            Check::Meets { expected, .. } | Check::Divides { expected, .. } => {
                (if *expected { "true" } else { "false" }).into()
            }
            Check::StreamAvoids { patterns, .. } if patterns.len() == 1 => format!("avoids (n={n})"),
            Check::StreamAvoids { patterns, .. } => format!("all {} avoid (n={n})", patterns.len()),
            Check::StreamMeets { .. } => format!("meets (n={n})"),
            Check::NoSquares { min_root, len, .. } => {
                format!("no square with root >= {min_root} (n={})", len.unwrap_or(n))
            }
            Check::SquareRoots { expected, .. } => format!("roots {{{}}}", expected.join(",")),
            Check::NoPalindromes { min_len, parity, len, .. } => format!(
                "no {} palindrome of length >= {min_len} (n={})",
                match parity {
                    Parity::All => "",
                    Parity::Even => "even",
                    Parity::Odd => "odd",
                },
                len.unwrap_or(n)
            )
            .replace("  ", " "),
            Check::ForbiddenFactors { factors, len, .. } => {
                format!("none of {} (n={})", factors.join(","), len.unwrap_or(n))
            }
            Check::OddZerosBetweenTriples { .. } => "all gaps odd".into(),
            Check::Aperiodic { n_max, .. } => Evidence::Aperiodic(*n_max).to_string(),
            Check::Search { expect, k, .. } => match expect {
                Expectation::Unavoidable(Some(l)) => format!("{k}-unavoidable, L={l}"),
                Expectation::Unavoidable(None) => format!("{k}-unavoidable"),
                Expectation::Avoidable => format!("{k}: depth exhausted"),
            },
            Check::Index { lower_bound, candidate, .. } => match candidate {
                Some(c) => format!("lower_bound={lower_bound} candidate={c}"),
                None => format!("lower_bound={lower_bound} candidate=none"),
            },
            Check::PrefixFamilyMeets { prefix, len, .. } => {
                format!("all {} words meet", 1u64 << (len - prefix.len()))
            }
            Check::Growth { expected, .. } => format!("counts {}", join(expected)),
            Check::Consequence { .. } => format!("divides; parent and pattern avoid (n={n})"),
            Check::Informational { .. } => "none".into(),
        }
    }

    pub fn run(&self, prefix_len: usize, depth: usize) -> Result<(String, Status)> {
        let n = prefix_len;
        Ok(match self {
            Check::Count { word, pattern, expected } => {
                let c = count_occurrences(&Word::parse_digits(word)?, &pat(pattern)?);
                (format!("{c} occurrences"), verdict(c == *expected))
            }
            Check::Meets { word, pattern, expected } => {
                let m = meets(&Word::parse_digits(word)?, &pat(pattern)?);
                (m.to_string(), verdict(m == *expected))
            }
            Check::Divides { p, q, expected } => {
                let d = divides(&pat(p)?, &pat(q)?);
                (d.to_string(), verdict(d == *expected))
            }
            Check::StreamAvoids { generator, patterns } => {
                let mut met = Vec::new();
                for p in patterns {
                    let r = stream_avoids(generator, &pat(p)?, n)?;
                    if let Some(o) = r.violation {
                        met.push(format!("{p}@{o}"));
                    }
                }
                if met.is_empty() {
                    let obs = if patterns.len() == 1 { "avoids".into() } else { format!("all {} avoid", patterns.len()) };
                    (obs, Status::Pass)
                } else {
                    (format!("met: {}", met.join("; ")), Status::Fail)
                }
            }
            Check::StreamMeets { generator, pattern } => {
                let r = stream_avoids(generator, &pat(pattern)?, n)?;
                match r.violation {
                    Some(o) => (format!("meets at {o}"), Status::Pass),
                    None => ("avoids".into(), Status::Fail),
                }
            }
            Check::NoSquares { generator, min_root, len } => {
                let sq = list_squares(&prefix(generator, *len, n)?, *min_root)?;
                match sq.first() {
                    None => ("none".into(), Status::Pass),
                    Some((p, r)) => (format!("{} squares, first root {r} at {p}", sq.len()), Status::Fail),
                }
            }
            Check::SquareRoots { generator, expected } => {
                let roots: BTreeSet<String> =
                    square_roots(&prefix(generator, None, n)?, 1)?.iter().map(Word::to_digits).collect();
                let want: BTreeSet<String> = expected.iter().cloned().collect();
                let shown = roots.iter().cloned().collect::<Vec<_>>().join(",");
                (format!("roots {{{shown}}}"), verdict(roots == want))
            }
            Check::NoPalindromes { generator, min_len, parity, len } => {
                let found = list_palindromes(&prefix(generator, *len, n)?, *min_len, *parity)?;
                match found.first() {
                    None => ("none".into(), Status::Pass),
                    Some((p, l)) => (format!("{} found, first length {l} at {p}", found.len()), Status::Fail),
                }
            }
            Check::ForbiddenFactors { generator, factors, len } => {
                let w = prefix(generator, *len, n)?;
                let hits: Vec<String> = factors
                    .iter()
                    .filter(|f| {
                        let f = Word::parse_digits(f).expect("registry factors are digit strings");
                        w.symbols().windows(f.len()).any(|x| x == f.symbols())
                    })
                    .cloned()
                    .collect();
                if hits.is_empty() {
                    ("none".into(), Status::Pass)
                } else {
                    (format!("found {}", hits.join(",")), Status::Fail)
                }
            }
            Check::OddZerosBetweenTriples { generator } => {
                let w = prefix(generator, None, n)?;
                let s = w.symbols();
                let triples: Vec<usize> = (0..s.len().saturating_sub(2))
                    .filter(|&i| s[i..i + 3] == [1, 1, 1])
                    .collect();
                let gaps: Vec<usize> = triples
                    .windows(2)
                    .map(|t| s[t[0] + 3..t[1]].iter().filter(|&&c| c == 0).count())
                    .collect();
                let bad = gaps.iter().filter(|g| *g % 2 == 0).count();
                (
                    format!("{} gaps, {} even", gaps.len(), bad),
                    verdict(bad == 0 && !gaps.is_empty()),
                )
            }
            Check::Aperiodic { generator, n_max } => {
                let e = morse_hedlund_evidence(&prefix(generator, None, n)?, *n_max)?;
                (e.to_string(), verdict(e == Evidence::Aperiodic(*n_max)))
            }
            Check::Search { pattern, k, expect } => {
                let out = search(&pat(pattern)?, *k, depth)?;
                let ok = match (expect, &out.verdict) {
                    (Expectation::Unavoidable(None), Verdict::Unavoidable(_)) => true,
                    (Expectation::Unavoidable(Some(l)), Verdict::Unavoidable(m)) => l == m,
                    (Expectation::Avoidable, Verdict::DepthExhausted(_)) => true,
                    _ => false,
                };
                (describe(&out.verdict), verdict(ok))
            }
            Check::Index { pattern, k_max, lower_bound, candidate } => {
                let p = pat(pattern)?;
                let est = estimate_index(&p, *k_max, depth)?;
                let mut obs = format!(
                    "lower_bound={} candidate={}",
                    est.lower_bound,
                    est.candidate.map_or("none".into(), |c| c.to_string())
                );
                let mut ok = est.lower_bound == *lower_bound && est.candidate == *candidate;
                // re-certify the last unavoidable alphabet by brute force
                if let Some(Verdict::Unavoidable(l)) = est
                    .outcomes
                    .iter()
                    .rev()
                    .find(|o| o.is_unavoidable())
                    .map(|o| &o.verdict)
                {
                    let k = est.lower_bound as u8 - 1;
                    if (k as u64).checked_pow(*l as u32).is_some_and(|t| t <= RESOURCE_GUARD) {
                        let at = exhaustive_unavoidability(&p, k, *l)?;
                        let below = exhaustive_unavoidability(&p, k, l - 1)?;
                        ok &= at && !below;
                        obs.push_str(&format!("; k={k} L={l} exhaustive {}", if at && !below { "confirmed" } else { "MISMATCH" }));
                    }
                }
                (obs, verdict(ok))
            }
            Check::PrefixFamilyMeets { prefix, len, pattern } => {
                let p = pat(pattern)?;
                let head = Word::parse_digits(prefix)?;
                let free = len - head.len();
                let mut avoiding = Vec::new();
                for code in 0u64..(1 << free) {
                    let mut s = head.symbols().to_vec();
                    s.extend((0..free).rev().map(|b| ((code >> b) & 1) as u8));
                    let w = Word::new(s, 2)?;
                    if find_occurrence(&w, &p).is_none() {
                        avoiding.push(w.to_digits());
                    }
                }
                if avoiding.is_empty() {
                    (format!("all {} words meet", 1u64 << free), Status::Pass)
                } else {
                    (format!("{} avoid, e.g. {}", avoiding.len(), avoiding[0]), Status::Fail)
                }
            }
            Check::Growth { pattern, k, expected } => {
                let c = count_avoiders(&pat(pattern)?, *k, expected.len() - 1)?;
                let last = c.len() - 1;
                let tail = if last >= 2 && c[last - 1] > 0 {
                    format!(" (last ratio {:.3})", c[last] as f64 / c[last - 1] as f64)
                } else {
                    String::new()
                };
                (format!("counts {}{tail}", join(&c)), verdict(c == *expected))
            }
            Check::Consequence { parent, pattern, generator } => {
                let (pp, p) = (pat(parent)?, pat(pattern)?);
                let d = divides(&pp, &p);
                let parent_ok = stream_avoids(generator, &pp, n)?.avoids;
                let ok = stream_avoids(generator, &p, n)?.avoids;
                let word = |b: bool, yes: &str, no: &str| if b { yes.to_string() } else { no.to_string() };
                (
                    format!(
                        "{}; parent {}; pattern {}",
                        word(d, "divides", "does not divide"),
                        word(parent_ok, "avoids", "meets"),
                        word(ok, "avoids", "meets")
                    ),
                    verdict(d && parent_ok && ok),
                )
            }
            Check::Informational { pattern, k } => {
                let out = search(&pat(pattern)?, *k, depth)?;
                let mut obs = describe(&out.verdict);
                if let Verdict::DepthExhausted(w) = &out.verdict {
                    let n_max = (w.len() / 2).min(20);
                    if n_max >= 1 {
                        obs.push_str(&format!("; witness {}", morse_hedlund_evidence(w, n_max)?));
                    }
                }
                (obs, Status::Info)
            }
        })
    }
}

fn describe(v: &Verdict) -> String {
    match v {
        Verdict::Unavoidable(l) => format!("unavoidable, L={l}"),
        Verdict::DepthExhausted(w) => {
            let s = digits(w.symbols());
            let head: String = s.chars().take(24).collect();
            format!("depth exhausted ({} letters, witness {head}...)", w.len())
        }
    }
}

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}
