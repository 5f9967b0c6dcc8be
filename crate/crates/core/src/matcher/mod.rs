//! Finding occurrences of patterns with reversed variables in words.
//!
//! Short words, patterns with three or more variables, and patterns in which
//! no variable repeats go through a start-anchored backtracker. Everything
//! else is routed through an LCE index over `w·#·w^R` and an anchored
//! enumeration that only ever visits length combinations compatible with one
//! repeated variable.

mod backtrack;
pub(crate) mod index;
mod planner;

use std::fmt;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::generators::generate;
use crate::pattern::{mirror_positions, PatLetter, Pattern};
use crate::word::{Symbol, Word};

pub(crate) use backtrack::{images_from_slots, occurs_anywhere, Backtracker};
use index::LceIndex;
use planner::{smallest_period, Candidate, Planner};

/// Below this length the backtracker beats building an index.
const INDEX_THRESHOLD: usize = 64;
/// Words with a period at most this (and repeating at least four times)
/// only need image lengths up to the period.
const PERIOD_SHRINK: usize = 32;

/// Images of the pattern variables; `images[v]` is the image of variable `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    images: Vec<Word>,
}

impl Assignment {
    pub fn new(images: Vec<Word>) -> Result<Self> {
        if images.iter().any(Word::is_empty) {
            return Err(Error::Domain("assignment images must be non-empty".into()));
        }
        Ok(Assignment { images })
    }

    pub fn image(&self, var: u8) -> Option<&Word> {
        self.images.get(var as usize)
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// φ(p): the word obtained by substituting each image into the pattern.
    pub fn apply(&self, p: &Pattern) -> Result<Vec<Symbol>> {
        let mut out = Vec::new();
        for l in p.positions() {
            let img = self
                .image(l.var)
                .ok_or_else(|| Error::Domain(format!("no image for variable {}", l.to_char())))?;
            if l.reversed {
                out.extend(img.symbols().iter().rev());
            } else {
                out.extend_from_slice(img.symbols());
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, img) in self.images.iter().enumerate() {
            if v > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}={}", PatLetter::new(v as u8, false).to_char(), img)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrence {
    pub start: usize,
    /// Exclusive.
    pub end: usize,
    pub assignment: Assignment,
}

impl fmt::Display for Occurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.start, self.end, self.assignment)
    }
}

/// Which enumeration strategy to use. `Auto` is what the public functions do;
/// the others exist so both paths can be tested against each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Auto,
    Backtrack,
    Indexed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StreamCheck {
    pub avoids: bool,
    pub violation: Option<Occurrence>,
}

pub fn find_occurrence(w: &Word, p: &Pattern) -> Option<Occurrence> {
    find_occurrence_with(w, p, Engine::Auto)
}

pub fn meets(w: &Word, p: &Pattern) -> bool {
    meets_with(w, p, Engine::Auto)
}

pub fn count_occurrences(w: &Word, p: &Pattern) -> u64 {
    count_occurrences_with(w, p, Engine::Auto)
}

/// Whether some occurrence of `p` ends exactly after position `i`.
pub fn occurrence_ending_at(w: &Word, i: usize, p: &Pattern) -> Result<bool> {
    if i >= w.len() {
        return Err(Error::Domain(format!(
            "position {i} out of range for a word of length {}",
            w.len()
        )));
    }
    Ok(ends_with_occurrence(&w.symbols()[..=i], p))
}

/// Checks the length-`n` prefix of a generated word; reports the leftmost occurrence.
pub fn stream_avoids(generator: &str, p: &Pattern, n: usize) -> Result<StreamCheck> {
    if n == 0 {
        return Err(Error::Domain("prefix length must be at least 1".into()));
    }
    let w = generate(generator, n)?;
    let violation = find_occurrence(&w, p);
    Ok(StreamCheck {
        avoids: violation.is_none(),
        violation,
    })
}

/// Suffix check on a raw prefix, as used by the search pruning.
pub(crate) fn ends_with_occurrence(prefix: &[Symbol], p: &Pattern) -> bool {
    let rev: Vec<Symbol> = prefix.iter().rev().copied().collect();
    let mirrored = mirror_positions(p.positions());
    let mut bt = Backtracker::new(&rev, &mirrored, p.variable_count());
    bt.for_each_at(0, &mut |_, _| ControlFlow::Break(())).is_break()
}

/// Meeting test on a raw (short) word.
pub(crate) fn meets_symbols(text: &[Symbol], p: &Pattern) -> bool {
    occurs_anywhere(text, p.positions(), p.variable_count())
}

enum Plan {
    Backtrack,
    Indexed(LceIndex),
}

fn plan(w: &Word, p: &Pattern, engine: Engine) -> Plan {
    let repeated = p.occurrence_counts().iter().any(|&c| c >= 2);
    let indexable = p.variable_count() <= 2 && repeated;
    match engine {
        Engine::Backtrack => Plan::Backtrack,
        Engine::Indexed if indexable => Plan::Indexed(LceIndex::new(w.symbols())),
        Engine::Auto if indexable && w.len() >= INDEX_THRESHOLD => {
            Plan::Indexed(LceIndex::new(w.symbols()))
        }
        _ => Plan::Backtrack,
    }
}

/// Orders occurrences: start, then length, then images variable by variable.
fn better(a: (usize, usize, &[Vec<Symbol>]), b: (usize, usize, &[Vec<Symbol>])) -> bool {
    a < b
}

pub fn find_occurrence_with(w: &Word, p: &Pattern, engine: Engine) -> Option<Occurrence> {
    let text = w.symbols();
    let (start, end, images) = match plan(w, p, engine) {
        Plan::Backtrack => {
            let mut bt = Backtracker::new(text, p.positions(), p.variable_count());
            let mut found: Option<(usize, usize, Vec<Vec<Symbol>>)> = None;
            for s in 0..text.len() {
                let _ = bt.for_each_at(s, &mut |slots, end| {
                    let imgs = images_from_slots(text, slots);
                    let replace = match &found {
                        None => true,
                        Some((fs, fe, fi)) => better((s, end - s, &imgs), (*fs, fe - fs, fi)),
                    };
                    if replace {
                        found = Some((s, end, imgs));
                    }
                    ControlFlow::Continue(())
                });
                if found.is_some() {
                    break;
                }
            }
            found?
        }
        Plan::Indexed(idx) => {
            let planner = Planner::new(&idx, p.positions(), p.variable_count());
            let mut best: Option<(Candidate, Vec<Vec<Symbol>>)> = None;
            let mut visit = |c: Candidate| {
                if let Some((b, _)) = &best {
                    if c.start > b.start {
                        return ControlFlow::Break(());
                    }
                }
                let total = planner.total_len(c.lens);
                let imgs = images_from_slots(text, &planner.slots(c));
                let replace = match &best {
                    None => true,
                    Some((b, bi)) => better(
                        (c.start, total, &imgs),
                        (b.start, planner.total_len(b.lens), bi),
                    ),
                };
                if replace {
                    best = Some((c, imgs));
                }
                ControlFlow::Continue(())
            };
            match shrink_bound(&idx) {
                Some(q) => {
                    let _ = planner.for_each_bounded(q, &mut visit);
                }
                None => {
                    let lo = planner.leftmost_start()?;
                    for c in planner.shortest_at(lo) {
                        let _ = visit(c);
                    }
                }
            }
            let (c, imgs) = best?;
            (c.start, c.start + planner.total_len(c.lens), imgs)
        }
    };
    let images = images
        .into_iter()
        .map(|img| Word::new(img, w.alphabet_size()).expect("factor of a valid word"))
        .collect();
    Some(Occurrence {
        start,
        end,
        assignment: Assignment { images },
    })
}

pub fn meets_with(w: &Word, p: &Pattern, engine: Engine) -> bool {
    match plan(w, p, engine) {
        Plan::Backtrack => occurs_anywhere(w.symbols(), p.positions(), p.variable_count()),
        Plan::Indexed(idx) => {
            let planner = Planner::new(&idx, p.positions(), p.variable_count());
            match shrink_bound(&idx) {
                Some(q) => planner.for_each_bounded(q, &mut |_| ControlFlow::Break(())).is_break(),
                None => planner.meets(),
            }
        }
    }
}

pub fn count_occurrences_with(w: &Word, p: &Pattern, engine: Engine) -> u64 {
    let mut count = 0u64;
    match plan(w, p, engine) {
        Plan::Backtrack => {
            let text = w.symbols();
            let mut bt = Backtracker::new(text, p.positions(), p.variable_count());
            for s in 0..text.len() {
                let _ = bt.for_each_at(s, &mut |_, _| {
                    count += 1;
                    ControlFlow::Continue(())
                });
            }
        }
        Plan::Indexed(idx) => {
            let planner = Planner::new(&idx, p.positions(), p.variable_count());
            let _ = planner.for_each(&mut |_| {
                count += 1;
                ControlFlow::Continue(())
            });
        }
    }
    count
}

/// If the word has a small period `q` and spans at least four periods, an
/// occurrence exists iff one exists with all image lengths at most `q`, and
/// the leftmost-shortest one is among those.
fn shrink_bound(idx: &LceIndex) -> Option<usize> {
    let n = idx.len();
    let q = smallest_period(idx);
    (q <= PERIOD_SHRINK && n >= 4 * q).then_some(q)
}

/// Whether `p` divides `q`: some factor of `q` is an image of `p` under a
/// non-erasing morphism into patterns that commutes with reversal.
pub fn divides(p: &Pattern, q: &Pattern) -> bool {
    occurs_anywhere(q.positions(), p.positions(), p.variable_count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse_digits(s).unwrap()
    }
    fn p(s: &str) -> Pattern {
        Pattern::parse(s).unwrap()
    }

    #[test]
    fn small_examples() {
        let occ = find_occurrence(&w("001100"), &p("abba")).unwrap();
        assert_eq!(occ.to_string(), "0 6 a=00 b=1");
        assert!(find_occurrence(&w("01011"), &p("abba")).is_none());
        let occ = find_occurrence(&w("0011001"), &p("aAa")).unwrap();
        assert_eq!(occ.assignment.image(0).unwrap().to_digits(), "01");
        assert!(!meets(&w("0011001"), &p("aaa")));
        assert!(meets(&w("0011001"), &p("aAa")));
        assert!(meets(&w("0"), &p("a")));
        assert!(meets(&w("0110"), &p("abba")));
        assert!(meets(&w("001100"), &p("abba")));
    }

    #[test]
    fn counts() {
        assert_eq!(count_occurrences(&w("0011001"), &p("aa")), 3);
        assert_eq!(count_occurrences(&w("0011001"), &p("aA")), 6);
        assert_eq!(count_occurrences(&w("00"), &p("aa")), 1);
    }

    #[test]
    fn ending_at() {
        assert!(!occurrence_ending_at(&w("010"), 2, &p("aa")).unwrap());
        assert!(occurrence_ending_at(&w("0110"), 3, &p("abba")).unwrap());
        assert!(occurrence_ending_at(&w("0011"), 3, &p("aA")).unwrap());
        assert!(occurrence_ending_at(&w("0011"), 4, &p("aA")).is_err());
    }

    #[test]
    fn streams() {
        let r = stream_avoids("alt01", &p("aa"), 100).unwrap();
        assert!(!r.avoids);
        assert_eq!(r.violation.unwrap().to_string(), "0 4 a=01");
        assert!(stream_avoids("alt01", &p("aA"), 2000).unwrap().avoids);
        assert!(stream_avoids("tau_prime", &p("aAa"), 2000).unwrap().avoids);
        assert!(stream_avoids("nope", &p("aA"), 10).is_err());
    }

    #[test]
    fn reversed_images_are_unreversed() {
        // first copy of a is reversed: the image is read back to front
        let occ = find_occurrence(&w("0110"), &p("Aa")).unwrap();
        assert_eq!(occ.to_string(), "0 4 a=10");
        let occ = find_occurrence(&w("011"), &p("Ab")).unwrap();
        assert_eq!(occ.to_string(), "0 2 a=0 b=1");
    }

    #[test]
    fn engines_agree_on_long_words() {
        let words = ["tau_prime", "tau_triple", "sigma12", "alt01", "squarefree3"];
        let pats = ["aa", "aA", "aAa", "abBA", "aABb", "Abab", "abba", "aabAb", "AAbbaa", "aab"];
        for g in words {
            let word = generate(g, 300).unwrap();
            for s in pats {
                let pat = p(s);
                let a = find_occurrence_with(&word, &pat, Engine::Backtrack);
                let b = find_occurrence_with(&word, &pat, Engine::Indexed);
                assert_eq!(a, b, "{g} {s}");
                if s.len() <= 4 {
                    assert_eq!(
                        count_occurrences_with(&word, &pat, Engine::Backtrack),
                        count_occurrences_with(&word, &pat, Engine::Indexed),
                        "{g} {s}"
                    );
                }
            }
        }
    }

    #[test]
    fn divisibility() {
        assert!(!divides(&p("aa"), &p("aba")));
        assert!(divides(&p("aa"), &p("abab")));
        assert!(divides(&p("aA"), &p("aAbb")));
        // a reversed copy takes the reversed image
        assert!(divides(&p("aA"), &p("abBA")));
    }
}
