//! Exhaustive agreement with a naive factorization oracle.

use std::collections::BTreeSet;

use revpat::matcher::{count_occurrences_with, find_occurrence_with, meets_with, Engine};
use revpat::pattern::Pattern;
use revpat::Word;

mod common;
use common::{binary_words, oracle, patterns};

/// Checks all three engines on every binary word with length in `word_lens`
/// against every pattern with length in `pattern_lens`. Patterns equal up to
/// renaming a <-> b parse to the same value, so only one of each is kept.
fn run(pattern_lens: std::ops::RangeInclusive<usize>, word_lens: std::ops::RangeInclusive<usize>) {
    let mut seen = BTreeSet::new();
    let texts: Vec<String> = patterns(4)
        .into_iter()
        .filter(|t| pattern_lens.contains(&t.len()))
        .filter(|t| seen.insert(t.parse::<Pattern>().unwrap().to_string()))
        .collect();
    let parsed: Vec<Pattern> = texts.iter().map(|t| t.parse().unwrap()).collect();
    for sym in binary_words(*word_lens.end()).filter(|s| word_lens.contains(&s.len())) {
        let w = Word::new(sym.clone(), 2).unwrap();
        for (text, p) in texts.iter().zip(&parsed) {
            let occ = oracle(&sym, text);
            let best = occ.iter().min_by(|x, y| (x.0, x.1 - x.0, &x.2).cmp(&(y.0, y.1 - y.0, &y.2)));
            for engine in [Engine::Backtrack, Engine::Indexed, Engine::Auto] {
                let ctx = || format!("{engine:?} {text} {}", w.to_digits());
                assert_eq!(meets_with(&w, p, engine), best.is_some(), "{}", ctx());
                assert_eq!(count_occurrences_with(&w, p, engine), occ.len() as u64, "{}", ctx());
                match (find_occurrence_with(&w, p, engine), best) {
                    (None, None) => {}
                    (Some(f), Some(b)) => {
                        let images: Vec<Vec<u8>> =
                            f.assignment.images().iter().map(|x| x.symbols().to_vec()).collect();
                        assert_eq!(&(f.start, f.end, images), b, "{}", ctx());
                    }
                    (f, b) => panic!("{}: {f:?} vs {b:?}", ctx()),
                }
            }
        }
    }
}

#[test]
fn oracle_sanity() {
    // 0011001 with aa: 00, 11, 00
    assert_eq!(oracle(&[0, 0, 1, 1, 0, 0, 1], "aa").len(), 3);
    assert_eq!(oracle(&[0, 0, 1, 1, 0, 0, 1], "aA").len(), 6);
    assert!(oracle(&[0, 1, 0, 1, 1], "abba").is_empty());
    assert_eq!(oracle(&[0, 1, 1, 0], "aA")[0], (0, 4, vec![vec![0, 1]]));
    assert_eq!(patterns(4).len(), 4 + 16 + 64 + 256);
}

#[test]
fn patterns_up_to_three() {
    run(1..=3, 1..=12);
}

#[test]
fn length_four_words_up_to_ten() {
    run(4..=4, 1..=10);
}

#[test]
fn length_four_words_of_eleven() {
    run(4..=4, 11..=11);
}

#[test]
fn length_four_words_of_twelve() {
    run(4..=4, 12..=12);
}
