use crate::analytics::Parity;
use crate::generators::{RSW_FORBIDDEN_LONG, RSW_FORBIDDEN_PAIRS};
use crate::pattern::Pattern;
use crate::word::digits;

use super::check::{Check, Expectation, LemmaCheck};

fn s(x: &str) -> String {
    x.to_string()
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn avoids(generator: &str, pattern: &str) -> Check {
    Check::StreamAvoids {
        generator: s(generator),
        patterns: vec![s(pattern)],
    }
}

const TAU_TRIPLE_NINE: [&str; 9] = [
    "AAbbaa", "AabbAa", "AabbaA", "Aabbaa", "aAbbaa", "aAbabb", "Aababb", "AabaBb", "aAbaBb",
];

const CONSEQUENCES: [(&str, &str); 12] = [
    ("abBA", "AABbaa"),
    ("abBA", "aABbaa"),
    ("abBA", "abABba"),
    ("abBA", "abaBbA"),
    ("abBA", "abAbBa"),
    ("abBA", "ababBA"),
    ("abBA", "aaBbA"),
    ("aABb", "AaBba"),
    ("aABb", "aABba"),
    ("aABb", "AaBbaa"),
    ("aABb", "AaBbAa"),
    ("aABb", "AaBbaA"),
];

const OPEN: [&str; 14] = [
    "Aabba", "aAbba", "aabbA", "aabAbb", "AaBabb", "aABabb", "aaBAbb", "abAbba", "ababbA", "ABabba",
    "aBAbba", "aBabbA", "AbaBba", "AbabBa",
];

/// Avoider counts for n = 0..=22, produced by an independent brute-force
/// enumerator (naive factorization test on every extension).
const GROWTH: [(&str, &str, [u64; 23]); 4] = [
    ("L_aabab_growth_1", "aabaB", [
        1, 2, 4, 8, 16, 28, 50, 84, 132, 206, 310, 456, 654, 922, 1286, 1780, 2450, 3348, 4592,
        6296, 8624, 11838, 16292,
    ]),
    ("L_aabab_growth_2", "aabAb", [
        1, 2, 4, 8, 16, 28, 50, 82, 130, 194, 282, 394, 540, 716, 918, 1140, 1362, 1578, 1782,
        1956, 2072, 2136, 2126,
    ]),
    ("L_aabab_growth_3", "aabAB", [
        1, 2, 4, 8, 16, 28, 50, 84, 132, 204, 304, 444, 642, 904, 1252, 1718, 2352, 3206, 4400,
        6024, 8270, 11350, 15606,
    ]),
    ("L_abBa_growth", "abBa", [
        1, 2, 4, 8, 12, 18, 22, 24, 24, 24, 20, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18,
    ]),
];

/// Reversal variants of a classical pattern that reverse at least one variable.
fn mixed_variants(base: &str) -> Vec<Pattern> {
    Pattern::parse(base)
        .expect("registry bases parse")
        .reversal_variants()
        .into_iter()
        .filter(Pattern::has_mixed_flags)
        .collect()
}

/// Patterns with one copy of a variable reversed next to a plain copy,
/// expanded from the list of 2-avoidable variants.
fn rem1_patterns() -> Vec<String> {
    let mut out = strings(&[
        "aA", "aAb", "Aab", "aAbb", "Aabb", "baAb", "bAab", "Aabaa", "aAbaa", "aabAa", "aabaA",
        "Aaba", "aAba", "aAbAa", "AabAa",
    ]);
    // every variant of aabab with exactly one of the first two copies reversed
    for v in Pattern::parse("aabab").unwrap().reversal_variants() {
        let p = v.positions();
        if p[0].reversed != p[1].reversed {
            out.push(v.to_string());
        }
    }
    out.sort();
    out.dedup();
    out
}

pub fn registry() -> Vec<LemmaCheck> {
    let mut r: Vec<LemmaCheck> = Vec::new();
    let mut add = |id: &str, anchor: &str, check: Check| {
        r.push(LemmaCheck {
            id: s(id),
            anchor: s(anchor),
            check,
        })
    };

    // small worked examples
    add("P_counts_aa", "0011001 has three occurrences of aa", Check::Count { word: s("0011001"), pattern: s("aa"), expected: 3 });
    add("P_counts_aA", "0011001 has six occurrences of aA", Check::Count { word: s("0011001"), pattern: s("aA"), expected: 6 });
    add("P_counts_aaa", "0011001 has no occurrence of aaa", Check::Meets { word: s("0011001"), pattern: s("aaa"), expected: false });
    add("P_counts_aAa", "0011001 has an occurrence of aAa", Check::Meets { word: s("0011001"), pattern: s("aAa"), expected: true });
    add("P_example_meets", "001100 meets abba", Check::Meets { word: s("001100"), pattern: s("abba"), expected: true });
    add("P_example_avoids", "01011 avoids abba", Check::Meets { word: s("01011"), pattern: s("abba"), expected: false });
    add("P_divides_1", "aa does not divide aba", Check::Divides { p: s("aa"), q: s("aba"), expected: false });
    add("P_divides_2", "aa divides abab", Check::Divides { p: s("aa"), q: s("abab"), expected: true });

    // palindromes
    add("R_palindrome_equiv", "occurrences of aA are the even palindromes", Check::Count { word: s("0011001"), pattern: s("aA"), expected: 6 });
    add("R_palindrome_sqfree", "a square-free word has no even palindrome", Check::NoPalindromes { generator: s("squarefree3"), min_len: 2, parity: Parity::Even, len: None });
    add("R_ternary_palindromes", "(012)^w avoids all palindromes of length >= 2", Check::NoPalindromes { generator: s("alt012"), min_len: 2, parity: Parity::All, len: None });
    add("R_unary_avoid", "(01)^w avoids aA and Aa", Check::StreamAvoids { generator: s("alt01"), patterns: strings(&["aA", "Aa"]) });

    // unary patterns
    add("T_unary_1", "a is unavoidable", Check::Search { pattern: s("a"), k: 3, expect: Expectation::Unavoidable(Some(1)) });
    add("T_unary_1_rev", "A is unavoidable", Check::Search { pattern: s("A"), k: 3, expect: Expectation::Unavoidable(Some(1)) });
    add("T_unary_2", "an aperiodic ternary word avoids every unary pattern of length >= 2", Check::StreamAvoids { generator: s("squarefree3"), patterns: strings(&["aa", "aA", "Aa"]) });
    add("T_unary_2_aperiodic", "the square-free ternary word is aperiodic", Check::Aperiodic { generator: s("squarefree3"), n_max: 20 });
    add("R_sqfree3", "the ternary fixed point is square-free", Check::NoSquares { generator: s("squarefree3"), min_root: 1, len: None });
    add("T_unary_3", "unary patterns with a factor aA or Aa are 2-avoidable", Check::StreamAvoids { generator: s("alt01"), patterns: strings(&["aAa", "AaA", "aAAa", "aaA", "aAaA"]) });
    add("T_unary_4", "aaa is 2-avoidable", Check::Search { pattern: s("aaa"), k: 2, expect: Expectation::Avoidable });
    add("L_tau_prime", "tau_prime avoids aAa", avoids("tau_prime", "aAa"));
    add("L_tau_prime_aperiodic", "tau_prime is aperiodic", Check::Aperiodic { generator: s("tau_prime"), n_max: 20 });

    // classical binary patterns
    for (i, p) in ["ab", "aba", "aB", "Aba", "aBa", "AbA"].iter().enumerate() {
        add(&format!("T2_unavoidable_{}", i + 1), &format!("{p} is unavoidable"), Check::Search { pattern: s(p), k: 3, expect: Expectation::Unavoidable(None) });
    }
    for (i, p) in ["aa", "aab", "aaba", "aabb", "abab", "abba", "aabaa", "aabab"].iter().enumerate() {
        add(&format!("T2_index3_{}_k2", i + 1), &format!("{p} is 2-unavoidable"), Check::Search { pattern: s(p), k: 2, expect: Expectation::Unavoidable(None) });
        // every entry has a square factor, so the square-free ternary word avoids it;
        // lexicographic DFS at k = 3 backtracks too much to serve as the witness here
        add(&format!("T2_index3_{}_k3", i + 1), &format!("{p} is 3-avoidable (square-free ternary word)"), avoids("squarefree3", p));
    }

    for (i, p) in rem1_patterns().iter().enumerate() {
        add(&format!("R_rem1_{:02}", i + 1), &format!("{p} is avoided by (01)^w"), avoids("alt01", p));
    }

    add("L_avoid1", "tau_dprime avoids ABab", avoids("tau_dprime", "ABab"));
    add("L_avoid1_index", "ABab has avoidability index 3", Check::Index { pattern: s("ABab"), k_max: 3, lower_bound: 3, candidate: Some(3) });
    add("L_avoid1_aperiodic", "tau_dprime is aperiodic", Check::Aperiodic { generator: s("tau_dprime"), n_max: 20 });
    add("T_useful", "sigma12 has no square with root >= 2", Check::NoSquares { generator: s("sigma12"), min_root: 2, len: None });
    add("T_useful_palindromes", "sigma12 has no palindrome of length >= 3", Check::NoPalindromes { generator: s("sigma12"), min_len: 3, parity: Parity::All, len: None });
    add("L_aRbab", "sigma12 avoids Abab", avoids("sigma12", "Abab"));
    add("L_aRbab_index", "Abab has avoidability index 3", Check::Index { pattern: s("Abab"), k_max: 3, lower_bound: 3, candidate: Some(3) });
    add("L_abbA_periodic", "(01)^w avoids abbA", avoids("alt01", "abbA"));

    add("L4", "tau_triple avoids abBA", avoids("tau_triple", "abBA"));
    add("L4_factors", "tau_triple contains none of 00, 0110, 1111", Check::ForbiddenFactors { generator: s("tau_triple"), factors: strings(&["00", "0110", "1111"]), len: None });
    add("L4_odd_zeros", "an odd number of 0s lies between consecutive 111 blocks of tau_triple", Check::OddZerosBetweenTriples { generator: s("tau_triple") });
    add("L4_palindromes", "tau_triple has no even palindrome longer than 2", Check::NoPalindromes { generator: s("tau_triple"), min_len: 4, parity: Parity::Even, len: None });
    add("L4_aperiodic", "tau_triple is aperiodic", Check::Aperiodic { generator: s("tau_triple"), n_max: 20 });
    add("L5", "tau_triple avoids aABb", avoids("tau_triple", "aABb"));

    add("L_suffix01_finite", "every binary word of length 11 starting with 100 meets aAbb", Check::PrefixFamilyMeets { prefix: s("100"), len: 11, pattern: s("aAbb") });
    add("L_suffix01_alt", "(01)^w avoids aAbb", avoids("alt01", "aAbb"));

    for (i, p) in ["aabaB", "aabAb", "aabAB"].iter().enumerate() {
        add(&format!("L_aabab_{}", i + 1), &format!("{p} is avoided by (01)^w"), avoids("alt01", p));
    }
    for (id, p, counts) in GROWTH {
        add(id, &format!("binary avoiders of {p}, lengths 0..22"), Check::Growth { pattern: s(p), k: 2, expected: counts.to_vec() });
    }

    for (i, v) in Pattern::parse("aabba").unwrap().reversal_variants().iter().enumerate() {
        let id = format!("L_aabba_{:02}", i + 1);
        if v.has_mixed_flags() {
            add(&id, &format!("{v} is avoided by (01)^w"), avoids("alt01", &v.to_string()));
        } else {
            // renaming flags away gives classical aabba, which (01)^w meets
            add(&id, &format!("{v} is flag-uniform: equivalent to aabba, met by (01)^w"), Check::StreamMeets { generator: s("alt01"), pattern: v.to_string() });
        }
    }
    for base in ["aababb", "ababba", "aabbaa"] {
        let vs: Vec<String> = mixed_variants(base).iter().map(Pattern::to_string).collect();
        add(&format!("L_div_{base}"), &format!("every variant of {base} reversing a variable is 2-avoidable"), Check::StreamAvoids { generator: s("alt01"), patterns: vs });
    }

    let forbidden: Vec<String> = RSW_FORBIDDEN_PAIRS
        .iter()
        .map(|p| digits(p))
        .chain(std::iter::once(digits(&RSW_FORBIDDEN_LONG)))
        .collect();
    add("T_rsw_base", "the base word avoids the forbidden factors", Check::ForbiddenFactors { generator: s("squarefree5_rsw"), factors: forbidden, len: Some(2000) });
    add("T_rsw_base_sqfree", "the base word is square-free", Check::NoSquares { generator: s("squarefree5_rsw"), min_root: 1, len: Some(2000) });
    add("T_rsw", "the only squares of rsw6 are 00, 11, 0101", Check::SquareRoots { generator: s("rsw6"), expected: strings(&["0", "1", "01"]) });
    add("L11", "rsw6 avoids Ababa", avoids("rsw6", "Ababa"));
    add("L11_aperiodic", "rsw6 is aperiodic", Check::Aperiodic { generator: s("rsw6"), n_max: 20 });

    for (i, p) in TAU_TRIPLE_NINE.iter().enumerate() {
        add(&format!("L12_{}", i + 1), &format!("tau_triple avoids {p}"), avoids("tau_triple", p));
    }
    for (i, (parent, p)) in CONSEQUENCES.iter().enumerate() {
        add(&format!("CONSEQ_{:02}", i + 1), &format!("{parent} divides {p}, so tau_triple avoids it"), Check::Consequence { parent: s(parent), pattern: s(p), generator: s("tau_triple") });
    }
    for (i, p) in OPEN.iter().enumerate() {
        add(&format!("Q_open_{:02}", i + 1), &format!("open: aperiodic binary avoidability of {p}"), Check::Informational { pattern: s(p), k: 2 });
    }
    r
}
