//! Patterns over variables, where each position may carry a reversal flag.
//!
//! Text notation: a lowercase letter is a variable occurrence, the same letter in
//! uppercase is the reversed occurrence. `"abBA"` is `a b b^R a^R`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One pattern position: a variable, possibly reversed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatLetter {
    pub var: u8,
    pub reversed: bool,
}

impl PatLetter {
    pub const fn new(var: u8, reversed: bool) -> Self {
        PatLetter { var, reversed }
    }

    pub fn to_char(self) -> char {
        let c = char::from(b'a' + self.var);
        if self.reversed {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }
}

/// A non-empty pattern whose variables are numbered densely by first occurrence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    positions: Vec<PatLetter>,
    variable_count: u8,
}

impl Pattern {
    /// Renumbers variables by first occurrence. Flags are kept as given.
    pub fn from_positions(positions: Vec<PatLetter>) -> Result<Self> {
        if positions.is_empty() {
            return Err(Error::PatternParse("pattern is empty".into()));
        }
        Ok(densify(positions))
    }

    pub fn parse(text: &str) -> Result<Self> {
        text.parse()
    }

    pub fn positions(&self) -> &[PatLetter] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count as usize
    }

    /// Number of positions carrying each variable.
    pub fn occurrence_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.variable_count()];
        for p in &self.positions {
            counts[p.var as usize] += 1;
        }
        counts
    }

    /// Reverses position order and toggles every flag, then renumbers.
    ///
    /// A word `w` meets `p` iff `w^R` meets `p.reversed()`.
    pub fn reversed(&self) -> Pattern {
        densify(mirror_positions(&self.positions))
    }

    /// Toggles every flag of one variable. Meeting is invariant under this
    /// (substitute the reversed image for the variable).
    pub fn flip_variable(&self, var: u8) -> Pattern {
        let positions = self
            .positions
            .iter()
            .map(|&p| {
                if p.var == var {
                    PatLetter::new(p.var, !p.reversed)
                } else {
                    p
                }
            })
            .collect();
        densify(positions)
    }

    /// Swaps the names of variables 0 and 1 (the complement of a binary pattern).
    pub fn complement(&self) -> Pattern {
        let positions = self
            .positions
            .iter()
            .map(|&p| match p.var {
                0 => PatLetter::new(1, p.reversed),
                1 => PatLetter::new(0, p.reversed),
                v => PatLetter::new(v, p.reversed),
            })
            .collect();
        densify(positions)
    }

    /// True when some variable occurs both plainly and reversed.
    pub fn has_mixed_flags(&self) -> bool {
        (0..self.variable_count).any(|v| {
            let mut flags = self.positions.iter().filter(|p| p.var == v).map(|p| p.reversed);
            let first = flags.next();
            flags.any(|f| Some(f) != first)
        })
    }

    /// Representative of the class closed under renaming, reversal and
    /// per-variable flag flips: the least element under the derived ordering.
    pub fn canonical(&self) -> Pattern {
        let mut best: Option<Pattern> = None;
        for base in [self.clone(), self.reversed()] {
            let vars = base.variable_count;
            for mask in 0u32..(1 << vars) {
                let mut q = base.clone();
                for v in 0..vars {
                    if mask & (1 << v) != 0 {
                        q = q.flip_variable(v);
                    }
                }
                if best.as_ref().map_or(true, |b| q < *b) {
                    best = Some(q);
                }
            }
        }
        best.expect("at least one candidate")
    }

    /// Every flag assignment over the same variable sequence except the given one.
    pub fn reversal_variants(&self) -> Vec<Pattern> {
        let m = self.positions.len();
        assert!(m < 20, "too many positions to enumerate variants");
        let mut out = Vec::with_capacity((1 << m) - 1);
        for mask in 0u32..(1 << m) {
            let positions: Vec<PatLetter> = self
                .positions
                .iter()
                .enumerate()
                .map(|(i, p)| PatLetter::new(p.var, mask & (1 << i) != 0))
                .collect();
            if positions != self.positions {
                out.push(densify(positions));
            }
        }
        out
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::PatternParse("pattern is empty".into()));
        }
        let positions = s
            .chars()
            .enumerate()
            .map(|(i, c)| {
                if c.is_ascii_alphabetic() {
                    let var = c.to_ascii_lowercase() as u8 - b'a';
                    Ok(PatLetter::new(var, c.is_ascii_uppercase()))
                } else {
                    Err(Error::PatternParse(format!("illegal character {c:?} at {i}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(densify(positions))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.positions {
            write!(f, "{}", p.to_char())?;
        }
        Ok(())
    }
}

pub fn parse_pattern(text: &str) -> Result<Pattern> {
    text.parse()
}

pub fn format_pattern(p: &Pattern) -> String {
    p.to_string()
}

pub fn reverse_pattern(p: &Pattern) -> Pattern {
    p.reversed()
}

/// Equal up to a bijective renaming of variables (flags and order preserved).
pub fn equivalent(p: &Pattern, q: &Pattern) -> bool {
    // both are densified, and densification is canonical under renaming
    p == q
}

/// Reverse order and toggle flags, without renumbering.
pub(crate) fn mirror_positions(positions: &[PatLetter]) -> Vec<PatLetter> {
    positions
        .iter()
        .rev()
        .map(|p| PatLetter::new(p.var, !p.reversed))
        .collect()
}

fn densify(positions: Vec<PatLetter>) -> Pattern {
    let mut map: Vec<Option<u8>> = Vec::new();
    let mut next = 0u8;
    let positions = positions
        .into_iter()
        .map(|p| {
            let v = p.var as usize;
            if map.len() <= v {
                map.resize(v + 1, None);
            }
            let id = *map[v].get_or_insert_with(|| {
                next += 1;
                next - 1
            });
            PatLetter::new(id, p.reversed)
        })
        .collect();
    Pattern {
        positions,
        variable_count: next,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    fn letters(s: &str) -> Vec<(u8, bool)> {
        p(s).positions().iter().map(|l| (l.var, l.reversed)).collect()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(letters("aA"), vec![(0, false), (0, true)]);
        assert_eq!(
            letters("abBA"),
            vec![(0, false), (1, false), (1, true), (0, true)]
        );
        assert_eq!(
            letters("Abab"),
            vec![(0, true), (1, false), (0, false), (1, false)]
        );
        // first-seen variable becomes a
        assert_eq!(p("bab").to_string(), "aba");
        assert_eq!(p("BaB").to_string(), "AbA");
    }

    #[test]
    fn parse_errors() {
        assert!(Pattern::parse("").is_err());
        assert!(Pattern::parse("a1").is_err());
        assert!(Pattern::parse("a b").is_err());
    }

    #[test]
    fn reverse_examples() {
        // reverse of aab is B A A, i.e. abb with every flag toggled
        assert_eq!(p("aab").reversed().to_string(), "ABB");
        assert_eq!(p("aab").reversed().canonical(), p("abb").canonical());
        assert_eq!(p("aA").reversed(), p("aA"));
        assert_eq!(p("abBA").reversed(), p("abBA"));
    }

    #[test]
    fn equivalence_examples() {
        assert!(equivalent(&p("aa"), &p("bb")));
        assert!(!equivalent(&p("aA"), &p("Aa")));
        assert!(equivalent(&p("ab"), &p("ba")));
    }

    #[test]
    fn mixed_flags() {
        assert!(p("aA").has_mixed_flags());
        assert!(!p("AAbbA").has_mixed_flags());
        assert!(p("aabbA").has_mixed_flags());
    }

    #[test]
    fn canonical_is_class_invariant() {
        let base = p("Abab");
        let c = base.canonical();
        assert_eq!(base.reversed().canonical(), c);
        assert_eq!(base.complement().canonical(), c);
        assert_eq!(base.flip_variable(1).canonical(), c);
    }

    #[test]
    fn variants_of_five_positions() {
        assert_eq!(p("aabba").reversal_variants().len(), 31);
        let mixed = p("aabba")
            .reversal_variants()
            .into_iter()
            .filter(Pattern::has_mixed_flags)
            .count();
        assert_eq!(mixed, 28);
    }

    #[test]
    fn format_round_trip() {
        for s in ["a", "aA", "AabbAa", "abcCBA"] {
            assert_eq!(format_pattern(&parse_pattern(s).unwrap()), s);
        }
    }
}
