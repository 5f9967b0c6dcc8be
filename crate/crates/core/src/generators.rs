//! Named, deterministic infinite words, produced lazily as symbol streams.
//!
//! Every stream is prefix-consistent: the first `n` symbols never depend on how
//! many symbols are requested afterwards.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{Morphism, Symbol, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorId {
    /// `(01)^ω`
    Alt01,
    /// `(012)^ω`
    Alt012,
    /// `(01)^ω` with a doubled 1 after blocks of `2^k` copies of `01`.
    TauPrime,
    /// `TauPrime` with a 2 inserted before every 0.
    TauDprime,
    /// Blocks `(01)^(2^k - 1)` followed by `11`, for `k >= 1`.
    TauTriple,
    /// `psi12` applied to `Squarefree3`.
    Sigma12,
    /// `psi6` applied to `Squarefree5Rsw`.
    Rsw6,
    /// Fixed point of `0 -> 012, 1 -> 02, 2 -> 1`.
    Squarefree3,
    /// Lexicographically least square-free word over five letters that avoids the
    /// factors `02 03 04 13 14 20 24 30 31 41 42 434010`.
    Squarefree5Rsw,
}

impl GeneratorId {
    pub const ALL: [GeneratorId; 9] = [
        GeneratorId::Alt01,
        GeneratorId::Alt012,
        GeneratorId::TauPrime,
        GeneratorId::TauDprime,
        GeneratorId::TauTriple,
        GeneratorId::Sigma12,
        GeneratorId::Rsw6,
        GeneratorId::Squarefree3,
        GeneratorId::Squarefree5Rsw,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorId::Alt01 => "alt01",
            GeneratorId::Alt012 => "alt012",
            GeneratorId::TauPrime => "tau_prime",
            GeneratorId::TauDprime => "tau_dprime",
            GeneratorId::TauTriple => "tau_triple",
            GeneratorId::Sigma12 => "sigma12",
            GeneratorId::Rsw6 => "rsw6",
            GeneratorId::Squarefree3 => "squarefree3",
            GeneratorId::Squarefree5Rsw => "squarefree5_rsw",
        }
    }

    pub fn alphabet_size(self) -> u8 {
        match self {
            GeneratorId::Alt01
            | GeneratorId::TauPrime
            | GeneratorId::TauTriple
            | GeneratorId::Rsw6 => 2,
            GeneratorId::Alt012
            | GeneratorId::TauDprime
            | GeneratorId::Sigma12
            | GeneratorId::Squarefree3 => 3,
            GeneratorId::Squarefree5Rsw => 5,
        }
    }

    pub fn stream(self) -> WordGenerator {
        WordGenerator::new(self)
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GeneratorId::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::UnknownGenerator(s.to_string()))
    }
}

/// Length-`n` prefix of the named infinite word.
pub fn generate(name: &str, n: usize) -> Result<Word> {
    let id: GeneratorId = name.parse()?;
    Ok(generate_id(id, n))
}

pub fn generate_id(id: GeneratorId, n: usize) -> Word {
    let symbols: Vec<Symbol> = id.stream().take(n).collect();
    Word::new(symbols, id.alphabet_size()).expect("generators respect their alphabet")
}

/// Single-consumer cursor over a named infinite word.
pub struct WordGenerator {
    id: GeneratorId,
    inner: Box<dyn Iterator<Item = Symbol> + Send>,
}

impl WordGenerator {
    pub fn new(id: GeneratorId) -> Self {
        let inner: Box<dyn Iterator<Item = Symbol> + Send> = match id {
            GeneratorId::Alt01 => Box::new((0..2u8).cycle()),
            GeneratorId::Alt012 => Box::new((0..3u8).cycle()),
            GeneratorId::TauPrime => Box::new(BlockStream::tau_prime()),
            GeneratorId::TauDprime => Box::new(MorphicStream::new(
                BlockStream::tau_prime(),
                Morphism::new(vec![vec![2, 0], vec![1]], 3).expect("static morphism"),
            )),
            GeneratorId::TauTriple => Box::new(BlockStream::tau_triple()),
            GeneratorId::Sigma12 => {
                Box::new(MorphicStream::new(FixedPointStream::ternary_thue(), Morphism::psi12()))
            }
            GeneratorId::Rsw6 => Box::new(MorphicStream::new(RswBaseStream::new(), Morphism::psi6())),
            GeneratorId::Squarefree3 => Box::new(FixedPointStream::ternary_thue()),
            GeneratorId::Squarefree5Rsw => Box::new(RswBaseStream::new()),
        };
        WordGenerator { id, inner }
    }

    pub fn id(&self) -> GeneratorId {
        self.id
    }
}

impl Iterator for WordGenerator {
    type Item = Symbol;

    fn next(&mut self) -> Option<Symbol> {
        self.inner.next()
    }
}

/// Concatenation of blocks `(01)^(reps(k))` followed by `tail`, for `k = first, first+1, ...`.
struct BlockStream {
    block: u32,
    reps: fn(u32) -> u64,
    tail: &'static [Symbol],
    // position inside the current block
    offset: u64,
}

impl BlockStream {
    fn tau_prime() -> Self {
        BlockStream {
            block: 0,
            reps: |k| 1u64 << k,
            tail: &[1],
            offset: 0,
        }
    }

    fn tau_triple() -> Self {
        BlockStream {
            block: 1,
            reps: |k| (1u64 << k) - 1,
            tail: &[1, 1],
            offset: 0,
        }
    }
}

impl Iterator for BlockStream {
    type Item = Symbol;

    fn next(&mut self) -> Option<Symbol> {
        let alt_len = 2 * (self.reps)(self.block);
        let symbol = if self.offset < alt_len {
            (self.offset % 2) as Symbol
        } else {
            self.tail[(self.offset - alt_len) as usize]
        };
        self.offset += 1;
        if self.offset == alt_len + self.tail.len() as u64 {
            self.offset = 0;
            self.block += 1;
        }
        Some(symbol)
    }
}

/// Applies a morphism symbol by symbol to an inner stream.
struct MorphicStream<I> {
    inner: I,
    morphism: Morphism,
    pending: VecDeque<Symbol>,
}

impl<I: Iterator<Item = Symbol>> MorphicStream<I> {
    fn new(inner: I, morphism: Morphism) -> Self {
        MorphicStream {
            inner,
            morphism,
            pending: VecDeque::new(),
        }
    }
}

impl<I: Iterator<Item = Symbol>> Iterator for MorphicStream<I> {
    type Item = Symbol;

    fn next(&mut self) -> Option<Symbol> {
        if self.pending.is_empty() {
            let s = self.inner.next()?;
            let image = self.morphism.image(s).expect("stream symbol has an image");
            self.pending.extend(image.iter().copied());
        }
        self.pending.pop_front()
    }
}

/// Fixed point of a prolongable morphism, expanded lazily from its own prefix.
struct FixedPointStream {
    morphism: Morphism,
    word: Vec<Symbol>,
    // next letter of `word` whose image has not been appended yet
    expand: usize,
    pos: usize,
}

impl FixedPointStream {
    fn ternary_thue() -> Self {
        let morphism = Morphism::new(vec![vec![0, 1, 2], vec![0, 2], vec![1]], 3).expect("static");
        let word = morphism.image(0).expect("image of 0").to_vec();
        FixedPointStream {
            morphism,
            word,
            expand: 1,
            pos: 0,
        }
    }
}

impl Iterator for FixedPointStream {
    type Item = Symbol;

    fn next(&mut self) -> Option<Symbol> {
        while self.pos >= self.word.len() {
            let s = self.word[self.expand];
            let image = self.morphism.image(s).expect("closed alphabet");
            self.word.extend_from_slice(image);
            self.expand += 1;
        }
        let s = self.word[self.pos];
        self.pos += 1;
        Some(s)
    }
}

/// Two-letter factors forbidden in the five-letter base word.
pub const RSW_FORBIDDEN_PAIRS: [[Symbol; 2]; 11] = [
    [0, 2],
    [0, 3],
    [0, 4],
    [1, 3],
    [1, 4],
    [2, 0],
    [2, 4],
    [3, 0],
    [3, 1],
    [4, 1],
    [4, 2],
];

pub const RSW_FORBIDDEN_LONG: [Symbol; 6] = [4, 3, 4, 0, 1, 0];

/// Symbols are only emitted once the depth-first frontier is this far ahead of
/// them. Backtracking never retreats more than a handful of letters on this
/// language (checked by `rsw_backtrack_depth_is_small`), so emitted symbols
/// are never revised.
const RSW_LOOKAHEAD: usize = 256;

/// Lexicographically least extension by depth-first search with backtracking.
struct RswBaseStream {
    word: Vec<Symbol>,
    pos: usize,
    deepest_retreat: usize,
}

impl RswBaseStream {
    fn new() -> Self {
        RswBaseStream {
            word: Vec::new(),
            pos: 0,
            deepest_retreat: 0,
        }
    }

    fn extends_validly(word: &[Symbol]) -> bool {
        let n = word.len();
        if n >= 2 {
            let pair = [word[n - 2], word[n - 1]];
            if RSW_FORBIDDEN_PAIRS.contains(&pair) {
                return false;
            }
        }
        if word.ends_with(&RSW_FORBIDDEN_LONG) {
            return false;
        }
        !ends_with_square(word)
    }

    /// Grows the search frontier by one letter, backtracking when needed.
    fn advance(&mut self) {
        let mut next_letter: Symbol = 0;
        let target = self.word.len() + 1;
        loop {
            let mut placed = false;
            for c in next_letter..5 {
                self.word.push(c);
                if Self::extends_validly(&self.word) {
                    placed = true;
                    break;
                }
                self.word.pop();
            }
            if placed {
                if self.word.len() == target {
                    return;
                }
                next_letter = 0;
            } else {
                let last = self
                    .word
                    .pop()
                    .expect("the constrained language is infinite");
                self.deepest_retreat = self.deepest_retreat.max(target - self.word.len());
                assert!(
                    self.word.len() >= self.pos,
                    "backtracking revised an emitted symbol"
                );
                next_letter = last + 1;
            }
        }
    }
}

impl Iterator for RswBaseStream {
    type Item = Symbol;

    fn next(&mut self) -> Option<Symbol> {
        while self.word.len() < self.pos + RSW_LOOKAHEAD {
            self.advance();
        }
        let s = self.word[self.pos];
        self.pos += 1;
        Some(s)
    }
}

/// True if the word ends with a square `xx`, `|x| >= 1`.
pub(crate) fn ends_with_square(word: &[Symbol]) -> bool {
    let n = word.len();
    (1..=n / 2).any(|l| word[n - 2 * l..n - l] == word[n - l..])
}

#[cfg(test)]
pub(crate) fn rsw_deepest_retreat(n: usize) -> usize {
    let mut s = RswBaseStream::new();
    for _ in 0..n {
        s.next();
    }
    s.deepest_retreat
}
