//! Finite words over small integer alphabets and morphisms between them.

use std::fmt;

use crate::error::{Error, Result};

pub type Symbol = u8;

/// Largest alphabet representable in the digit text format.
pub const MAX_ALPHABET: u8 = 10;

/// A finite word; every symbol is below `alphabet_size`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<Symbol>,
    alphabet_size: u8,
}

impl Word {
    pub fn new(symbols: Vec<Symbol>, alphabet_size: u8) -> Result<Self> {
        if alphabet_size == 0 || alphabet_size > MAX_ALPHABET {
            return Err(Error::Domain(format!(
                "alphabet size must be in 1..={MAX_ALPHABET}, got {alphabet_size}"
            )));
        }
        if let Some((position, &symbol)) = symbols
            .iter()
            .enumerate()
            .find(|(_, &s)| s >= alphabet_size)
        {
            return Err(Error::SymbolOutOfRange {
                symbol,
                position,
                alphabet_size,
            });
        }
        Ok(Word {
            symbols,
            alphabet_size,
        })
    }

    /// Builds a word whose alphabet is the smallest one containing every symbol.
    pub fn from_symbols(symbols: Vec<Symbol>) -> Result<Self> {
        let k = symbols.iter().copied().max().map_or(1, |m| m.saturating_add(1));
        Word::new(symbols, k)
    }

    pub fn empty(alphabet_size: u8) -> Self {
        Word {
            symbols: Vec::new(),
            alphabet_size,
        }
    }

    /// Parses a line of ASCII digits. Surrounding whitespace is ignored.
    pub fn parse_digits(text: &str) -> Result<Self> {
        let text = text.trim();
        let symbols = text
            .bytes()
            .enumerate()
            .map(|(i, b)| {
                if b.is_ascii_digit() {
                    Ok(b - b'0')
                } else {
                    Err(Error::WordParse(format!(
                        "non-digit byte {:?} at offset {i}",
                        b as char
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Word::from_symbols(symbols)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    pub fn alphabet_size(&self) -> u8 {
        self.alphabet_size
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn reversed(&self) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Word {
            symbols,
            alphabet_size: self.alphabet_size,
        }
    }

    /// `u[start..end)`.
    pub fn factor(&self, start: usize, end: usize) -> Word {
        Word {
            symbols: self.symbols[start..end].to_vec(),
            alphabet_size: self.alphabet_size,
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Word {
            symbols,
            alphabet_size: self.alphabet_size.max(other.alphabet_size),
        }
    }

    pub fn power(&self, n: usize) -> Word {
        Word {
            symbols: self.symbols.repeat(n),
            alphabet_size: self.alphabet_size,
        }
    }

    pub fn is_palindrome(&self) -> bool {
        self.symbols.iter().eq(self.symbols.iter().rev())
    }

    pub fn to_digits(&self) -> String {
        digits(&self.symbols)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_digits())
    }
}

impl AsRef<[Symbol]> for Word {
    fn as_ref(&self) -> &[Symbol] {
        &self.symbols
    }
}

pub fn digits(symbols: &[Symbol]) -> String {
    symbols.iter().map(|&s| char::from(b'0' + s)).collect()
}

/// A non-erasing morphism `{0..source} -> {0..target}*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    images: Vec<Vec<Symbol>>,
    target_alphabet_size: u8,
}

impl Morphism {
    pub fn new(images: Vec<Vec<Symbol>>, target_alphabet_size: u8) -> Result<Self> {
        for (letter, image) in images.iter().enumerate() {
            if image.is_empty() {
                return Err(Error::Domain(format!("image of {letter} is empty")));
            }
            if let Some(&s) = image.iter().find(|&&s| s >= target_alphabet_size) {
                return Err(Error::SymbolOutOfRange {
                    symbol: s,
                    position: letter,
                    alphabet_size: target_alphabet_size,
                });
            }
        }
        Ok(Morphism {
            images,
            target_alphabet_size,
        })
    }

    /// Builds a morphism from digit strings, one per source letter.
    pub fn from_digit_images(images: &[&str], target_alphabet_size: u8) -> Result<Self> {
        let images = images
            .iter()
            .map(|s| Word::parse_digits(s).map(Word::into_symbols))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(images, target_alphabet_size)
    }

    /// The 12-uniform ternary morphism whose images of square-free words have no
    /// squares of period at least 2 and no palindromes of length at least 3.
    pub fn psi12() -> Morphism {
        Morphism::from_digit_images(&["011220012201", "122001120012", "200112201120"], 3)
            .expect("static morphism")
    }

    /// The 6-uniform morphism from five letters to binary words.
    pub fn psi6() -> Morphism {
        Morphism::from_digit_images(&["011100", "101100", "111000", "110010", "110001"], 2)
            .expect("static morphism")
    }

    pub fn source_alphabet_size(&self) -> usize {
        self.images.len()
    }

    pub fn target_alphabet_size(&self) -> u8 {
        self.target_alphabet_size
    }

    pub fn image(&self, letter: Symbol) -> Option<&[Symbol]> {
        self.images.get(letter as usize).map(Vec::as_slice)
    }

    /// Common image length, if every image has the same length.
    pub fn uniform_width(&self) -> Option<usize> {
        let first = self.images.first()?.len();
        self.images.iter().all(|i| i.len() == first).then_some(first)
    }

    pub fn apply_symbols(&self, symbols: &[Symbol]) -> Result<Vec<Symbol>> {
        let mut out = Vec::with_capacity(symbols.len() * self.uniform_width().unwrap_or(1));
        for (position, &s) in symbols.iter().enumerate() {
            let image = self.image(s).ok_or_else(|| {
                Error::Domain(format!("symbol {s} at position {position} has no image"))
            })?;
            out.extend_from_slice(image);
        }
        Ok(out)
    }

    pub fn apply(&self, word: &Word) -> Result<Word> {
        let symbols = self.apply_symbols(word.symbols())?;
        Ok(Word {
            symbols,
            alphabet_size: self.target_alphabet_size,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse_digits(s).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("0011001").to_string(), "0011001");
        assert_eq!(w("").len(), 0);
        assert!(Word::parse_digits("01a").is_err());
        assert!(Word::new(vec![0, 3], 3).is_err());
    }

    #[test]
    fn psi6_images() {
        let m = Morphism::psi6();
        assert_eq!(m.apply(&w("0")).unwrap().to_string(), "011100");
        assert_eq!(m.apply(&w("01")).unwrap().to_string(), "011100101100");
        assert_eq!(m.uniform_width(), Some(6));
    }

    #[test]
    fn psi12_on_empty_word() {
        let m = Morphism::psi12();
        assert!(m.apply(&Word::empty(3)).unwrap().is_empty());
        assert_eq!(m.uniform_width(), Some(12));
    }

    #[test]
    fn missing_image_is_domain_error() {
        let m = Morphism::psi12();
        assert!(matches!(m.apply(&w("3")), Err(Error::Domain(_))));
    }

    #[test]
    fn erasing_images_rejected() {
        assert!(Morphism::new(vec![vec![0], vec![]], 2).is_err());
    }
}
