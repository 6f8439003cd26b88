//! Generator alphabets and words of the free semigroup / free monoid.
//!
//! A [`Word`] is a sequence of letter indices into an [`Alphabet`]. Words do
//! not carry their alphabet; validation happens where a word meets an
//! alphabet or an ordering ([`Alphabet::check`], [`MonomialOrder::try_compare`]).

mod order;
mod overlap;

use std::fmt;

pub use order::{MonomialOrder, OrderKind};
pub use overlap::{find_matches, find_matches_between, MatchKind, OverlapMatch};

use crate::error::WordError;

/// Index of a generator inside its [`Alphabet`].
pub type Letter = u32;

/// Characters that may not appear in generator names because the text
/// formats use them as punctuation.
pub const RESERVED_CHARS: &[char] = &['.', '#', ':', '<', '>', '=', '+', '-', '*', '/', '(', ')', '[', ']', ','];

/// Whether a single word is treated as an element of X† or X*.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// Rule sides and basis monomials must be nonempty.
    #[default]
    Semigroup,
    /// The empty word is a valid right-hand side / monomial.
    Monoid,
}

impl Mode {
    pub fn allows_empty(self) -> bool {
        matches!(self, Mode::Monoid)
    }
}

/// An ordered set of distinct generator names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        for (i, s) in symbols.iter().enumerate() {
            if !is_valid_symbol(s) {
                return Err(WordError::InvalidSymbol(s.clone()));
            }
            if symbols[..i].contains(s) {
                return Err(WordError::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, letter: Letter) -> Option<&str> {
        self.symbols.get(letter as usize).map(String::as_str)
    }

    pub fn index_of(&self, name: &str) -> Option<Letter> {
        self.symbols.iter().position(|s| s == name).map(|i| i as Letter)
    }

    /// Every letter of `word` must index into this alphabet.
    pub fn check(&self, word: &Word) -> Result<(), WordError> {
        match word.letters().iter().find(|&&l| l as usize >= self.len()) {
            Some(&l) => Err(WordError::LetterOutOfRange { letter: l, size: self.len() }),
            None => Ok(()),
        }
    }

    fn all_single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Parses a word. Generators are separated by `.`; when every generator
    /// name is a single character the separator may be omitted. `1` is the
    /// empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(WordError::Malformed(text.to_string()));
        }
        if text == "1" {
            return Ok(Word::empty());
        }
        let lookup = |name: &str| self.index_of(name).ok_or_else(|| WordError::UnknownSymbol(name.to_string()));
        if text.contains('.') {
            return text
                .split('.')
                .map(|part| {
                    let part = part.trim();
                    if part.is_empty() {
                        Err(WordError::Malformed(text.to_string()))
                    } else {
                        lookup(part)
                    }
                })
                .collect::<Result<Vec<_>, _>>()
                .map(Word::from);
        }
        if let Some(l) = self.index_of(text) {
            return Ok(Word::from(vec![l]));
        }
        if self.all_single_char() {
            let mut buf = [0u8; 4];
            return text
                .chars()
                .map(|c| lookup(c.encode_utf8(&mut buf)))
                .collect::<Result<Vec<_>, _>>()
                .map(Word::from);
        }
        Err(WordError::UnknownSymbol(text.to_string()))
    }

    /// Renders `word` with generators joined by `.`; the empty word is `1`.
    pub fn render(&self, word: &Word) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        let names: Vec<&str> = word.letters().iter().map(|&l| self.symbol(l).unwrap_or("?")).collect();
        names.join(".")
    }

    /// Returns a value implementing `Display` for `word`.
    pub fn display<'a>(&'a self, word: &'a Word) -> WordDisplay<'a> {
        WordDisplay { alphabet: self, word }
    }
}

pub struct WordDisplay<'a> {
    alphabet: &'a Alphabet,
    word: &'a Word,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.alphabet.render(self.word))
    }
}

pub fn is_valid_symbol(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        None => false,
        Some(first) if first.is_ascii_digit() => false,
        Some(_) => s.chars().all(|c| !c.is_whitespace() && !c.is_control() && !RESERVED_CHARS.contains(&c)),
    }
}

/// A word over some alphabet, stored as letter indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Free semigroup multiplication.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `left · self · right`
    pub fn sandwich(&self, left: &Word, right: &Word) -> Word {
        let mut letters = Vec::with_capacity(left.len() + self.len() + right.len());
        letters.extend_from_slice(&left.0);
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&right.0);
        Word(letters)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.0.ends_with(&suffix.0)
    }

    /// Start positions of every occurrence of `pattern`, overlapping ones
    /// included, in increasing order.
    pub fn positions_of(&self, pattern: &Word) -> Vec<usize> {
        if pattern.is_empty() || pattern.len() > self.len() {
            return Vec::new();
        }
        self.0.windows(pattern.len()).enumerate().filter(|(_, w)| *w == pattern.letters()).map(|(i, _)| i).collect()
    }

    /// First occurrence of `pattern` at or after `from`.
    pub fn find_from(&self, pattern: &Word, from: usize) -> Option<usize> {
        if pattern.is_empty() || pattern.len() > self.len() {
            return None;
        }
        (from..=self.len() - pattern.len()).find(|&i| self.0[i..i + pattern.len()] == pattern.0[..])
    }

    pub fn contains(&self, pattern: &Word) -> bool {
        self.find_from(pattern, 0).is_some()
    }

    /// Replaces `len` letters starting at `at` by `replacement`.
    pub fn splice(&self, at: usize, len: usize, replacement: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() - len + replacement.len());
        letters.extend_from_slice(&self.0[..at]);
        letters.extend_from_slice(&replacement.0);
        letters.extend_from_slice(&self.0[at + len..]);
        Word(letters)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Concatenation of two words over the same alphabet.
pub fn concat(alphabet: &Alphabet, w1: &Word, w2: &Word) -> Result<Word, WordError> {
    alphabet.check(w1)?;
    alphabet.check(w2)?;
    Ok(w1.concat(w2))
}

/// Every factorization `w = u·l·v`, ordered by increasing `|u|`.
///
/// # Panics
///
/// Panics if `l` is empty.
pub fn find_subword_occurrences(w: &Word, l: &Word) -> Vec<(Word, Word)> {
    assert!(!l.is_empty(), "subword search needs a nonempty pattern");
    w.positions_of(l).into_iter().map(|i| (w.slice(0..i), w.slice(i + l.len()..w.len()))).collect()
}

/// All words over `alphabet_size` letters with length in `lengths`, shortest
/// first and lexicographic by letter index within a length.
pub fn all_words(alphabet_size: usize, lengths: std::ops::RangeInclusive<usize>) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer = vec![Word::empty()];
    for len in 0..=*lengths.end() {
        if len > 0 {
            layer = layer
                .iter()
                .flat_map(|w| {
                    (0..alphabet_size as Letter).map(move |l| {
                        let mut letters = w.0.clone();
                        letters.push(l);
                        Word(letters)
                    })
                })
                .collect();
        }
        if lengths.contains(&len) {
            out.extend(layer.iter().cloned());
        }
    }
    out
}
