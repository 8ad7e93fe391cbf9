//! Symbols, alphabets and words.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// A single letter.
pub type Symbol = char;

/// A duplicate-free, sorted set of symbols.
///
/// Used both for the session alphabet Σ and for its subalphabets (Π, Δ, Γ).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
}

impl Alphabet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds an alphabet, rejecting duplicates.
    pub fn new<I: IntoIterator<Item = Symbol>>(symbols: I) -> Result<Self> {
        let mut v: Vec<Symbol> = symbols.into_iter().collect();
        v.sort_unstable();
        for w in v.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateSymbol(w[0]));
            }
        }
        Ok(Self { symbols: v })
    }

    /// Builds an alphabet, silently merging duplicates.
    pub fn from_symbols<I: IntoIterator<Item = Symbol>>(symbols: I) -> Self {
        let mut v: Vec<Symbol> = symbols.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self { symbols: v }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn iter(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.symbols.iter().copied()
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.symbols.binary_search(&s).is_ok()
    }

    /// Position of `s` in alphabet order.
    pub fn index_of(&self, s: Symbol) -> Option<usize> {
        self.symbols.binary_search(&s).ok()
    }

    pub fn is_subset(&self, other: &Alphabet) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    pub fn is_proper_subset(&self, other: &Alphabet) -> bool {
        self.len() < other.len() && self.is_subset(other)
    }

    pub fn union(&self, other: &Alphabet) -> Alphabet {
        Alphabet::from_symbols(self.iter().chain(other.iter()))
    }

    pub fn intersection(&self, other: &Alphabet) -> Alphabet {
        Alphabet { symbols: self.iter().filter(|&s| other.contains(s)).collect() }
    }

    pub fn difference(&self, other: &Alphabet) -> Alphabet {
        Alphabet { symbols: self.iter().filter(|&s| !other.contains(s)).collect() }
    }

    /// All subsets, in order of the bitmask over alphabet positions.
    pub fn subsets(&self) -> impl Iterator<Item = Alphabet> + '_ {
        let n = self.len();
        assert!(n < usize::BITS as usize, "alphabet too large to enumerate subsets");
        (0usize..(1 << n)).map(move |mask| Alphabet {
            symbols: (0..n).filter(|i| mask & (1 << i) != 0).map(|i| self.symbols[i]).collect(),
        })
    }
}

impl fmt::Display for Alphabet {
    /// Set notation: `{a,b}`, `{}` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<Symbol> for Alphabet {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Alphabet::from_symbols(iter)
    }
}

/// A finite word; the empty word is λ.
///
/// Words order shortlex: first by length, then lexicographically by symbol.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn push(&mut self, s: Symbol) {
        self.0.push(s);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Every factor (contiguous subword), including λ and the word itself.
    pub fn factors(&self) -> impl Iterator<Item = Word> + '_ {
        let n = self.0.len();
        core::iter::once(Word::empty()).chain(
            (0..n).flat_map(move |i| (i + 1..=n).map(move |j| Word(self.0[i..j].to_vec()))),
        )
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.chars().collect())
    }
}

impl fmt::Display for Word {
    /// Prints λ for the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("λ");
        }
        let s: String = self.0.iter().collect();
        f.write_str(&s)
    }
}
