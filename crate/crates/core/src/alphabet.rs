//! Symbols, words, and the end-marker-extended tape alphabet.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Token used for the left end marker in text formats.
pub const LEFT_MARKER_TOKEN: &str = "^";
/// Token used for the right end marker in text formats.
pub const RIGHT_MARKER_TOKEN: &str = "$";

/// A letter of an input or output alphabet.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Self {
        Symbol::new(s)
    }
}

impl From<char> for Symbol {
    fn from(c: char) -> Self {
        Symbol::new(c.encode_utf8(&mut [0; 4]))
    }
}

pub type Word = Vec<Symbol>;

/// Splits a string into one-character symbols.
pub fn word(s: &str) -> Word {
    s.chars().map(Symbol::from).collect()
}

/// Concatenates single-character or multi-character symbols for display.
pub fn display_word(w: &[Symbol]) -> String {
    if w.iter().all(|s| s.as_str().chars().count() == 1) {
        w.iter().map(Symbol::as_str).collect()
    } else {
        w.iter().map(Symbol::as_str).collect::<Vec<_>>().join(" ")
    }
}

/// A cell content of the tape `⊳ w ⊲`.
///
/// The derived order puts the left marker first and the right marker last.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TapeSymbol {
    LeftMarker,
    Letter(Symbol),
    RightMarker,
}

impl TapeSymbol {
    pub fn letter(s: &str) -> Self {
        TapeSymbol::Letter(Symbol::new(s))
    }

    pub fn is_marker(&self) -> bool {
        !matches!(self, TapeSymbol::Letter(_))
    }

    pub fn as_letter(&self) -> Option<&Symbol> {
        match self {
            TapeSymbol::Letter(s) => Some(s),
            _ => None,
        }
    }

    /// Wraps a word as the tape `⊳ w ⊲`.
    pub fn tape(w: &[Symbol]) -> Vec<TapeSymbol> {
        let mut tape = Vec::with_capacity(w.len() + 2);
        tape.push(TapeSymbol::LeftMarker);
        tape.extend(w.iter().cloned().map(TapeSymbol::Letter));
        tape.push(TapeSymbol::RightMarker);
        tape
    }
}

impl fmt::Debug for TapeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for TapeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TapeSymbol::LeftMarker => f.write_str(LEFT_MARKER_TOKEN),
            TapeSymbol::RightMarker => f.write_str(RIGHT_MARKER_TOKEN),
            TapeSymbol::Letter(s) => f.write_str(s.as_str()),
        }
    }
}

impl From<Symbol> for TapeSymbol {
    fn from(s: Symbol) -> Self {
        TapeSymbol::Letter(s)
    }
}

/// An ordered finite alphabet. Declaration order is kept and used for word enumeration.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<Symbol>,
    {
        let mut out: Vec<Symbol> = Vec::new();
        for s in symbols {
            let s = s.into();
            validate_symbol_name(s.as_str())?;
            if out.contains(&s) {
                return Err(Error::validation(format!("duplicate symbol `{s}`")));
            }
            out.push(s);
        }
        Ok(Alphabet { symbols: out })
    }

    /// Alphabet of the single-character symbols of `s`, in order.
    pub fn from_chars(s: &str) -> Result<Self> {
        Alphabet::new(s.chars().map(Symbol::from))
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn contains(&self, s: &Symbol) -> bool {
        self.symbols.contains(s)
    }

    pub fn index_of(&self, s: &Symbol) -> Option<usize> {
        self.symbols.iter().position(|x| x == s)
    }

    /// `⊳`, the letters in declaration order, then `⊲`.
    pub fn tape_symbols(&self) -> Vec<TapeSymbol> {
        let mut v = vec![TapeSymbol::LeftMarker];
        v.extend(self.symbols.iter().cloned().map(TapeSymbol::Letter));
        v.push(TapeSymbol::RightMarker);
        v
    }

    pub fn check_word(&self, w: &[Symbol]) -> Result<()> {
        match w.iter().find(|s| !self.contains(s)) {
            Some(bad) => Err(Error::AlphabetError(bad.to_string())),
            None => Ok(()),
        }
    }

    /// Reads a word: whitespace separates chunks, and each chunk is split
    /// greedily into the longest matching alphabet symbols.
    pub fn tokenize(&self, text: &str) -> Result<Word> {
        let mut out = Vec::new();
        for chunk in text.split_whitespace() {
            let mut rest = chunk;
            while !rest.is_empty() {
                let best = self
                    .symbols
                    .iter()
                    .filter(|s| rest.starts_with(s.as_str()))
                    .max_by_key(|s| s.as_str().len())
                    .ok_or_else(|| Error::AlphabetError(rest.to_string()))?;
                out.push(best.clone());
                rest = &rest[best.as_str().len()..];
            }
        }
        Ok(out)
    }

    /// Inverse of [`Alphabet::tokenize`]: concatenates when every symbol has
    /// one character, otherwise separates by spaces.
    pub fn format(&self, w: &[Symbol]) -> String {
        if self.symbols.iter().all(|s| s.as_str().chars().count() == 1) {
            w.iter().map(Symbol::as_str).collect()
        } else {
            w.iter().map(Symbol::as_str).collect::<Vec<_>>().join(" ")
        }
    }

    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut symbols = self.symbols.clone();
        for s in &other.symbols {
            if !symbols.contains(s) {
                symbols.push(s.clone());
            }
        }
        Alphabet { symbols }
    }
}

pub(crate) fn validate_symbol_name(name: &str) -> Result<()> {
    if name == LEFT_MARKER_TOKEN || name == RIGHT_MARKER_TOKEN {
        return Err(Error::validation(format!(
            "`{name}` is reserved for the end markers"
        )));
    }
    if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c == '"' || c == '#') {
        return Err(Error::validation(format!("invalid symbol name `{name}`")));
    }
    Ok(())
}
