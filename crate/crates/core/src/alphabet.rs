//! The fixed 40-symbol message alphabet.
//!
//! Symbols are numbered from 1, so `?` is 1 and `0` is 40. The number of a
//! symbol is also the row of the E-table that encodes it.

use std::fmt;
use std::str::FromStr;

use crate::error::{BadChar, Error, Result};

/// Every symbol a message may contain, in index order.
pub const SYMBOLS: &str = "?_.,ABCDEFGHIJKLMNOPQRSTUVWXYZ1234567890";

/// Number of symbols in [`SYMBOLS`].
pub const ALPHABET_SIZE: usize = 40;

const SYMBOL_BYTES: &[u8; ALPHABET_SIZE] = b"?_.,ABCDEFGHIJKLMNOPQRSTUVWXYZ1234567890";

fn lookup(ch: char) -> Option<usize> {
    if !ch.is_ascii() {
        return None;
    }
    SYMBOL_BYTES
        .iter()
        .position(|&b| b == ch as u8)
        .map(|i| i + 1)
}

/// 1-based index of `ch` in the alphabet.
pub fn symbol_to_index(ch: char) -> Result<usize> {
    lookup(ch).ok_or(Error::InvalidText(vec![BadChar { position: 1, ch }]))
}

/// Symbol at 1-based index `i`.
pub fn index_to_symbol(i: usize) -> Result<char> {
    if (1..=ALPHABET_SIZE).contains(&i) {
        Ok(SYMBOL_BYTES[i - 1] as char)
    } else {
        Err(Error::IndexOutOfRange(i))
    }
}

/// Whether `ch` belongs to the alphabet.
pub fn contains(ch: char) -> bool {
    lookup(ch).is_some()
}

/// A message made only of alphabet symbols. May be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Plaintext(String);

impl Plaintext {
    /// Accepts `text` only if every character is already an alphabet symbol.
    pub fn new(text: impl Into<String>) -> Result<Self> {
        let text = text.into();
        let bad = bad_chars(&text);
        if bad.is_empty() {
            Ok(Plaintext(text))
        } else {
            Err(Error::InvalidText(bad))
        }
    }

    /// Builds a plaintext from 1-based symbol indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        indices
            .into_iter()
            .map(index_to_symbol)
            .collect::<Result<String>>()
            .map(Plaintext)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Number of symbols.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based alphabet index of each symbol, in order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        // Construction guarantees membership.
        self.0.chars().map(|c| lookup(c).expect("validated symbol"))
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for Plaintext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Plaintext {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Plaintext::new(s)
    }
}

impl AsRef<str> for Plaintext {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

fn bad_chars(text: &str) -> Vec<BadChar> {
    text.chars()
        .enumerate()
        .filter(|&(_, ch)| !contains(ch))
        .map(|(i, ch)| BadChar {
            position: i + 1,
            ch,
        })
        .collect()
}

/// Turns raw text into a [`Plaintext`].
///
/// Without `strict`, ASCII letters are uppercased and spaces become `_`.
/// Anything else outside the alphabet is rejected, never dropped; the error
/// lists every offending position.
pub fn normalize_text(raw: &str, strict: bool) -> Result<Plaintext> {
    if strict {
        return Plaintext::new(raw);
    }
    let mapped: String = raw
        .chars()
        .map(|c| match c {
            ' ' => '_',
            c => c.to_ascii_uppercase(),
        })
        .collect();
    Plaintext::new(mapped)
}
