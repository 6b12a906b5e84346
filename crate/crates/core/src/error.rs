use std::fmt;

use crate::cipher::Ciphertext;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A character rejected by alphabet validation, with its 1-based position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BadChar {
    pub position: usize,
    pub ch: char,
}

impl fmt::Display for BadChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} at position {}", self.ch, self.position)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("text contains characters outside the alphabet: {}", join(.0))]
    InvalidText(Vec<BadChar>),

    #[error("symbol index {0} is outside 1..=40")]
    IndexOutOfRange(usize),

    #[error("secret code must be exactly 10 digits, got {0} characters")]
    CodeLength(usize),

    #[error("secret code has a non-digit {}", .0)]
    CodeNonDigit(BadChar),

    #[error("ciphertext has a non-digit {}", .0)]
    CiphertextNonDigit(BadChar),

    #[error("every one of {attempts} encryptions decrypted ambiguously")]
    RetriesExhausted { attempts: usize, last: Ciphertext },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

fn join(chars: &[BadChar]) -> String {
    chars
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}
