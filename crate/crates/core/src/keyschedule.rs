//! Secret code handling and the slice schedule.
//!
//! The ten-digit code yields two things: a base value `a` in `[1.1, 1.9]`
//! that drives the E-table, and a seed pair for a Fibonacci-like digit
//! recurrence whose clamped terms decide how many digits each payload and
//! each misleading group occupy.

use std::fmt;
use std::str::FromStr;

use crate::error::{BadChar, Error, Result};

/// Number of digits in a secret code.
pub const CODE_DIGITS: usize = 10;

/// Largest code value, `9999999999`.
pub const MAX_CODE: u64 = 9_999_999_999;

const CODE_SCALE: u64 = 10_000_000_000;

/// Ten-digit secret key. Leading zeros are significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SecretCode([u8; CODE_DIGITS]);

impl SecretCode {
    /// Parses a code, ignoring surrounding whitespace and newlines.
    pub fn parse(raw: &str) -> Result<Self> {
        let trimmed = raw.trim();
        let len = trimmed.chars().count();
        if len != CODE_DIGITS {
            return Err(Error::CodeLength(len));
        }
        let mut digits = [0u8; CODE_DIGITS];
        for (i, ch) in trimmed.chars().enumerate() {
            if !ch.is_ascii_digit() {
                return Err(Error::CodeNonDigit(BadChar {
                    position: i + 1,
                    ch,
                }));
            }
            digits[i] = ch as u8 - b'0';
        }
        Ok(SecretCode(digits))
    }

    /// Code whose digits spell `value` zero-padded to ten places.
    pub fn from_value(value: u64) -> Result<Self> {
        if value > MAX_CODE {
            return Err(Error::InvalidArgument(format!(
                "code value {value} exceeds {MAX_CODE}"
            )));
        }
        let mut digits = [0u8; CODE_DIGITS];
        let mut rest = value;
        for d in digits.iter_mut().rev() {
            *d = (rest % 10) as u8;
            rest /= 10;
        }
        Ok(SecretCode(digits))
    }

    pub fn digits(&self) -> &[u8; CODE_DIGITS] {
        &self.0
    }

    pub fn value(&self) -> u64 {
        digits_value(&self.0)
    }

    /// Sum of the ten original digits.
    pub fn digit_sum(&self) -> u32 {
        self.0.iter().map(|&d| u32::from(d)).sum()
    }

    pub fn normalize(&self) -> NormalizedCode {
        let mut digits = self.0;
        match digits[0] {
            0 => digits[0] = 1,
            9 if digits[1..].iter().any(|&d| d != 0) => digits[0] = 8,
            _ => {}
        }
        NormalizedCode(digits)
    }

    pub fn schedule(&self) -> SliceSchedule {
        let (b1, b2) = seed_pair(self.digit_sum());
        SliceSchedule::new(b1, b2)
    }
}

impl fmt::Display for SecretCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for SecretCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SecretCode::parse(s)
    }
}

fn digits_value(digits: &[u8; CODE_DIGITS]) -> u64 {
    digits.iter().fold(0, |acc, &d| acc * 10 + u64::from(d))
}

/// A code moved into `[1000000000, 9000000000]` by adjusting its first digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NormalizedCode([u8; CODE_DIGITS]);

impl NormalizedCode {
    pub fn digits(&self) -> &[u8; CODE_DIGITS] {
        &self.0
    }

    pub fn value(&self) -> u64 {
        digits_value(&self.0)
    }

    pub fn base_value(&self) -> BaseValue {
        BaseValue {
            scaled: CODE_SCALE + self.value(),
        }
    }

    /// Reinterprets the normalized digits as a fresh secret code.
    pub fn as_secret(&self) -> SecretCode {
        SecretCode(self.0)
    }
}

impl fmt::Display for NormalizedCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.as_secret(), f)
    }
}

/// Exact decimal `a = 1 + code / 10^10`, held as `a * 10^10`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BaseValue {
    scaled: u64,
}

impl BaseValue {
    /// Numerator over [`BaseValue::DENOMINATOR`].
    pub fn scaled(&self) -> u64 {
        self.scaled
    }

    pub const DENOMINATOR: u64 = CODE_SCALE;
}

impl fmt::Display for BaseValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}.{:010}",
            self.scaled / CODE_SCALE,
            self.scaled % CODE_SCALE
        )
    }
}

pub fn parse_code(raw: &str) -> Result<SecretCode> {
    SecretCode::parse(raw)
}

pub fn normalize_code(code: &SecretCode) -> NormalizedCode {
    code.normalize()
}

pub fn base_value(code: &NormalizedCode) -> BaseValue {
    code.base_value()
}

pub fn digit_sum(code: &SecretCode) -> u32 {
    code.digit_sum()
}

/// Tens and units digit of a digit sum.
pub fn seed_pair(sum: u32) -> (u8, u8) {
    (((sum % 100) / 10) as u8, (sum % 10) as u8)
}

/// First `count` slice lengths for `code`.
pub fn slice_schedule(code: &SecretCode, count: usize) -> Vec<u8> {
    code.schedule().iter().take(count).collect()
}

/// The B/C recurrence seeded from a code's digit sum.
///
/// `B_n = (B_{n-1} + B_{n-2}) mod 10`, and `C_n` is `B_n` when `B_n >= 5`,
/// otherwise `9 - B_n`. Odd `C` terms are payload lengths, even terms are
/// misleading-group lengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SliceSchedule {
    b1: u8,
    b2: u8,
}

impl SliceSchedule {
    /// Panics if either seed is not a single digit.
    pub fn new(b1: u8, b2: u8) -> Self {
        assert!(b1 < 10 && b2 < 10, "seeds must be digits");
        SliceSchedule { b1, b2 }
    }

    pub fn seeds(&self) -> (u8, u8) {
        (self.b1, self.b2)
    }

    /// Unbounded raw `B` sequence.
    pub fn raw(&self) -> RawTerms {
        RawTerms {
            prev: self.b1,
            cur: self.b2,
            index: 0,
        }
    }

    /// Unbounded clamped `C` sequence.
    pub fn iter(&self) -> impl Iterator<Item = u8> + Clone {
        self.raw().map(clamp)
    }

    /// `(payload, mislead)` length pairs, one per plaintext symbol.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + Clone {
        let mut terms = self.iter();
        std::iter::from_fn(move || {
            let payload = terms.next()?;
            let mislead = terms.next()?;
            Some((usize::from(payload), usize::from(mislead)))
        })
    }

    /// Ciphertext length produced for a message of `symbols` symbols.
    pub fn ciphertext_len(&self, symbols: usize) -> usize {
        self.pairs().take(symbols).map(|(p, m)| p + m).sum()
    }
}

fn clamp(b: u8) -> u8 {
    if b >= 5 {
        b
    } else {
        9 - b
    }
}

#[derive(Debug, Clone)]
pub struct RawTerms {
    prev: u8,
    cur: u8,
    index: u64,
}

impl Iterator for RawTerms {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        let out = match self.index {
            0 => self.prev,
            1 => self.cur,
            _ => {
                let next = (self.prev + self.cur) % 10;
                self.prev = self.cur;
                self.cur = next;
                next
            }
        };
        self.index += 1;
        Some(out)
    }
}
