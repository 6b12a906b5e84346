//! The keyed substitution table.
//!
//! Entry `n` is the leading fifteen significant digits of
//! `a^n / (a + a^2 + ... + a^40)`. With `a = s / 10^10` every term is an
//! exact rational, so the table is computed with big integers and is the
//! same on every host. Digits past the fifteenth are truncated.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::alphabet::ALPHABET_SIZE;
use crate::error::{Error, Result};
use crate::keyschedule::{BaseValue, NormalizedCode, SecretCode};

/// Significant digits kept per entry.
pub const ENTRY_DIGITS: usize = 15;

/// An exact positive rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ratio {
    numer: BigUint,
    denom: BigUint,
}

impl Ratio {
    /// Panics on a zero denominator.
    pub fn new(numer: BigUint, denom: BigUint) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        Ratio { numer, denom }
    }

    pub fn numer(&self) -> &BigUint {
        &self.numer
    }

    pub fn denom(&self) -> &BigUint {
        &self.denom
    }

    /// The ratio multiplied by `10^exp`.
    pub fn scale_pow10(&self, exp: u32) -> Ratio {
        Ratio {
            numer: &self.numer * BigUint::from(10u32).pow(exp),
            denom: self.denom.clone(),
        }
    }

    /// First `count` significant decimal digits, truncated.
    ///
    /// Independent of any power-of-ten scaling of the ratio. Returns an
    /// empty string for zero.
    pub fn significant_digits(&self, count: usize) -> String {
        if self.numer.is_zero() || count == 0 {
            return String::new();
        }
        // Shift so the integer quotient has at least `count` digits.
        let mut shift = (count + decimal_len(&self.denom)).saturating_sub(decimal_len(&self.numer));
        let mut digits = loop {
            let quotient = &self.numer * BigUint::from(10u32).pow(shift as u32) / &self.denom;
            let digits = quotient.to_str_radix(10);
            if digits.len() >= count {
                break digits;
            }
            shift += count - digits.len() + 1;
        };
        digits.truncate(count);
        digits
    }
}

/// Rough decimal length; only used to pick a starting shift.
fn decimal_len(n: &BigUint) -> usize {
    (n.bits() as usize * 3) / 10 + 1
}

/// `a^i * 10^(10 * (40 - i))` for i = 1..=40: numerators over the common
/// denominator `10^400`.
fn scaled_powers(a: &BaseValue) -> Vec<BigUint> {
    let base = BigUint::from(a.scaled());
    let unit = BigUint::from(BaseValue::DENOMINATOR);
    let mut powers = Vec::with_capacity(ALPHABET_SIZE);
    let mut base_pow = BigUint::one();
    for i in 1..=ALPHABET_SIZE {
        base_pow *= &base;
        powers.push(&base_pow * unit.pow((ALPHABET_SIZE - i) as u32));
    }
    powers
}

fn check_index(n: usize) -> Result<()> {
    if (1..=ALPHABET_SIZE).contains(&n) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange(n))
    }
}

/// `a^n / sum_{i=1..40} a^i` as an exact rational.
pub fn ratio(a: &BaseValue, n: usize) -> Result<Ratio> {
    check_index(n)?;
    let mut powers = scaled_powers(a);
    let sum: BigUint = powers.iter().sum();
    Ok(Ratio::new(powers.swap_remove(n - 1), sum))
}

/// Fifteen-digit entry `n` for base `a`.
pub fn e_entry(a: &BaseValue, n: usize) -> Result<String> {
    Ok(ratio(a, n)?.significant_digits(ENTRY_DIGITS))
}

/// Forty fifteen-digit strings, entry `n` encoding alphabet symbol `n`.
#[derive(Clone, PartialEq, Eq)]
pub struct ETable {
    entries: Vec<String>,
    base: BaseValue,
}

impl ETable {
    pub fn from_base(base: BaseValue) -> Self {
        let powers = scaled_powers(&base);
        let sum: BigUint = powers.iter().sum();
        let entries = powers
            .into_iter()
            .map(|p| Ratio::new(p, sum.clone()).significant_digits(ENTRY_DIGITS))
            .collect();
        ETable { entries, base }
    }

    pub fn build(code: &NormalizedCode) -> Self {
        ETable::from_base(code.base_value())
    }

    pub fn for_code(code: &SecretCode) -> Self {
        ETable::build(&code.normalize())
    }

    pub fn base(&self) -> BaseValue {
        self.base
    }

    /// Entry for 1-based symbol index `n`.
    pub fn entry(&self, n: usize) -> Option<&str> {
        n.checked_sub(1)
            .and_then(|i| self.entries.get(i))
            .map(String::as_str)
    }

    /// `(n, entry)` pairs in index order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &str)> {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, e)| (i + 1, e.as_str()))
    }

    /// Indices of entries sharing an identical fifteen-digit string.
    pub fn duplicate_entries(&self) -> Vec<(usize, usize)> {
        let mut dups = Vec::new();
        for (i, a) in self.iter() {
            for (j, b) in self.iter().skip(i) {
                if a == b {
                    dups.push((i, j));
                }
            }
        }
        dups
    }
}

impl fmt::Debug for ETable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ETable")
            .field("base", &format_args!("{}", self.base))
            .field("entries", &self.entries)
            .finish()
    }
}

/// Table dump: one `n<TAB>entry` line per entry.
impl fmt::Display for ETable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, e) in self.iter() {
            writeln!(f, "{n}\t{e}")?;
        }
        Ok(())
    }
}

pub fn build_table(code: &NormalizedCode) -> ETable {
    ETable::build(code)
}
