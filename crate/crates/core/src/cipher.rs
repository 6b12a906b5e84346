//! Encryption and decryption.
//!
//! Each plaintext symbol becomes a payload, a run of consecutive digits cut
//! from the symbol's E-table entry at a random start position in `1..=7`,
//! followed by a group of random misleading digits. Payload and group
//! lengths come from the code's slice schedule. Decryption replays the
//! schedule to cut the payloads back out and finds the entry containing
//! each one.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::alphabet::Plaintext;
use crate::error::{BadChar, Error, Result};
use crate::etable::{ETable, ENTRY_DIGITS};
use crate::keyschedule::{SecretCode, SliceSchedule};

/// Highest random start position within an entry.
pub const MAX_START: usize = 7;

/// A string of decimal digits.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Ciphertext(String);

impl Ciphertext {
    /// Accepts `digits` only if it consists of ASCII digits.
    pub fn new(digits: impl Into<String>) -> Result<Self> {
        let digits = digits.into();
        match digits
            .chars()
            .enumerate()
            .find(|(_, c)| !c.is_ascii_digit())
        {
            Some((i, ch)) => Err(Error::CiphertextNonDigit(BadChar {
                position: i + 1,
                ch,
            })),
            None => Ok(Ciphertext(digits)),
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for Ciphertext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Ciphertext {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ciphertext::new(s)
    }
}

/// The two random draws encryption needs.
pub trait RandomSource {
    /// Uniform in `1..=7`.
    fn start_position(&mut self) -> usize;
    /// Uniform in `0..=9`.
    fn mislead_digit(&mut self) -> u8;
}

impl<R: RandomSource + ?Sized> RandomSource for &mut R {
    fn start_position(&mut self) -> usize {
        (**self).start_position()
    }

    fn mislead_digit(&mut self) -> u8 {
        (**self).mislead_digit()
    }
}

/// [`RandomSource`] over any `rand` generator.
#[derive(Debug, Clone)]
pub struct RngSource<R>(pub R);

impl<R: RngCore> RandomSource for RngSource<R> {
    fn start_position(&mut self) -> usize {
        self.0.gen_range(1..=MAX_START)
    }

    fn mislead_digit(&mut self) -> u8 {
        self.0.gen_range(0..=9)
    }
}

/// The default source: ChaCha20, reproducible across platforms when seeded.
pub type SeededSource = RngSource<ChaCha20Rng>;

impl SeededSource {
    pub fn seeded(seed: u64) -> Self {
        RngSource(ChaCha20Rng::seed_from_u64(seed))
    }

    pub fn from_entropy() -> Self {
        RngSource(ChaCha20Rng::from_entropy())
    }
}

/// Replays fixed draws. Panics when a queue runs dry.
#[derive(Debug, Clone, Default)]
pub struct ScriptedSource {
    starts: VecDeque<usize>,
    digits: VecDeque<u8>,
}

impl ScriptedSource {
    /// `digits` is a string of misleading digits consumed left to right.
    pub fn new(starts: impl IntoIterator<Item = usize>, digits: &str) -> Self {
        ScriptedSource {
            starts: starts.into_iter().collect(),
            digits: digits
                .chars()
                .map(|c| c.to_digit(10).expect("scripted digits must be 0-9") as u8)
                .collect(),
        }
    }

    pub fn is_exhausted(&self) -> bool {
        self.starts.is_empty() && self.digits.is_empty()
    }
}

impl RandomSource for ScriptedSource {
    fn start_position(&mut self) -> usize {
        let s = self.starts.pop_front().expect("scripted starts exhausted");
        assert!((1..=MAX_START).contains(&s), "start {s} outside 1..=7");
        s
    }

    fn mislead_digit(&mut self) -> u8 {
        self.digits.pop_front().expect("scripted digits exhausted")
    }
}

/// One emitted payload, recorded by [`Cipher::encrypt_traced`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PayloadTrace {
    pub symbol_index: usize,
    pub start: usize,
    pub payload: String,
    pub mislead: String,
}

/// Payloads cut from a ciphertext.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Split {
    pub payloads: Vec<String>,
    /// Digits after the last complete payload-and-mislead unit. Nonzero
    /// only for truncated or padded ciphertexts.
    pub trailing: usize,
}

/// Matches of one payload against the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PayloadMatch {
    pub count: usize,
    /// Highest matching index.
    pub index: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecryptStatus {
    Ok,
    /// Some payload matched no entry.
    WrongCode,
    /// Some payload matched several entries; the message must be resent.
    Ambiguous,
}

impl DecryptStatus {
    pub fn message(self) -> &'static str {
        match self {
            DecryptStatus::Ok => "The printed message has no known issues.",
            DecryptStatus::WrongCode => "An incorrect code was used for decoding.",
            DecryptStatus::Ambiguous => "The initial encoded message needs to be resent.",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecryptOutcome {
    pub status: DecryptStatus,
    /// Present for `Ok`, and as an unreliable best effort for `Ambiguous`.
    pub plaintext: Option<Plaintext>,
    pub match_counts: Vec<usize>,
    pub trailing_digits: usize,
}

impl DecryptOutcome {
    pub fn is_ok(&self) -> bool {
        self.status == DecryptStatus::Ok
    }

    /// The plaintext only when decryption was unambiguous.
    pub fn ok_plaintext(&self) -> Option<&Plaintext> {
        self.plaintext.as_ref().filter(|_| self.is_ok())
    }
}

/// A code with its derived table and schedule, reusable across messages.
#[derive(Debug, Clone)]
pub struct Cipher {
    code: SecretCode,
    table: ETable,
    schedule: SliceSchedule,
}

impl Cipher {
    pub fn new(code: SecretCode) -> Self {
        Cipher {
            table: ETable::for_code(&code),
            schedule: code.schedule(),
            code,
        }
    }

    pub fn code(&self) -> &SecretCode {
        &self.code
    }

    pub fn table(&self) -> &ETable {
        &self.table
    }

    pub fn schedule(&self) -> &SliceSchedule {
        &self.schedule
    }

    pub fn encrypt<R: RandomSource>(&self, plaintext: &Plaintext, rng: &mut R) -> Ciphertext {
        self.encrypt_traced(plaintext, rng).0
    }

    /// Encrypts and also reports every payload and misleading group.
    pub fn encrypt_traced<R: RandomSource>(
        &self,
        plaintext: &Plaintext,
        rng: &mut R,
    ) -> (Ciphertext, Vec<PayloadTrace>) {
        let mut out = String::with_capacity(self.schedule.ciphertext_len(plaintext.len()));
        let mut trace = Vec::with_capacity(plaintext.len());
        for (symbol_index, (payload_len, mislead_len)) in
            plaintext.indices().zip(self.schedule.pairs())
        {
            let entry = self.table.entry(symbol_index).expect("index in 1..=40");
            let start = rng.start_position();
            let end = start - 1 + payload_len;
            assert!(end <= ENTRY_DIGITS, "slice {start}..{end} exceeds entry");
            let payload = &entry[start - 1..end];
            let mislead: String = (0..mislead_len)
                .map(|_| char::from(b'0' + rng.mislead_digit()))
                .collect();
            out.push_str(payload);
            out.push_str(&mislead);
            trace.push(PayloadTrace {
                symbol_index,
                start,
                payload: payload.to_owned(),
                mislead,
            });
        }
        (Ciphertext(out), trace)
    }

    pub fn split_payloads(&self, ciphertext: &Ciphertext) -> Split {
        let digits = ciphertext.as_str();
        let mut pos = 0;
        // End of the last payload taken; digits past it are trailing when
        // its misleading group is cut short.
        let mut payload_end = 0;
        let mut payloads = Vec::new();
        for (payload_len, mislead_len) in self.schedule.pairs() {
            if pos + payload_len > digits.len() {
                break;
            }
            payload_end = pos + payload_len;
            payloads.push(digits[pos..payload_end].to_owned());
            pos = payload_end + mislead_len;
        }
        let trailing = if pos <= digits.len() {
            digits.len() - pos
        } else {
            digits.len() - payload_end
        };
        if trailing > 0 {
            log::warn!("ignoring {trailing} trailing ciphertext digits that do not form a payload");
        }
        Split { payloads, trailing }
    }

    pub fn decrypt(&self, ciphertext: &Ciphertext) -> DecryptOutcome {
        let split = self.split_payloads(ciphertext);
        let matches: Vec<PayloadMatch> = split
            .payloads
            .iter()
            .map(|p| match_payload(p, &self.table))
            .collect();

        let status = if matches.iter().any(|m| m.count == 0) {
            DecryptStatus::WrongCode
        } else if matches.iter().any(|m| m.count > 1) {
            DecryptStatus::Ambiguous
        } else {
            DecryptStatus::Ok
        };
        let plaintext = match status {
            DecryptStatus::WrongCode => None,
            _ => Some(
                Plaintext::from_indices(matches.iter().map(|m| m.index.expect("matched")))
                    .expect("table indices are valid symbols"),
            ),
        };
        DecryptOutcome {
            status,
            plaintext,
            match_counts: matches.iter().map(|m| m.count).collect(),
            trailing_digits: split.trailing,
        }
    }

    /// Encrypts until the ciphertext decrypts unambiguously under this code.
    pub fn encrypt_verified<R: RandomSource>(
        &self,
        plaintext: &Plaintext,
        rng: &mut R,
        max_retries: usize,
    ) -> Result<Ciphertext> {
        if max_retries == 0 {
            return Err(Error::InvalidArgument(
                "max_retries must be at least 1".into(),
            ));
        }
        let mut last = Ciphertext::default();
        for attempt in 1..=max_retries {
            last = self.encrypt(plaintext, rng);
            let outcome = self.decrypt(&last);
            if outcome.is_ok() {
                return Ok(last);
            }
            log::info!(
                "attempt {attempt}: self-check gave {:?}, re-encrypting",
                outcome.status
            );
        }
        Err(Error::RetriesExhausted {
            attempts: max_retries,
            last,
        })
    }
}

/// Counts table entries containing `payload` as a substring.
pub fn match_payload(payload: &str, table: &ETable) -> PayloadMatch {
    let mut found = PayloadMatch {
        count: 0,
        index: None,
    };
    for (n, entry) in table.iter() {
        if entry.contains(payload) {
            found.count += 1;
            found.index = Some(n);
        }
    }
    found
}

pub fn encrypt<R: RandomSource>(
    plaintext: &Plaintext,
    code: &SecretCode,
    rng: &mut R,
) -> Ciphertext {
    Cipher::new(*code).encrypt(plaintext, rng)
}

pub fn encrypt_verified<R: RandomSource>(
    plaintext: &Plaintext,
    code: &SecretCode,
    rng: &mut R,
    max_retries: usize,
) -> Result<Ciphertext> {
    Cipher::new(*code).encrypt_verified(plaintext, rng, max_retries)
}

pub fn split_payloads(ciphertext: &Ciphertext, code: &SecretCode) -> Split {
    Cipher::new(*code).split_payloads(ciphertext)
}

pub fn decrypt(ciphertext: &Ciphertext, code: &SecretCode) -> DecryptOutcome {
    Cipher::new(*code).decrypt(ciphertext)
}

/// Decrypts raw digits, rejecting anything that is not a digit.
pub fn decrypt_str(ciphertext: &str, code: &SecretCode) -> Result<DecryptOutcome> {
    Ok(decrypt(&Ciphertext::new(ciphertext)?, code))
}
