//! Brute-force key search over a contiguous range of codes.
//!
//! A candidate "hits" when decryption does not report a wrong code. The
//! search returns the lowest hit in the range, so sequential and parallel
//! runs agree. A hit is not proof that the candidate is the encryption key.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::alphabet::Plaintext;
use crate::cipher::{Cipher, Ciphertext, DecryptOutcome, DecryptStatus};
use crate::error::{Error, Result};
use crate::keyschedule::{SecretCode, MAX_CODE};

/// Candidates per work unit.
pub const DEFAULT_UNIT_SIZE: u64 = 100;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrackRequest {
    ciphertext: Ciphertext,
    start: SecretCode,
    count: u64,
}

impl CrackRequest {
    pub fn new(ciphertext: Ciphertext, start: SecretCode, count: u64) -> Result<Self> {
        if count == 0 {
            return Err(Error::InvalidArgument(
                "candidate count must be positive".into(),
            ));
        }
        if start.value() + (count - 1) > MAX_CODE {
            return Err(Error::InvalidArgument(format!(
                "range starting at {start} with {count} candidates runs past {MAX_CODE}"
            )));
        }
        Ok(CrackRequest {
            ciphertext,
            start,
            count,
        })
    }

    pub fn ciphertext(&self) -> &Ciphertext {
        &self.ciphertext
    }

    pub fn start(&self) -> SecretCode {
        self.start
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    fn candidate(&self, offset: u64) -> SecretCode {
        SecretCode::from_value(self.start.value() + offset).expect("range checked at construction")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrackStatus {
    /// A candidate decrypted cleanly.
    Found,
    /// The lowest hit decrypted ambiguously; its plaintext is still reported.
    FoundWithIssues,
    NotFound,
}

impl CrackStatus {
    pub fn message(self) -> &'static str {
        match self {
            CrackStatus::Found => {
                "The secret code was determined successfully. The printed message has no known issues."
            }
            CrackStatus::FoundWithIssues => {
                "The program was able to determine the secret code; however, the printed message might have some issues."
            }
            CrackStatus::NotFound => {
                "The program was not able to determine the secret code successfully. Try a different range."
            }
        }
    }

    /// Short machine-readable tag.
    pub fn tag(self) -> &'static str {
        match self {
            CrackStatus::Found => "found",
            CrackStatus::FoundWithIssues => "found-with-issues",
            CrackStatus::NotFound => "not-found",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrackOutcome {
    pub status: CrackStatus,
    pub code: Option<SecretCode>,
    pub plaintext: Option<Plaintext>,
    /// Candidates actually decrypted. Parallel runs may try candidates above
    /// the winning one, so this can exceed the sequential count.
    pub tried: u64,
}

/// Progress after a work unit completes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Progress {
    pub units_done: usize,
    pub units_total: usize,
    pub tried: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrackOptions {
    pub unit_size: u64,
    pub parallel: bool,
}

impl Default for CrackOptions {
    fn default() -> Self {
        CrackOptions {
            unit_size: DEFAULT_UNIT_SIZE,
            parallel: true,
        }
    }
}

impl CrackOptions {
    pub fn sequential() -> Self {
        CrackOptions {
            parallel: false,
            ..Default::default()
        }
    }
}

struct Hit {
    offset: u64,
    outcome: DecryptOutcome,
}

struct UnitResult {
    hit: Option<Hit>,
    tried: u64,
}

/// Searches with default options: parallel, units of 100.
pub fn crack_range(req: &CrackRequest) -> CrackOutcome {
    crack_range_with(req, CrackOptions::default(), |_| {})
}

pub fn crack_range_with<F>(req: &CrackRequest, opts: CrackOptions, progress: F) -> CrackOutcome
where
    F: Fn(Progress) + Sync,
{
    let unit_size = opts.unit_size.max(1);
    let units_total = req.count.div_ceil(unit_size) as usize;
    // Lowest hit offset so far; units starting above it are skipped.
    let best = AtomicU64::new(u64::MAX);
    let units_done = AtomicUsize::new(0);
    let tried_total = AtomicU64::new(0);

    let run_unit = |unit: usize| -> UnitResult {
        let lo = unit as u64 * unit_size;
        let hi = (lo + unit_size).min(req.count);
        let mut result = UnitResult {
            hit: None,
            tried: 0,
        };
        if lo <= best.load(Ordering::Relaxed) {
            for offset in lo..hi {
                if offset > best.load(Ordering::Relaxed) {
                    break;
                }
                result.tried += 1;
                let outcome = Cipher::new(req.candidate(offset)).decrypt(&req.ciphertext);
                if outcome.status != DecryptStatus::WrongCode {
                    best.fetch_min(offset, Ordering::Relaxed);
                    result.hit = Some(Hit { offset, outcome });
                    break;
                }
            }
        }
        let tried = tried_total.fetch_add(result.tried, Ordering::Relaxed) + result.tried;
        let done = units_done.fetch_add(1, Ordering::Relaxed) + 1;
        progress(Progress {
            units_done: done,
            units_total,
            tried,
        });
        result
    };

    let results: Vec<UnitResult> = if opts.parallel {
        (0..units_total).into_par_iter().map(run_unit).collect()
    } else {
        let mut results = Vec::new();
        for unit in 0..units_total {
            let r = run_unit(unit);
            let found = r.hit.is_some();
            results.push(r);
            if found {
                break;
            }
        }
        results
    };

    let tried = results.iter().map(|r| r.tried).sum();
    let lowest = results
        .into_iter()
        .filter_map(|r| r.hit)
        .min_by_key(|h| h.offset);

    match lowest {
        None => CrackOutcome {
            status: CrackStatus::NotFound,
            code: None,
            plaintext: None,
            tried,
        },
        Some(hit) => CrackOutcome {
            status: match hit.outcome.status {
                DecryptStatus::Ok => CrackStatus::Found,
                _ => CrackStatus::FoundWithIssues,
            },
            code: Some(req.candidate(hit.offset)),
            plaintext: hit.outcome.plaintext,
            tried,
        },
    }
}
