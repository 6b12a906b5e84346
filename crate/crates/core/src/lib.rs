//! A keyed digit-table substitution cipher.
//!
//! A ten-digit secret code determines two things:
//!
//! * an [`ETable`] of forty fifteen-digit strings, one per alphabet symbol,
//!   computed exactly from powers of a base value derived from the code;
//! * a [`SliceSchedule`], a clamped Fibonacci-like digit sequence that fixes
//!   how many digits of each entry are sent and how many random misleading
//!   digits follow.
//!
//! Encryption is randomized, so the same message encrypts differently each
//! time. Decryption cuts the payloads back out and looks each one up in the
//! table; a payload found nowhere means the wrong code was used, and a
//! payload found in several entries means the message must be resent. The
//! [`cracker`] module shows how small the keyspace really is.
//!
//! ```
//! use digit_cipher::{decrypt, encrypt, Plaintext, SecretCode, SeededSource};
//!
//! let code: SecretCode = "0135792468".parse()?;
//! let message = Plaintext::new("O_BEAUTIFUL")?;
//! let ciphertext = encrypt(&message, &code, &mut SeededSource::seeded(7));
//! let outcome = decrypt(&ciphertext, &code);
//! assert_eq!(outcome.ok_plaintext(), Some(&message));
//! # Ok::<(), digit_cipher::Error>(())
//! ```

pub mod alphabet;
pub mod cipher;
pub mod cli;
pub mod cracker;
mod error;
pub mod etable;
pub mod files;
pub mod keyschedule;

pub use alphabet::{normalize_text, Plaintext};
pub use cipher::{
    decrypt, encrypt, encrypt_verified, match_payload, split_payloads, Cipher, Ciphertext,
    DecryptOutcome, DecryptStatus, RandomSource, RngSource, ScriptedSource, SeededSource,
};
pub use cracker::{
    crack_range, crack_range_with, CrackOptions, CrackOutcome, CrackRequest, CrackStatus,
};
pub use error::{BadChar, Error, Result};
pub use etable::{build_table, ETable};
pub use keyschedule::{SecretCode, SliceSchedule};
