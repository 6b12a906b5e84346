//! Measures how often an honest encryption decrypts ambiguously, and how
//! re-encrypting before sending avoids it.
//!
//!     cargo run --release --example resend

use digit_cipher::cipher::{Cipher, DecryptStatus, SeededSource};
use digit_cipher::{Plaintext, SecretCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

fn ambiguous_rate(
    cipher: &Cipher,
    message: &Plaintext,
    rng: &mut SeededSource,
    trials: usize,
) -> usize {
    (0..trials)
        .filter(|_| {
            cipher.decrypt(&cipher.encrypt(message, rng)).status == DecryptStatus::Ambiguous
        })
        .count()
}

fn main() -> digit_cipher::Result<()> {
    let cipher = Cipher::new("0135792468".parse::<SecretCode>()?);
    let mut rng = SeededSource::seeded(2024);

    let anthem = Plaintext::new("O_BEAUTIFUL_FOR_SPACIOUS_SKIES,_FOR_AMBER_WAVES_OF_GRAIN.")?;
    let mut picker = ChaCha20Rng::seed_from_u64(7);
    let noise = Plaintext::from_indices((0..200).map(|_| picker.gen_range(1..=40)))?;

    for (name, message) in [
        ("57-symbol anthem", &anthem),
        ("200 random symbols", &noise),
    ] {
        let hits = ambiguous_rate(&cipher, message, &mut rng, 500);
        println!("{name}: {hits}/500 encryptions would need a resend");
    }

    let checked = cipher.encrypt_verified(&noise, &mut rng, 5)?;
    println!(
        "verified ciphertext decrypts {:?}",
        cipher.decrypt(&checked).status
    );
    Ok(())
}
