//! Encrypts "O_B" with the draws fixed, then the same text with real randomness.
//!
//!     cargo run --example encrypt_walkthrough

use digit_cipher::cipher::{Cipher, ScriptedSource, SeededSource};
use digit_cipher::{Plaintext, SecretCode};

fn main() -> digit_cipher::Result<()> {
    let code: SecretCode = "0135792468".parse()?;
    let cipher = Cipher::new(code);
    let normalized = code.normalize();
    println!(
        "code {code}  normalized {normalized}  a = {}",
        normalized.base_value()
    );
    println!(
        "digit sum {}  seeds {:?}",
        code.digit_sum(),
        code.schedule().seeds()
    );

    let message = Plaintext::new("O_B")?;
    let mut scripted = ScriptedSource::new([3, 5, 7], "95916336133427975");
    let (ct, trace) = cipher.encrypt_traced(&message, &mut scripted);
    for t in &trace {
        println!(
            "symbol #{:<2} entry {}  start {}  payload {:<9}  mislead {}",
            t.symbol_index,
            cipher.table().entry(t.symbol_index).unwrap(),
            t.start,
            t.payload,
            t.mislead
        );
    }
    println!("scripted ciphertext: {ct}");

    for seed in [1, 2] {
        let ct = cipher.encrypt(&message, &mut SeededSource::seeded(seed));
        println!("seed {seed}:            {ct}");
    }
    Ok(())
}
