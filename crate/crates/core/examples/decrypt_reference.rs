//! Decrypts the published 800-digit ciphertext and shows symbols 4 to 6.
//!
//!     cargo run --example decrypt_reference

use digit_cipher::alphabet::index_to_symbol;
use digit_cipher::cipher::{match_payload, Cipher};
use digit_cipher::files::parse_ciphertext_file;
use digit_cipher::SecretCode;

const CIPHERTEXT: &str = include_str!("../tests/data/reference_ciphertext.txt");

fn main() -> digit_cipher::Result<()> {
    let ct = parse_ciphertext_file(CIPHERTEXT)?;
    let cipher = Cipher::new("0135792468".parse::<SecretCode>()?);
    println!("{} ciphertext digits", ct.len());

    let split = cipher.split_payloads(&ct);
    for (i, payload) in split.payloads.iter().enumerate().skip(3).take(3) {
        let m = match_payload(payload, cipher.table());
        let n = m.index.expect("payload matches");
        println!(
            "payload {}: {payload:<9} in E_{n:<2} = {}  -> {:?}",
            i + 1,
            cipher.table().entry(n).unwrap(),
            index_to_symbol(n)?
        );
    }

    let outcome = cipher.decrypt(&ct);
    println!("{:?}: {}", outcome.status, outcome.status.message());
    if let Some(p) = outcome.ok_plaintext() {
        println!("{p}");
    }

    let wrong = Cipher::new("1234567890".parse()?).decrypt(&ct);
    println!(
        "with code 1234567890: {:?}: {}",
        wrong.status,
        wrong.status.message()
    );
    Ok(())
}
