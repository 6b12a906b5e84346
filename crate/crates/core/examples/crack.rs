//! Brute-forces the published ciphertext over a range of codes.
//!
//!     cargo run --release --example crack -- 0135792400 101

use digit_cipher::cracker::{crack_range_with, CrackOptions, CrackRequest};
use digit_cipher::files::parse_ciphertext_file;
use digit_cipher::SecretCode;

const CIPHERTEXT: &str = include_str!("../tests/data/reference_ciphertext.txt");

fn main() -> digit_cipher::Result<()> {
    let mut args = std::env::args().skip(1);
    let start = SecretCode::parse(&args.next().unwrap_or_else(|| "0135792400".into()))?;
    let count: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(101);

    let request = CrackRequest::new(parse_ciphertext_file(CIPHERTEXT)?, start, count)?;
    let started = std::time::Instant::now();
    let outcome = crack_range_with(&request, CrackOptions::default(), |p| {
        eprintln!(
            "unit {}/{} ({} tried)",
            p.units_done, p.units_total, p.tried
        );
    });
    println!("{}", outcome.status.message());
    if let (Some(code), Some(text)) = (outcome.code, &outcome.plaintext) {
        println!("code {code}: {text}");
    }
    println!("{} candidates in {:?}", outcome.tried, started.elapsed());
    Ok(())
}
