//! Shows the raw and clamped slice schedule for a code.
//!
//!     cargo run --example schedule -- 0135792468 24

use digit_cipher::SecretCode;

fn main() -> digit_cipher::Result<()> {
    let mut args = std::env::args().skip(1);
    let code = SecretCode::parse(&args.next().unwrap_or_else(|| "0135792468".into()))?;
    let count: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(24);

    let schedule = code.schedule();
    let raw: Vec<u8> = schedule.raw().take(count).collect();
    let clamped: Vec<u8> = schedule.iter().take(count).collect();
    println!("seeds {:?}", schedule.seeds());
    println!("B: {raw:?}");
    println!("C: {clamped:?}");
    for symbols in [1, 3, 10, 57] {
        println!(
            "{symbols:>3} symbols -> {} ciphertext digits",
            schedule.ciphertext_len(symbols)
        );
    }
    Ok(())
}
