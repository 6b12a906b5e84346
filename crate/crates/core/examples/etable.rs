//! Prints the table for a code, with each entry's next few digits.
//!
//!     cargo run --example etable -- 0135792468

use digit_cipher::etable::{ratio, ETable};
use digit_cipher::SecretCode;

fn main() -> digit_cipher::Result<()> {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "0135792468".into());
    let code = SecretCode::parse(&arg)?;
    let table = ETable::for_code(&code);
    println!("a = {}", table.base());
    for (n, entry) in table.iter() {
        let digits = ratio(&table.base(), n)?.significant_digits(20);
        println!("E_{n:<2} {entry}  ({}...)", &digits[15..]);
    }
    let dups = table.duplicate_entries();
    if !dups.is_empty() {
        println!("duplicate entries: {dups:?}");
    }
    Ok(())
}
