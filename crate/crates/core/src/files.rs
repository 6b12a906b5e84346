//! On-disk formats for codes, messages and ciphertexts.

use crate::alphabet::{normalize_text, Plaintext};
use crate::cipher::Ciphertext;
use crate::error::{Error, Result};
use crate::keyschedule::{SecretCode, CODE_DIGITS};

/// Ciphertext files wrap at this many digits per line.
pub const WRAP_COLUMNS: usize = 96;

/// Code file: exactly ten ASCII digits, optionally followed by one `\n`.
pub fn parse_code_file(contents: &str) -> Result<SecretCode> {
    let body = contents.strip_suffix('\n').unwrap_or(contents);
    if body.len() != CODE_DIGITS || !body.bytes().all(|b| b.is_ascii_digit()) {
        // Reuse the code parser's diagnostics where they apply.
        SecretCode::parse(body)?;
        return Err(Error::CodeLength(body.chars().count()));
    }
    SecretCode::parse(body)
}

pub fn format_code_file(code: &SecretCode) -> String {
    format!("{code}\n")
}

/// Message file: one line of text.
///
/// Trailing blank lines are dropped. Further lines are rejected when
/// `strict`, otherwise joined with `_`.
pub fn parse_message_file(contents: &str, strict: bool) -> Result<Plaintext> {
    let mut lines: Vec<&str> = contents.lines().collect();
    while lines.last().is_some_and(|l| l.is_empty()) {
        lines.pop();
    }
    if strict && lines.len() > 1 {
        return Err(Error::InvalidArgument(format!(
            "message must be a single line, found {}",
            lines.len()
        )));
    }
    normalize_text(&lines.join("_"), strict)
}

/// Ciphertext file: digits, with all whitespace ignored.
pub fn parse_ciphertext_file(contents: &str) -> Result<Ciphertext> {
    let digits: String = contents.chars().filter(|c| !c.is_whitespace()).collect();
    Ciphertext::new(digits)
}

/// Wraps at [`WRAP_COLUMNS`] and ends with a newline.
pub fn format_ciphertext_file(ciphertext: &Ciphertext) -> String {
    let digits = ciphertext.as_str();
    let mut out = String::with_capacity(digits.len() + digits.len() / WRAP_COLUMNS + 1);
    for (i, chunk) in digits.as_bytes().chunks(WRAP_COLUMNS).enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(std::str::from_utf8(chunk).expect("ascii digits"));
    }
    out.push('\n');
    out
}
