//! Command-line front end.
//!
//! Exit codes: 0 success, 2 ambiguous decryption (including a crack hit
//! that decrypts ambiguously), 3 wrong code, 4 bad input or unusable file,
//! 5 crack range exhausted.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::cipher::{Cipher, DecryptStatus, SeededSource};
use crate::cracker::{
    crack_range_with, CrackOptions, CrackRequest, CrackStatus, DEFAULT_UNIT_SIZE,
};
use crate::error::Error;
use crate::etable::ETable;
use crate::files;
use crate::keyschedule::SecretCode;

/// Retries used by `encrypt --verify`.
pub const VERIFY_RETRIES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Ambiguous = 2,
    WrongCode = 3,
    InputError = 4,
    NotFound = 5,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Clone, Parser)]
#[command(name = "digit-cipher", version, about = "Keyed digit-table cipher")]
pub struct InvocationConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Encrypt a one-line message.
    Encrypt(EncryptArgs),
    /// Decrypt a ciphertext with a known code.
    Decrypt(DecryptArgs),
    /// Search a range of codes for one that decrypts the ciphertext.
    Crack(CrackArgs),
    /// Print the 40-entry table derived from a code.
    DumpTable(DumpTableArgs),
}

#[derive(Debug, Clone, Args)]
pub struct EncryptArgs {
    #[arg(long, default_value = "Code.txt")]
    pub code_file: PathBuf,
    #[arg(long = "in", default_value = "Initial_Message.txt")]
    pub input: PathBuf,
    #[arg(long = "out", default_value = "Final_Coded_Message.txt")]
    pub output: PathBuf,
    /// Seed for reproducible output; system entropy otherwise.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Re-encrypt until the result decrypts unambiguously.
    #[arg(long)]
    pub verify: bool,
    /// Require pure alphabet text, with no case or space mapping.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Clone, Args)]
pub struct DecryptArgs {
    #[arg(long, default_value = "Code.txt")]
    pub code_file: PathBuf,
    #[arg(long = "in", default_value = "Initial_Coded_Message.txt")]
    pub input: PathBuf,
    #[arg(long = "out", default_value = "Final_Decoded_Message.txt")]
    pub output: PathBuf,
    /// Write the best-effort plaintext even when decryption is ambiguous.
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Clone, Args)]
pub struct CrackArgs {
    #[arg(long = "in", default_value = "Initial_Coded_Message.txt")]
    pub input: PathBuf,
    #[arg(long = "out", default_value = "Final_Decoded_Message.txt")]
    pub output: PathBuf,
    /// First candidate code, ten digits.
    #[arg(long)]
    pub start: String,
    /// Number of candidates to try.
    #[arg(long)]
    pub count: u64,
    #[arg(long, default_value_t = DEFAULT_UNIT_SIZE)]
    pub unit_size: u64,
    /// Evaluate candidates on one thread.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Clone, Args)]
pub struct DumpTableArgs {
    #[arg(long, default_value = "Code.txt")]
    pub code_file: PathBuf,
    /// Output file; standard output when omitted.
    #[arg(long = "out")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Format { path: PathBuf, source: Error },
    #[error("{0}")]
    Usage(String),
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Write {
        path: path.to_owned(),
        source,
    })
}

fn in_file<T>(path: &Path, r: crate::Result<T>) -> Result<T, CliError> {
    r.map_err(|source| CliError::Format {
        path: path.to_owned(),
        source,
    })
}

fn read_code(path: &Path) -> Result<SecretCode, CliError> {
    in_file(path, files::parse_code_file(&read(path)?))
}

/// Runs one invocation. Diagnostics and status lines go to `report`.
pub fn run(config: &InvocationConfig, report: &mut dyn Write) -> ExitStatus {
    let result = match &config.command {
        Command::Encrypt(args) => encrypt(args, report),
        Command::Decrypt(args) => decrypt(args, report),
        Command::Crack(args) => crack(args, report),
        Command::DumpTable(args) => dump_table(args, report),
    };
    match result {
        Ok(status) => status,
        Err(err) => {
            let _ = writeln!(report, "error: {err}");
            ExitStatus::InputError
        }
    }
}

fn encrypt(args: &EncryptArgs, report: &mut dyn Write) -> Result<ExitStatus, CliError> {
    let code = read_code(&args.code_file)?;
    let message = in_file(
        &args.input,
        files::parse_message_file(&read(&args.input)?, args.strict),
    )?;
    let mut rng = match args.seed {
        Some(seed) => SeededSource::seeded(seed),
        None => SeededSource::from_entropy(),
    };
    let cipher = Cipher::new(code);
    let ciphertext = if args.verify {
        match cipher.encrypt_verified(&message, &mut rng, VERIFY_RETRIES) {
            Ok(ct) => ct,
            Err(Error::RetriesExhausted { attempts, .. }) => {
                let _ = writeln!(
                    report,
                    "every one of {attempts} encryptions decrypted ambiguously; nothing written"
                );
                return Ok(ExitStatus::Ambiguous);
            }
            Err(e) => return Err(CliError::Usage(e.to_string())),
        }
    } else {
        cipher.encrypt(&message, &mut rng)
    };
    write(&args.output, &files::format_ciphertext_file(&ciphertext))?;
    let _ = writeln!(
        report,
        "encrypted {} symbols into {} digits",
        message.len(),
        ciphertext.len()
    );
    Ok(ExitStatus::Success)
}

fn decrypt(args: &DecryptArgs, report: &mut dyn Write) -> Result<ExitStatus, CliError> {
    let code = read_code(&args.code_file)?;
    let ciphertext = in_file(
        &args.input,
        files::parse_ciphertext_file(&read(&args.input)?),
    )?;
    let outcome = Cipher::new(code).decrypt(&ciphertext);
    if outcome.trailing_digits > 0 {
        let _ = writeln!(
            report,
            "warning: {} trailing digits do not form a payload; the ciphertext may be truncated",
            outcome.trailing_digits
        );
    }
    let mut text = String::new();
    let show_plaintext = match outcome.status {
        DecryptStatus::Ok => true,
        DecryptStatus::Ambiguous => args.force,
        DecryptStatus::WrongCode => false,
    };
    if show_plaintext {
        if let Some(p) = &outcome.plaintext {
            text.push_str(p.as_str());
            text.push_str("\n\n");
        }
    }
    text.push_str(outcome.status.message());
    text.push('\n');
    write(&args.output, &text)?;
    let _ = writeln!(report, "{}", outcome.status.message());
    Ok(match outcome.status {
        DecryptStatus::Ok => ExitStatus::Success,
        DecryptStatus::Ambiguous => ExitStatus::Ambiguous,
        DecryptStatus::WrongCode => ExitStatus::WrongCode,
    })
}

fn crack(args: &CrackArgs, report: &mut dyn Write) -> Result<ExitStatus, CliError> {
    let start =
        SecretCode::parse(&args.start).map_err(|e| CliError::Usage(format!("--start: {e}")))?;
    let ciphertext = in_file(
        &args.input,
        files::parse_ciphertext_file(&read(&args.input)?),
    )?;
    let request = CrackRequest::new(ciphertext, start, args.count)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let opts = CrackOptions {
        unit_size: args.unit_size,
        parallel: !args.sequential,
    };
    let outcome = crack_range_with(&request, opts, |p| {
        log::debug!(
            "{}/{} units, {} candidates tried",
            p.units_done,
            p.units_total,
            p.tried
        );
    });

    let mut text = String::new();
    if let Some(p) = &outcome.plaintext {
        text.push_str(p.as_str());
        text.push_str("\n\n");
    }
    text.push_str(outcome.status.message());
    text.push('\n');
    match (outcome.status, outcome.code) {
        (CrackStatus::Found, Some(code)) => text.push_str(&format!("The secret code is: {code}\n")),
        (CrackStatus::FoundWithIssues, Some(code)) => {
            text.push_str(&format!("The hypothetical secret code is: {code}\n"))
        }
        _ => {}
    }
    let status_line = match outcome.code {
        Some(code) => format!(
            "status={} code={code} tried={}",
            outcome.status.tag(),
            outcome.tried
        ),
        None => format!("status={} tried={}", outcome.status.tag(), outcome.tried),
    };
    text.push_str(&status_line);
    text.push('\n');
    write(&args.output, &text)?;
    let _ = writeln!(report, "{status_line}");
    Ok(match outcome.status {
        CrackStatus::Found => ExitStatus::Success,
        CrackStatus::FoundWithIssues => ExitStatus::Ambiguous,
        CrackStatus::NotFound => ExitStatus::NotFound,
    })
}

fn dump_table(args: &DumpTableArgs, report: &mut dyn Write) -> Result<ExitStatus, CliError> {
    let code = read_code(&args.code_file)?;
    let dump = ETable::for_code(&code).to_string();
    match &args.output {
        Some(path) => write(path, &dump)?,
        None => report
            .write_all(dump.as_bytes())
            .map_err(|source| CliError::Write {
                path: PathBuf::from("<stdout>"),
                source,
            })?,
    }
    Ok(ExitStatus::Success)
}
