use std::process::ExitCode;

use clap::Parser;
use digit_cipher::cli::{run, InvocationConfig};

fn main() -> ExitCode {
    env_logger::init();
    let config = InvocationConfig::parse();
    ExitCode::from(run(&config, &mut std::io::stderr()).code())
}
