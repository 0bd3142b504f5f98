use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use wobetti::cli::{execute, Cli};

fn main() -> ExitCode {
    let out = execute(&Cli::parse());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    ExitCode::from(out.status as u8)
}
