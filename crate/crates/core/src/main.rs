use std::process::ExitCode;

use clap::Parser;

use casimir_core::cli::{self, Cli, EXIT_COMPUTATION};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let (code, text) = cli::run(&cli);
    let text_is_error = code == EXIT_COMPUTATION && text.starts_with("error:");
    match (&cli.out, text_is_error) {
        (Some(path), false) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_COMPUTATION as u8);
            }
        }
        (_, true) => eprint!("{text}"),
        (None, false) => print!("{text}"),
    }
    ExitCode::from(code as u8)
}
