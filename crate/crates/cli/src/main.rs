use std::process::ExitCode;

use clap::Parser;

use flypecheck_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    match run(&cli, &mut stdin.lock(), &mut stdout.lock()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("flypecheck: {e}");
            ExitCode::from(2)
        }
    }
}
