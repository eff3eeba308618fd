use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = bei::cli::Cli::parse();
    match bei::cli::run(&cli) {
        Ok(mut out) => {
            if !out.ends_with('\n') {
                out.push('\n');
            }
            // a closed pipe (e.g. `| head`) is not an error
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("bei: {e}");
            ExitCode::FAILURE
        }
    }
}
