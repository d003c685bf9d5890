mod args;
mod commands;
mod error;
mod output;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use error::CliResult;

/// Exit status for a report whose bounds failed under `--strict`.
const EXIT_VERIFICATION: u8 = 3;

fn run(cli: &Cli) -> CliResult<u8> {
    let cap = commands::memory_cap()?;
    let mut status = 0;
    let report = match &cli.command {
        Command::Entropy(a) => commands::entropy(a, cap)?,
        Command::Generate(a) => commands::generate(a, cap)?,
        Command::Compress(a) => commands::compress(a)?,
        Command::Decompress(a) => commands::decompress(a)?,
        Command::Verify(a) => {
            let (report, all_satisfied) = commands::verify(a)?;
            if a.strict && !all_satisfied {
                status = EXIT_VERIFICATION;
            }
            report
        }
        Command::Convergence(a) => commands::convergence(a, cap)?,
    };
    let text = output::render(report, cli.format, !cli.no_timestamp)?;
    output::emit(&text, cli.output.as_deref())?;
    Ok(status)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli) {
        Ok(status) => ExitCode::from(status),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
