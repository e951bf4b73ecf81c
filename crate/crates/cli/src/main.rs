use std::io;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use finlift_cli::{dispatch, Cli, EXIT_INPUT};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_INPUT as u8),
            };
        }
    };
    let status = dispatch(&cli, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(status as u8)
}
