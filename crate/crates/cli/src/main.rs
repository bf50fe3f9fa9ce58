use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use quadalg_cli::{run, Cli, Job};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let result = Job::from_cli(cli).and_then(|job| run(&job));
    match result {
        Ok(report) => {
            let text = if json { report.to_json() + "\n" } else { report.to_text() };
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
