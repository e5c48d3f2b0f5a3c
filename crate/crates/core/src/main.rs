use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use partial_cover::cli::{run, Cli, RunReport};

fn print(report: &RunReport) {
    let text = serde_json::to_string_pretty(report).expect("reports serialize");
    // A closed pipe on stdout is not worth a panic.
    let _ = writeln!(std::io::stdout(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print(&report);
            ExitCode::SUCCESS
        }
        Err(err) => {
            if let Some(report) = &err.report {
                print(report);
            }
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code as u8)
        }
    }
}
