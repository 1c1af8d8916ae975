mod args;
mod commands;
mod error;
mod job;
mod output;
mod source;
mod verify;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::Outcome;
use error::CliResult;
use source::Resolved;

fn run(cli: &Cli) -> CliResult<Outcome> {
    match &cli.command {
        Command::Expand { source, order } => {
            Ok(commands::expand(&Resolved::from_source(source)?, *order)?.into())
        }
        Command::Transform { source, offset, upto } => {
            Ok(commands::transform(&Resolved::from_source(source)?, *offset, *upto)?.into())
        }
        Command::Closedform { source, k, upto, family } => {
            let src = Resolved::from_source(source)?;
            Ok(commands::closedform(&src, *k, *upto, family.as_deref())?.into())
        }
        Command::Polys { source, kind, k } => commands::polys(&Resolved::from_source(source)?, *kind, *k),
        Command::Reconstruct { source, k } => commands::reconstruct(&Resolved::from_source(source)?, *k),
        Command::Verify {
            source,
            suite,
            kmax,
            upto,
            cases,
            seed,
        } => {
            let settings = verify::Settings {
                kmax: *kmax,
                upto: *upto,
                cases: *cases,
                seed: *seed,
            };
            verify::verify(&Resolved::from_source(source)?, *suite, &settings)
        }
        Command::Job { path } => job::load_job(path)?.run(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            println!("{}", output::render(&outcome.value, cli.format));
            match outcome.failure {
                Some(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(3)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
