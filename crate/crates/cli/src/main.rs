mod args;
mod commands;
mod input;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::{dispatch, Ctx};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] coalition_core::Error),
    #[error(transparent)]
    Graph6(#[from] coalition_core::Graph6Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors and 0 for --help / --version
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs.filter(|&j| j > 0) {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("coalition-kit: cannot size the worker pool: {e}");
        }
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = dispatch(cli.command, &mut Ctx { json: cli.json, out: &mut out });
    let flushed = out.flush();
    match result {
        Ok(verdict) if flushed.is_ok() => ExitCode::from(if verdict { 0 } else { 1 }),
        Ok(_) => ExitCode::from(2),
        Err(e) => {
            eprintln!("coalition-kit: {e}");
            eprintln!("Run `coalition-kit --help` for the input grammar.");
            ExitCode::from(2)
        }
    }
}
