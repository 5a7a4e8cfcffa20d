mod args;
mod config;
mod error;
mod output;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;
use crate::config::FileConfig;
use crate::error::{CliError, Result};
use crate::run::{execute, RunConfig};

fn emit(cli: &Cli) -> Result<()> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let cfg = RunConfig::resolve(&cli.params, &file)?;
    let report = execute(cli.command, &cfg)?;

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let io_err = |e: std::io::Error| CliError::Io(format!("cannot write to standard output: {e}"));
    match (&cfg.out, &report.csv) {
        (Some(path), Some(csv)) => {
            output::write_atomic(path, csv)?;
            if let Some(summary) = &report.summary {
                out.write_all(summary.as_bytes()).map_err(io_err)?;
            }
        }
        (None, Some(csv)) => {
            out.write_all(csv.as_bytes()).map_err(io_err)?;
            if let Some(summary) = &report.summary {
                eprint!("{summary}");
            }
        }
        (_, None) => {
            if let Some(summary) = &report.summary {
                out.write_all(summary.as_bytes()).map_err(io_err)?;
            }
        }
    }
    out.flush().map_err(io_err)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = CliError::config(e.kind().to_string());
            eprintln!("error[{}]: {}", err.category(), e.render().to_string().trim_end());
            return ExitCode::from(err.exit_code());
        }
    };
    match emit(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error[{}]: {err}", err.category());
            ExitCode::from(err.exit_code())
        }
    }
}
