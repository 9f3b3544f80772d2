//! `orecodec`: batch front end. Exit codes: 0 success, 1 usage error,
//! 2 domain error (reported as `{"error": {...}}`).

mod args;
mod commands;
mod encode;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};
use orecodec_core::{FieldCtx, GaloisField, Result};

use args::{Cli, Common, Output};
use commands::{Env, Report};

fn context(c: &Common, field: &str) -> Result<FieldCtx> {
    if let Some(spec) = &c.ctx {
        return FieldCtx::parse(field, spec);
    }
    let gf = GaloisField::parse(field)?;
    let beta = gf.elem(c.beta.unwrap_or(0))?;
    FieldCtx::new(gf, c.sigma.unwrap_or(0), beta)
}

fn execute(cli: &Cli, field: &str) -> Result<Report> {
    let ctx = context(&cli.common, field)?;
    let env = Env::from_process(cli.common.force)?;
    commands::run(&ctx, &cli.command, &env)
}

fn emit(output: Output, result: &Result<Report>) -> std::io::Result<()> {
    let stdout = &mut std::io::stdout().lock();
    match (output, result) {
        (Output::Json, Ok(r)) => writeln!(stdout, "{}", r.json),
        (Output::Json, Err(e)) => writeln!(stdout, "{}", commands::error_json(e)),
        (Output::Text, Ok(r)) => write!(stdout, "{}", commands::render_text(r)),
        (Output::Text, Err(e)) => writeln!(std::io::stderr(), "error [{}]: {e}", e.kind()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let Some(field) = cli.common.field.clone() else {
        let mut cmd = Cli::command();
        let _ = writeln!(std::io::stderr(), "error: --field is required\n\n{}", cmd.render_usage());
        return ExitCode::from(1);
    };
    let result = execute(&cli, &field);
    let failed = result.is_err();
    if emit(cli.common.output, &result).is_err() {
        return ExitCode::from(1);
    }
    if failed {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}
