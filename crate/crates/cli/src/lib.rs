//! Command-line front end: argument parsing, dispatch, report emission.
//!
//! Exit codes: 0 when every check holds, 1 on a mathematical mismatch or
//! I/O failure, 2 on a usage error.

pub mod args;
pub mod commands;
pub mod output;
pub mod space;
pub mod verify;

use cominuscule::Exec;
use thiserror::Error;

use crate::args::{Cli, Command};
use crate::output::{emit, Output};
use crate::verify::{run_verify, VerifyConfig};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Math(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl From<cominuscule::Error> for CliError {
    fn from(e: cominuscule::Error) -> Self {
        match e {
            cominuscule::Error::Consistency(_) => CliError::Math(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Math(_) | CliError::Io(_) => 1,
        }
    }
}

fn dispatch(cli: &Cli, exec: Exec) -> Result<Output, CliError> {
    use commands::*;
    match &cli.command {
        Command::Catalog { action } => catalog(action),
        Command::Rootsys { action } => rootsys(action),
        Command::Partitions { action } => partitions(action, exec),
        Command::Omega { action } => omega(action),
        Command::MinTwist { space, p, force_plethysm } => min_twist_cmd(space, *p, *force_plethysm, exec),
        Command::TableAudit { which, max_p } => table_audit_cmd(*which, *max_p, exec),
        Command::Nonvanishing { max_rank } => nonvanishing(*max_rank, exec),
        Command::Foliation { action } => foliation(action, exec),
        Command::Verify(v) => {
            let cfg = VerifyConfig {
                max_rank: v.max_rank as usize,
                families: v.families.clone(),
                max_p: v.max_p,
                jobs: cli.global.jobs,
            };
            let report = run_verify(&cfg, exec);
            let rows = report
                .checks
                .iter()
                .map(|c| vec![c.name.clone(), c.passed.to_string(), c.detail.clone()])
                .collect();
            Ok(Output::new(&report, vec!["check", "passed", "detail"], rows, report.passed))
        }
    }
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let exec = if cli.global.jobs == Some(1) { Exec::Sequential } else { Exec::Parallel };
    let result = match cli.global.jobs {
        #[cfg(feature = "parallel")]
        Some(n) if n > 1 => match rayon::ThreadPoolBuilder::new().num_threads(n as usize).build() {
            Ok(pool) => pool.install(|| dispatch(cli, exec)),
            Err(e) => Err(CliError::Usage(format!("--jobs {n}: {e}"))),
        },
        _ => dispatch(cli, exec),
    };
    let outcome = result.and_then(|out| {
        emit(&out, cli.global.format, cli.global.out.as_deref())?;
        Ok(out.ok)
    });
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
