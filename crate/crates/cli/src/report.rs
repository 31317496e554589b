use std::io::{self, Write};
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use logcert::exact::DigitBudget;

use crate::{commands, Command};

pub const EXIT_HOLDS: u8 = 0;
pub const EXIT_FAILS: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
}

/// What a subcommand produced: an exit code, the JSON payload and, for
/// CSV output, the line printed instead of the report.
pub struct Outcome {
    pub exit: u8,
    pub result: Value,
    pub csv: Option<String>,
}

impl Outcome {
    pub fn json(exit: u8, result: Value) -> Self {
        Outcome { exit, result, csv: None }
    }
}

#[derive(Serialize)]
struct Report {
    tool: &'static str,
    version: &'static str,
    command: Echo,
    result: Value,
    timing_ms: u64,
}

#[derive(Serialize)]
struct Echo {
    name: &'static str,
    argv: Vec<String>,
}

pub fn run(command: &Command, argv: Vec<String>, budget: DigitBudget) -> u8 {
    let start = Instant::now();
    let (name, outcome) = match command {
        Command::Gen(a) => ("gen", commands::gen(a)),
        Command::Check(a) => ("check", commands::check(a, budget)),
        Command::Certify(a) => ("certify", commands::certify(a)),
        Command::Convolve(a) => ("convolve", commands::convolve(a)),
        Command::Replay(a) => ("replay", commands::replay(a)),
    };
    let (exit, result) = match outcome {
        Ok(Outcome { exit, csv: Some(line), .. }) => {
            emit(&line);
            return exit;
        }
        Ok(o) => (o.exit, o.result),
        Err(e) => {
            eprintln!("error: {e}");
            let (exit, status) = match e {
                CliError::Input(_) => (EXIT_INPUT, "error"),
                CliError::Budget(_) => (EXIT_BUDGET, "budget_exceeded"),
            };
            (exit, json!({ "status": status, "error": e.to_string() }))
        }
    };
    let report = Report {
        tool: "logcert",
        version: env!("CARGO_PKG_VERSION"),
        command: Echo { name, argv },
        result,
        timing_ms: start.elapsed().as_millis() as u64,
    };
    emit(&serde_json::to_string_pretty(&report).expect("report serializes"));
    exit
}

/// Writes a line to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(io::stdout().lock(), "{text}");
}
