//! Batch front-end: problem files in, deterministic reports out.
//!
//! Exit codes: 0 ok, 1 property violated, 2 parse or usage error,
//! 3 budget exceeded or verdict unknown.

pub mod problem;
pub mod report;
mod tasks;

use std::time::Instant;

use wcilab_core::{Budget, Error, GbConfig, MonomialOrder};

pub use problem::ProblemFile;
pub use report::{Format, Report, Status, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Problem { line: usize, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Problem { .. } | CliError::Usage(_) => Status::Error,
            CliError::Core(e) => match e {
                Error::BudgetExceeded { .. } | Error::ComponentTooLarge { .. } => Status::Unknown,
                Error::NotWellFormed(_)
                | Error::NotCompleteIntersection { .. }
                | Error::NotGeneralType(_)
                | Error::PluckerHypothesis { .. }
                | Error::DegreeBoundTooSmall { .. } => Status::Violated,
                _ => Status::Error,
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Task {
    /// Well-formedness, quasi-smoothness and adjunction battery.
    Check,
    /// Both saturation notions.
    Saturate,
    /// Strict complete intersection verdict.
    Strict,
    /// Jacobi ring components and the Torelli map.
    Torelli,
    /// Weighted Grassmannian wGr(2,4).
    Wgr,
    /// Candidate enumeration.
    Enum,
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::Check => "check",
            Task::Saturate => "saturate",
            Task::Strict => "strict",
            Task::Torelli => "torelli",
            Task::Wgr => "wgr",
            Task::Enum => "enum",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub bound: Option<i64>,
    pub order: OrderArg,
    pub budget_steps: Option<u64>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            bound: None,
            order: OrderArg::Grevlex,
            budget_steps: None,
        }
    }
}

impl Options {
    pub fn gb_config(&self) -> GbConfig {
        let mut budget = Budget::default();
        if let Some(s) = self.budget_steps {
            budget.max_steps = s;
        }
        GbConfig {
            order: match self.order {
                OrderArg::Grevlex => MonomialOrder::WeightedGrevlex,
                OrderArg::Lex => MonomialOrder::Lex,
            },
            budget,
        }
    }
}

/// Parses `text` and runs `task`. Never fails: errors become a report with
/// status `error`, `violated` or `unknown` and an `error` entry.
pub fn run(text: &str, task: Task, opts: &Options) -> Report {
    let start = Instant::now();
    let cfg = opts.gb_config();
    let mut report = Report::default();
    report.push("task", task.name());
    report.push("order", cfg.order.name());
    report.push("budget_steps", cfg.budget.max_steps as i64);
    report.push("budget_basis", cfg.budget.max_basis);
    let result =
        ProblemFile::parse(text).and_then(|p| tasks::dispatch(&p, task, opts, &cfg, &mut report));
    if let Err(e) = result {
        report.push("error", e.to_string());
        report.status = e.status();
    }
    report.elapsed = start.elapsed();
    report
}
