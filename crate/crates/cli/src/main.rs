use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use wcilab::{run, Format, Options, OrderArg, Status, Task};

#[derive(Parser, Debug)]
#[command(
    name = "wcilab",
    version,
    about = "Weighted complete intersection toolkit"
)]
struct Cli {
    task: Task,
    file: PathBuf,
    /// Degree bound for saturation and strictness.
    #[arg(long)]
    bound: Option<i64>,
    #[arg(long, value_enum, default_value = "grevlex")]
    order: OrderArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Maximum reduction steps per Gröbner basis.
    #[arg(long)]
    budget_steps: Option<u64>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                Status::Error.exit_code()
            } else {
                0
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let text = match std::fs::read_to_string(&cli.file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {e}", cli.file.display());
            return ExitCode::from(Status::Error.exit_code() as u8);
        }
    };
    let opts = Options {
        bound: cli.bound,
        order: cli.order,
        budget_steps: cli.budget_steps,
    };
    let report = run(&text, cli.task, &opts);
    print!("{}", report.emit(cli.format));
    ExitCode::from(report.status.exit_code() as u8)
}
