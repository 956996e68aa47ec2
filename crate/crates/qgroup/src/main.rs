use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use qgroup::config::{parse_mu, Config, Suite};
use qgroup::run_suite;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Exact order-by-order checks of non-standard (1+1) quantum groups.
#[derive(Debug, Parser)]
#[command(name = "qgroup", version)]
struct Args {
    /// Suite to run: hopf-axioms, r-poincare, r-contracted, weyl,
    /// contraction, matrep, frt, poisson, recurrence, all, or controls
    /// (deliberately broken structures, expected to fail).
    #[arg(long)]
    suite: String,
    /// Deformation order (defaults to each model's designated order).
    #[arg(long)]
    order: Option<u32>,
    /// Coordinate degree cap for function algebras.
    #[arg(long)]
    degree: Option<u32>,
    /// Value of μ: -1, 0, +1 or sym.
    #[arg(long, default_value = "sym", allow_hyphen_values = true)]
    mu: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Run independent jobs in parallel.
    #[arg(long, default_value_t = false, action = clap::ArgAction::Set)]
    parallel: bool,
}

fn config(args: &Args) -> Result<Config, qgroup::ConfigError> {
    Config {
        suite: args.suite.parse::<Suite>()?,
        order: args.order,
        degree: args.degree,
        mu: parse_mu(&args.mu)?,
        parallel: args.parallel,
    }
    .validate()
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let cfg = match config(&args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = run_suite(&cfg);
    match args.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text(8)),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
