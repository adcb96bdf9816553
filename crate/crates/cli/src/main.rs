use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_rational::Ratio;

use uqf_cli::{commands, survey, CliError};

#[derive(Parser)]
#[command(name = "uqf", version, about = "Continued fractions, indecomposables and universal forms over Q(√D)")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Interval precision for printed embeddings.
    #[arg(long, env = "UQF_PRECISION_BITS", default_value_t = 128, global = true, hide = true)]
    precision_bits: u32,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Clone, Copy)]
struct FieldArg {
    #[arg(long = "d", value_name = "D", allow_negative_numbers = true)]
    d: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Continued fraction of ω, the units and the structural checks.
    Cf(FieldArg),
    /// The indecomposable window, M_D, M* and the arity lower bounds.
    Indec {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value = "1/100", value_parser = parse_ratio)]
        eps: Ratio<i64>,
    },
    /// Build the 8·M_D-variable form and verify it at small trace.
    Form {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 10)]
        verify_trace: i64,
    },
    /// Norm polynomials along semi-convergents and their power-free values.
    Sieve(FieldArg),
    /// L-values, L(D), the main term and the sum over it.
    Lvals {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 100_000)]
        cutoff: u64,
    },
    /// One row per squarefree D in a range, as CSV.
    Survey {
        #[arg(long, value_name = "A:B", value_parser = parse_range)]
        range: (i64, i64),
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = 100_000)]
        cutoff: u64,
        #[arg(long, default_value = "1/100", value_parser = parse_ratio)]
        eps: Ratio<i64>,
    },
}

fn parse_ratio(s: &str) -> Result<Ratio<i64>, String> {
    s.parse::<Ratio<i64>>().map_err(|e| format!("expected P/Q: {e}"))
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(':').ok_or("expected A:B")?;
    let a: i64 = a.trim().parse().map_err(|e| format!("bad start: {e}"))?;
    let b: i64 = b.trim().parse().map_err(|e| format!("bad end: {e}"))?;
    if a > b {
        return Err(format!("empty range {a}:{b}"));
    }
    Ok((a, b))
}

fn run(cli: Cli) -> Result<(), CliError> {
    if cli.precision_bits < 8 {
        return Err(CliError::BadInput(format!("UQF_PRECISION_BITS = {} is below 8", cli.precision_bits)));
    }
    let out = commands::Output { json: cli.json };
    match cli.cmd {
        Command::Cf(f) => commands::cf(out, f.d, cli.precision_bits),
        Command::Indec { field, eps } => commands::indec(out, field.d, eps),
        Command::Form { field, verify_trace } => commands::form(out, field.d, verify_trace),
        Command::Sieve(f) => commands::sieve(out, f.d),
        Command::Lvals { field, cutoff } => commands::lvals(out, field.d, cutoff),
        Command::Survey { range, jobs, csv, cutoff, eps } => {
            survey::run(out, survey::SurveyConfig { range, jobs, cutoff, eps }, csv.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
