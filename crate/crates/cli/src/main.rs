//! `bellrec`: exact recurrence sequences, INVERT transforms, convolutions and
//! power sums from the command line.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "bellrec", version, about = "Exact linear recurrence sequences via partial Bell polynomials")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a recurrence a_n = c_1 a_{n-1} + ... + c_d a_{n-d}.
    Seq(SeqArgs),
    /// Express a recurrence in the shifted INVERT basis.
    Decompose(DecomposeArgs),
    /// r-fold self-convolution of the INVERT sequence of the coefficients.
    Conv(ConvArgs),
    /// Power sums from roots or elementary symmetric values.
    Powersum(PowersumArgs),
    /// Randomized identity checks.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    /// Comma-separated coefficients c_1..c_d (integers or p/q).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "family")]
    pub coeffs: Option<String>,
    /// Comma-separated initial values a_0..a_{d-1}.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "family")]
    pub init: Option<String>,
    /// Built-in polynomial family instead of explicit coefficients.
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    /// Last index to print.
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    ChebyshevT,
    ChebyshevU,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: String,
    #[arg(long, allow_hyphen_values = true)]
    pub init: String,
}

#[derive(Debug, Args)]
pub struct ConvArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: String,
    /// Number of factors.
    #[arg(long)]
    pub r: u32,
    /// Shift applied to every factor.
    #[arg(long, default_value_t = 0)]
    pub delta: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = ConvMethod::Direct)]
    pub method: ConvMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConvMethod {
    Direct,
    Bell,
    Recurrence,
    All,
}

#[derive(Debug, Args)]
pub struct PowersumArgs {
    /// Comma-separated rational roots x_1..x_d.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "elems")]
    pub roots: Option<String>,
    /// Comma-separated elementary symmetric values e_1..e_d.
    #[arg(long, allow_hyphen_values = true)]
    pub elems: Option<String>,
    /// Number of variables; must match the length of --elems.
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 25)]
    pub trials: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let result = match &cli.command {
        Command::Seq(args) => commands::seq(args),
        Command::Decompose(args) => commands::decompose_recurrence(args),
        Command::Conv(args) => commands::conv(args),
        Command::Powersum(args) => commands::powersum(args),
        Command::Verify(args) => commands::verify(args),
    };

    let (record, failure) = match result {
        Ok(outcome) => (Some(outcome.record), outcome.failure),
        Err(e) => (None, Some(e)),
    };
    if let Some(record) = record {
        let text = match cli.format {
            Format::Plain => record.to_plain(),
            Format::Json => record.to_json(),
        };
        print!("{text}");
    }
    match failure {
        None => ExitCode::SUCCESS,
        Some(e) => {
            eprintln!("bellrec: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
