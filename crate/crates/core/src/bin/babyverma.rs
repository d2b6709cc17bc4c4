use babyverma::report::{run_suite, run_tensor_filtration, Options, Report};
use babyverma::Error;
use clap::{Args, Parser, Subcommand};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "babyverma", version, about = "Certified computations with baby Verma modules in characteristic p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify the filtration of a tensor product of two baby Verma modules.
    TensorFilt(Flags),
    /// Run a named scenario: example-2-3, pyramid-1224, mindim-12-of-3, thm317-N2.
    Suite {
        name: String,
        #[command(flatten)]
        flags: Flags,
    },
}

#[derive(Args)]
struct Flags {
    /// glN or slN.
    #[arg(long)]
    alg: Option<String>,
    #[arg(long)]
    p: Option<u64>,
    /// zero, regular-nilpotent, pyramid:<rows> or e21=1,... (1-based matrix units).
    #[arg(long)]
    chi: Option<String>,
    #[arg(long)]
    chi2: Option<String>,
    /// Toral values, or N ε-coordinates; rationals as a/b.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    /// Pyramid rows, shortest first, e.g. 1,2.
    #[arg(long)]
    partition: Option<String>,
    /// Truncation depth for characteristic-zero windows.
    #[arg(long)]
    depth: Option<usize>,
    /// Emit the JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Seed for randomized choices.
    #[arg(long)]
    seed: Option<u64>,
}

impl Flags {
    fn options(&self) -> Options {
        Options {
            alg: self.alg.clone(),
            p: self.p,
            chi: self.chi.clone(),
            chi2: self.chi2.clone(),
            lambda: self.lambda.clone(),
            mu: self.mu.clone(),
            partition: self.partition.clone(),
            depth: self.depth,
            seed: self.seed,
        }
    }
}

fn emit(report: &Report, json: bool) -> ExitCode {
    if json {
        match report.to_json() {
            Ok(s) => println!("{s}"),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::FAILURE;
            }
        }
    } else {
        print!("{}", report.to_text());
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (outcome, json) = match &cli.command {
        Command::TensorFilt(flags) => (run_tensor_filtration(&flags.options()), flags.json),
        Command::Suite { name, flags } => (run_suite(name, &flags.options()), flags.json),
    };
    match outcome {
        Ok(report) => emit(&report, json),
        Err(e) => {
            eprintln!("error: {e}");
            let usage = matches!(
                e,
                Error::InvalidInput(_) | Error::NotInLambdaChi(_) | Error::BadModulus(_) | Error::DimensionMismatch(_)
            );
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}
