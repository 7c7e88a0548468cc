//! `vdw`: dispersion energies of uniformly accelerating atom pairs.

mod commands;
mod config;
mod output;

use std::path::Path;

use clap::{Args, Parser, Subcommand};
use vdw_core::energy::FarZoneForm;

use commands::{CmdError, CmdOutcome};
use config::{CommonArgs, RunConfig};

#[derive(Parser)]
#[command(
    name = "vdw",
    version,
    about = "Dispersion energy of two uniformly accelerating ground-state atoms"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Rest-atom dispersion energy over the R grid
    Rest(CommonArgs),
    /// Accelerated energy with its a^2 t and a^2 t^2 corrections
    Accel(CommonArgs),
    /// Near-zone asymptotic form (separation small against resonance wavelengths)
    Near(CommonArgs),
    /// Far-zone form: closed coefficients or regulated integrals
    Far(FarArgs),
    /// Coefficient comparison between the two integral representations
    Consistency(CommonArgs),
    /// Time-averaged potential tensor at one (k, R, a, t) point
    TensorDump(TensorArgs),
}

#[derive(Args)]
struct FarArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Evaluation strategy: closed or integral
    #[arg(long, default_value = "closed")]
    form: String,
}

#[derive(Args)]
struct TensorArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Mode wavenumber
    #[arg(long)]
    k: f64,
    /// Sample count for the numeric time average
    #[arg(long)]
    samples: Option<usize>,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {}", err.message());
            std::process::exit(err.exit_code());
        }
    }
}

fn run(cli: Cli) -> Result<i32, CmdError> {
    let (cfg, outcome) = match cli.verb {
        Verb::Rest(args) => {
            let cfg = resolve(&args, RunConfig::defaults())?;
            let o = commands::cmd_rest(&cfg)?;
            (cfg, o)
        }
        Verb::Accel(args) => {
            let cfg = resolve(&args, RunConfig::defaults())?;
            let o = commands::cmd_accel(&cfg)?;
            (cfg, o)
        }
        Verb::Near(args) => {
            let cfg = resolve(&args, RunConfig::defaults())?;
            let o = commands::cmd_near(&cfg)?;
            (cfg, o)
        }
        Verb::Far(args) => {
            let cfg = resolve(&args.common, RunConfig::defaults())?;
            let form = parse_form(&args.form)?;
            let o = commands::cmd_far(&cfg, form)?;
            (cfg, o)
        }
        Verb::Consistency(args) => {
            let cfg = resolve(&args, RunConfig::consistency_defaults())?;
            let o = commands::cmd_consistency(&cfg)?;
            (cfg, o)
        }
        Verb::TensorDump(args) => {
            let cfg = resolve(&args.common, RunConfig::defaults())?;
            let o = commands::cmd_tensor_dump(&cfg, args.k, args.samples)?;
            (cfg, o)
        }
    };
    let CmdOutcome { text, exit } = outcome;
    write_output(cfg.out.as_deref(), &text)
        .map_err(|e| CmdError::Compute(format!("cannot write output: {e}")))?;
    Ok(exit)
}

fn resolve(args: &CommonArgs, base: RunConfig) -> Result<RunConfig, CmdError> {
    RunConfig::resolve(args, base).map_err(CmdError::Config)
}

fn parse_form(value: &str) -> Result<FarZoneForm, CmdError> {
    match value.to_ascii_lowercase().as_str() {
        "closed" => Ok(FarZoneForm::Closed),
        "integral" => Ok(FarZoneForm::Integral),
        other => Err(CmdError::Config(format!(
            "unknown far-zone form '{other}'; use closed or integral"
        ))),
    }
}

fn write_output(path: Option<&Path>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())
        }
    }
}
