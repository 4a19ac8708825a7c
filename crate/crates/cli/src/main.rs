use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use semispace::{Error, Result};
use semispace_cli::*;

#[derive(Parser)]
#[command(name = "semispace", version, about = "Semi-inverted linear spaces: matroids, complexes, degrees and real points")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Problem file (JSON).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Write a drawing of the slice (realpoints, 2-dimensional slices only).
    #[arg(long, global = true)]
    svg: Option<PathBuf>,
    /// Gradient tolerance for the Newton solver.
    #[arg(long, global = true, default_value_t = semispace::arrangement::DEFAULT_TOL)]
    tol: f64,
    /// Number of random weight vectors for verify-ugb.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    /// Seed for sampled weights and offsets; overrides the seed in the input.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Circuits, circuit forms, loops and coloops.
    Matroid,
    /// I-broken circuits and the semi-broken circuit complex.
    Complex,
    /// Degree by facets, by deletion-contraction and by the uniform formula.
    Degree,
    /// Achievable coordinate supports.
    Supports,
    /// Check that the circuit polynomials are a Groebner basis for random weights.
    VerifyUgb,
    /// Regions of the slice arrangement and their recession cones.
    Regions,
    /// One real point of the sign-twisted variety per qualifying region.
    Realpoints,
    /// Every stage, checking that degree, qualifying regions and points agree.
    Report,
}

fn run(cli: &Cli) -> Result<String> {
    let path = cli.input.as_ref().ok_or_else(|| Error::Malformed("--input is required".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("cannot read {}: {e}", path.display())))?;
    let input = parse_input(&text)?;
    if !(cli.tol > 0.0) {
        return Err(Error::Malformed("--tol must be positive".into()));
    }
    let opts = Options { seed: cli.seed, tol: cli.tol, trials: cli.trials };
    Ok(match cli.command {
        Command::Matroid => to_json(&cmd_matroid(&input, &opts)?),
        Command::Complex => to_json(&cmd_complex(&input, &opts)?),
        Command::Degree => to_json(&cmd_degree(&input, &opts)?),
        Command::Supports => to_json(&cmd_supports(&input, &opts)?),
        Command::VerifyUgb => {
            let report = cmd_verify_ugb(&input, &opts)?;
            if report.failures() > 0 {
                eprintln!("{} of {} trials failed", report.failures(), report.trials.len());
                print!("{}", to_json(&report));
                return Err(Error::Inconsistent("circuit polynomials are not a Groebner basis".into()));
            }
            to_json(&report)
        }
        Command::Regions => to_json(&cmd_regions(&input, &opts)?),
        Command::Realpoints => {
            let (census, svg) = cmd_realpoints(&input, &opts, cli.svg.is_some())?;
            if let (Some(path), Some(svg)) = (&cli.svg, svg) {
                std::fs::write(path, svg)
                    .map_err(|e| Error::Malformed(format!("cannot write {}: {e}", path.display())))?;
            }
            to_json(&census)
        }
        Command::Report => to_json(&cmd_report(&input, &opts)?),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
