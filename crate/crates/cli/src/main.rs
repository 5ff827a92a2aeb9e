//! `twohilb`: reports, tangle evaluation, transform checks and the
//! acceptance suite from the command line.
//!
//! Exit status is 0 when every check passes, 1 when a check fails (the
//! failure list goes to stderr as JSON) and 2 on input errors.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};

use output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "twohilb",
    version,
    about = "Representation categories, tangles and categorified transforms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Catalog group, e.g. S3, Q8, Z4, Z2xZ2, SuperHilb, SuperQ8.
    #[arg(long, global = true, default_value = "S3")]
    pub group: String,

    /// Object as a sum of irrep labels, e.g. `std`, `triv+sgn`, `2*std`.
    #[arg(long, global = true)]
    pub object: Option<String>,

    /// Ambient dimension for tangles (2, 3 or 4).
    #[arg(long = "dim", global = true, default_value_t = 3, value_parser = clap::value_parser!(u8).range(2..=4))]
    pub ambient: u8,

    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,

    #[arg(long, global = true, default_value_t = twohilb::suite::DEFAULT_SEED)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Directory of extra group tables `<name>.json`.
    #[arg(long, global = true, env = "TWOHILB_CATALOG", hide_env_values = true)]
    pub catalog: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Irreducible unitary representations with labels and characters.
    Irreps,
    /// Tensor decomposition table of the irreps.
    Fusion,
    /// Dimensions, parities, self-duality signs and balancing phases.
    Report,
    /// Tangle evaluation and isotopy checks.
    Tangle {
        #[command(subcommand)]
        action: TangleCommand,
    },
    /// Fourier transform to graded Hilbert spaces over the dual group.
    Fourier,
    /// Group reconstruction from the forgetful functor.
    Tannaka,
    /// Runs the acceptance criteria.
    Suite {
        /// Run only these criterion ids.
        #[arg(long = "only", value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Debug, Subcommand)]
pub enum TangleCommand {
    /// Evaluates a tangle expression on the chosen object.
    Eval { expr: String },
    /// Checks the standard isotopy moves.
    Moves {
        /// Rescale the well-balanced adjunction by `√λ` to exhibit framing failures.
        #[arg(long)]
        mis_scale: Option<f64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !(cli.tol > 0.0) {
        eprintln!("error: --tol must be positive");
        return ExitCode::from(2);
    }
    let report = match commands::run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let rendered = report.render(cli.format);
    let written = match &cli.out {
        Some(path) => {
            std::fs::write(path, &rendered).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{rendered}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if report.failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("{}", serde_json::json!({ "failures": report.failures }));
        ExitCode::from(1)
    }
}
