use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::Settings;

#[derive(Debug, Parser)]
#[command(
    name = "djc",
    version,
    about = "Entanglement invariants of two atom-cavity pairs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of a state read from a 16-line amplitude file
    Invariants {
        input: PathBuf,
        /// Use the amplitudes as given instead of normalizing them
        #[arg(long)]
        no_normalize: bool,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Invariants along the evolution as CSV, one row per (t, alpha)
    Evolve {
        #[command(flatten)]
        sweep: SweepArgs,
        /// CSV destination (stdout if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Heatmap of tau4 over (t, alpha), plus the CSV grid
    Surface {
        #[command(flatten)]
        sweep: SweepArgs,
        /// CSV destination (defaults to the SVG path with a .csv extension)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: PathBuf,
    },
    /// Compare closed-form states with the Fock-space evolution
    Verify {
        #[command(flatten)]
        sweep: SweepArgs,
        /// Per-point CSV destination
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// TOML file of settings; flags take precedence
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[command(flatten)]
    pub settings: Settings,
    /// Evaluate grid points on one thread
    #[arg(long)]
    pub sequential: bool,
}
