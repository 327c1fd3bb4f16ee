//! `dkh`: doubled Khovanov homology of links in thickened surfaces.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dkh_core::report::Format;
use dkh_core::{Assumption, Variant};

#[derive(Parser, Debug)]
#[command(name = "dkh", version, about = "Doubled Khovanov homology of links in thickened surfaces")]
#[command(after_help = "Inputs are diagram files or `corpus:NAME`. Set DKH_THREADS to size the worker pool.")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Output format: text, json or tsv.
    #[arg(long, short = 'f', default_value = "text")]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Homology tables for one class or all of them.
    Compute {
        input: String,
        /// dkh (plain) or trh (perturbed, filtered bidegrees).
        #[arg(long, default_value = "dkh")]
        variant: Variant,
        /// Comma-separated bits of length 2g, or `all` for every nonzero class.
        #[arg(long)]
        gamma: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Decide whether the link is totally nontrivial.
    Tnt {
        input: String,
        /// Run the homology even for classes that pair to zero with every arc.
        #[arg(long)]
        no_prefilter: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Rank of the span of the component classes.
    Rank {
        input: String,
        #[command(flatten)]
        out: Output,
    },
    /// Classify a concordance from the first diagram to the second.
    Report {
        source: String,
        target: String,
        /// Facts about the concordance taken on trust, e.g. not_pseudostrict.
        #[arg(long = "assume")]
        assume: Vec<Assumption>,
        #[command(flatten)]
        out: Output,
    },
    /// List or apply Reidemeister moves.
    Moves {
        #[command(subcommand)]
        action: MovesAction,
    },
    /// The bundled example diagrams.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Print the cube of smoothings, and optionally the differential.
    DumpCube {
        input: String,
        /// Comma-separated bits of length 2g. Defaults to the zero class.
        #[arg(long)]
        gamma: Option<String>,
        /// Also print the differential with exact rational entries.
        #[arg(long)]
        matrix: bool,
        #[arg(long, default_value = "dkh")]
        variant: Variant,
    },
}

#[derive(Subcommand, Debug)]
pub enum MovesAction {
    /// Every move site, one per line.
    List {
        input: String,
        /// Skip moves that would exceed this many crossings.
        #[arg(long, default_value_t = dkh_core::smoothing::MAX_CROSSINGS)]
        max_crossings: usize,
    },
    /// Apply moves in order and print the resulting diagram file.
    Apply {
        input: String,
        /// Moves as printed by `moves list`, e.g. r1+:0:pos:over or r3:4.
        #[arg(required = true)]
        moves: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CorpusAction {
    /// Names and descriptions.
    List,
    /// Print the diagram file for an entry.
    Get { name: String },
    /// Summarize an entry.
    Show { name: String },
}

fn init_threads() -> Result<(), commands::CliError> {
    let Some(v) = std::env::var_os("DKH_THREADS") else { return Ok(()) };
    let n: usize = v
        .to_str()
        .and_then(|s| s.parse().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| commands::CliError::Usage(format!("DKH_THREADS must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| commands::CliError::Domain(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match init_threads().and_then(|()| commands::run(cli.command)) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("dkh: {e}");
            ExitCode::from(e.code())
        }
    }
}
