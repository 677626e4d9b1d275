//! `zknot`: analysis, surgery and knotting of z-oriented surface complexes.
//!
//! Exit status is 0 on success, 1 when a domain operation is impossible on
//! valid input, and 2 for malformed input or bad arguments.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "zknot",
    version,
    about = "Zigzags, z-monodromy and z-knotting of surface complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
pub struct Output {
    /// Print a key-sorted JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print a Graphviz rendering of the type-II subgraph.
    #[arg(long, global = true, conflicts_with = "json")]
    pub dot: bool,
}

#[derive(Args, Clone)]
pub struct Input {
    /// Complex file, or `-` for stdin.
    pub file: String,
    /// z-orientation as a bit string, one bit per zigzag pair.
    #[arg(long)]
    pub tau: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Counts, Euler characteristic, orientability and z-homogeneous orientations.
    Info {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// List the zigzags with their orientation flags and edge typing.
    Zigzags {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Special pairs with their monodromy and class.
    Pairs {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Generate a bipyramid or a gamma gadget.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Write the complex here instead of stdout.
        #[arg(long, short, global = true)]
        output: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Connected sum of two complexes along special pairs.
    Sum {
        a: String,
        /// Pair of A as `v1,v2,v3`.
        pair_a: String,
        b: String,
        /// Pair of B as `v1,v2,v3`.
        pair_b: String,
        /// Glue with the swapping homeomorphism.
        #[arg(long)]
        swap: bool,
        #[arg(long = "tau-a")]
        tau_a: Option<String>,
        #[arg(long = "tau-b")]
        tau_b: Option<String>,
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Glue gadgets until a single zigzag remains.
    Knot {
        #[command(flatten)]
        input: Input,
        /// Write the knotting trace as JSON here.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// The classification table of S4.
    S4table {
        /// Verify the class table; exit 1 on any mismatch.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
    },
    /// The gadget catalog used by `knot`.
    Catalog {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Clone)]
pub enum GenKind {
    /// Bipyramid over an n-gon.
    Bipyramid { n: usize },
    /// The gadget built from four directed paths of the given lengths.
    Gamma {
        p1: usize,
        p2: usize,
        p3: usize,
        p4: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Info { input, out } => commands::info(&input, &out),
        Command::Zigzags { input, out } => commands::zigzags(&input, &out),
        Command::Pairs { input, out } => commands::pairs(&input, &out),
        Command::Gen { kind, output, out } => commands::gen(&kind, output.as_deref(), &out),
        Command::Sum {
            a,
            pair_a,
            b,
            pair_b,
            swap,
            tau_a,
            tau_b,
            output,
            out,
        } => {
            let a = Input {
                file: a,
                tau: tau_a,
            };
            let b = Input {
                file: b,
                tau: tau_b,
            };
            commands::sum(&a, &pair_a, &b, &pair_b, swap, output.as_deref(), &out)
        }
        Command::Knot {
            input,
            trace,
            output,
            out,
        } => commands::knot(&input, trace.as_deref(), output.as_deref(), &out),
        Command::S4table { check, json } => commands::s4table(check, json),
        Command::Catalog { json } => commands::catalog(json),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
