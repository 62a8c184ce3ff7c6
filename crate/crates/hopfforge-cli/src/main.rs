use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

mod commands;
mod parse;

/// Exact construction and verification of copointed Hopf algebras over D_m.
#[derive(Debug, Parser)]
#[command(name = "hopfforge", version)]
pub struct RunConfig {
    /// Accept any even m ≥ 4 instead of m = 4a ≥ 12.
    #[arg(long, global = true)]
    pub allow_small_m: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List index data J, I, L or K.
    Enumerate {
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, ignore_case = true)]
        set: IndexSet,
        #[arg(long, default_value_t = 2)]
        max_rank: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build an object and export it as JSON.
    Construct {
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = ObjectKind::Bosonization)]
        object: ObjectKind,
        #[command(flatten)]
        lifting: LiftingArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Deform the bosonization by the cocycle of some lifting data.
    Deform {
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        lifting: LiftingArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the lifting data used.
        #[arg(long)]
        lifting_out: Option<PathBuf>,
    },
    /// Run verification suites on a JSON artifact.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Compare a presented algebra with a deformation on their generators.
    Compare {
        #[arg(long)]
        presented: PathBuf,
        #[arg(long)]
        deformed: PathBuf,
    },
    /// Dimensions and parameter counts of every family up to a rank.
    ClassifyMenu {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 2)]
        max_rank: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-export an artifact in canonical form.
    Export {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
pub enum IndexSet {
    J,
    I,
    L,
    K,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjectKind {
    FunctionAlgebra,
    GroupAlgebra,
    Module,
    Nichols,
    Bosonization,
    Presented,
    Lifting,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Hopf,
    Yd,
    Nichols,
    Cocycle,
    Coradical,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
pub enum KindArg {
    A,
    B,
    C,
}

/// Lifting data, either read from a file or given by flags. With --seed the
/// parameters are drawn at random and explicit values override them.
#[derive(Debug, Clone, Default, Args)]
pub struct LiftingArgs {
    #[arg(long, value_enum, ignore_case = true)]
    pub kind: Option<KindArg>,
    #[arg(long = "I", value_name = "PAIRS")]
    pub pairs: Option<String>,
    #[arg(long = "L", value_name = "ELLS")]
    pub ells: Option<String>,
    #[arg(long, value_name = "I,K,Q=C")]
    pub zeta: Vec<String>,
    #[arg(long, value_name = "S,T=C")]
    pub mu: Vec<String>,
    #[arg(long, value_name = "S,T=C")]
    pub nu: Vec<String>,
    #[arg(long, value_name = "S,T=C")]
    pub tau: Vec<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// A liftingdata/v1 file; excludes the flags above.
    #[arg(long, conflicts_with_all = ["kind", "pairs", "ells", "zeta", "mu", "nu", "tau", "seed"])]
    pub lifting: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, files or index data.
    #[error("input error: {0}")]
    Input(String),
    /// A suite or comparison failed.
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Input(_) => 2,
        }
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("HOPFFORGE_THREADS") else { return Ok(()) };
    let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| CliError::Input(format!("HOPFFORGE_THREADS={v:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| CliError::Input(e.to_string()))
}

fn main() -> ExitCode {
    let config = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match configure_threads().and_then(|()| commands::run(&config)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
