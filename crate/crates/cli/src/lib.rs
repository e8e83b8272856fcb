//! Command-line front end: argument parsing, command dispatch and
//! deterministic text/CSV/DOT output.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hyperkirchhoff_core::format::parse_graph;
use hyperkirchhoff_core::OrientedHypergraph;
use thiserror::Error;

mod commands;
pub mod output;
pub mod verify;

pub use verify::{verify, Check, Report, Status};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input {
        path: PathBuf,
        source: hyperkirchhoff_core::Error,
    },
    #[error(transparent)]
    Core(#[from] hyperkirchhoff_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    Incidence,
    Adjacency,
    Laplacian,
    Degree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MinorMatrix {
    Laplacian,
    Adjacency,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MinorOp {
    Det,
    Perm,
}

#[derive(Debug, Parser)]
#[command(
    name = "hyperkirchhoff",
    version,
    about = "Contributor sums and matrix-tree identities for oriented hypergraphs"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Largest vertex count for which contributors are enumerated.
    #[arg(long, global = true, default_value_t = 8)]
    pub max_exhaustive: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Parse and validate a graph file.
    Validate { file: PathBuf },
    /// Print one of the graph's matrices.
    Matrix {
        #[arg(value_enum)]
        kind: MatrixKind,
        file: PathBuf,
    },
    /// perm(L): contributor sum and matrix value.
    PermL { file: PathBuf },
    /// det(L): contributor sum and matrix value.
    DetL { file: PathBuf },
    /// perm(A): strong-contributor sum and matrix value.
    PermA { file: PathBuf },
    /// det(A): strong-contributor sum and matrix value.
    DetA { file: PathBuf },
    /// Permanent or determinant of a minor.
    Minor {
        /// Struck rows, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "")]
        rows: Vec<String>,
        /// Struck columns, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "")]
        cols: Vec<String>,
        #[arg(long, value_enum, default_value_t = MinorMatrix::Laplacian)]
        matrix: MinorMatrix,
        #[arg(long, value_enum, default_value_t = MinorOp::Det)]
        op: MinorOp,
        file: PathBuf,
    },
    /// Contributor listings.
    #[command(subcommand)]
    Contributors(ContributorsCommand),
    /// Activation classes of a bidirected graph.
    #[command(subcommand)]
    Activation(ActivationCommand),
    /// Adjacency completion.
    Complete {
        /// Print the completed graph as a graph file.
        #[arg(long)]
        emit: bool,
        file: PathBuf,
    },
    /// Cofactor, tree-ideal and brute-force spanning-tree counts.
    Trees {
        #[arg(long)]
        u: String,
        #[arg(long)]
        w: String,
        file: PathBuf,
    },
    /// All-minors check through the completion's universal cut.
    ChaikenCheck {
        #[arg(long, value_delimiter = ',', default_value = "")]
        rows: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "")]
        cols: Vec<String>,
        file: PathBuf,
    },
    /// Run every applicable identity check.
    Verify { file: PathBuf },
}

#[derive(Debug, Clone, Subcommand)]
pub enum ContributorsCommand {
    /// One line per contributor.
    List { file: PathBuf },
}

#[derive(Debug, Clone, Subcommand)]
pub enum ActivationCommand {
    /// One line per class.
    List { file: PathBuf },
    /// The boolean lattice of one class.
    Lattice {
        #[arg(long)]
        class: usize,
        #[arg(long)]
        dot: bool,
        file: PathBuf,
    },
    /// The (u;w)-cut of every class, or of one class.
    Cut {
        #[arg(long)]
        u: String,
        #[arg(long)]
        w: String,
        #[arg(long)]
        class: Option<usize>,
        #[arg(long)]
        dot: bool,
        file: PathBuf,
    },
}

impl Command {
    pub fn input(&self) -> &Path {
        match self {
            Command::Validate { file }
            | Command::Matrix { file, .. }
            | Command::PermL { file }
            | Command::DetL { file }
            | Command::PermA { file }
            | Command::DetA { file }
            | Command::Minor { file, .. }
            | Command::Contributors(ContributorsCommand::List { file })
            | Command::Activation(ActivationCommand::List { file })
            | Command::Activation(ActivationCommand::Lattice { file, .. })
            | Command::Activation(ActivationCommand::Cut { file, .. })
            | Command::Complete { file, .. }
            | Command::Trees { file, .. }
            | Command::ChaikenCheck { file, .. }
            | Command::Verify { file } => file,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub input: PathBuf,
    pub command: Command,
    pub format: Format,
    pub seed: u64,
    pub max_exhaustive: usize,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            input: command.input().to_path_buf(),
            command,
            format: Format::Text,
            seed: 0,
            max_exhaustive: 8,
        }
    }
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        RunConfig {
            input: cli.command.input().to_path_buf(),
            command: cli.command,
            format: cli.format,
            seed: cli.seed,
            max_exhaustive: cli.max_exhaustive,
        }
    }
}

/// Rendered output and whether every check it reports passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub success: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            success: true,
        }
    }
}

pub fn read_input(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads and validates a graph file. Vertex order is file order.
pub fn parse_graph_file(path: &Path) -> Result<OrientedHypergraph> {
    parse_graph(&read_input(path)?).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

pub fn run(config: &RunConfig) -> Result<Outcome> {
    commands::dispatch(config)
}
