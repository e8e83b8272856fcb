use thiserror::Error;

use crate::hypergraph::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid hypergraph: {0}")]
    Invalid(ValidationReport),

    #[error("edge `{edge}` has {size} incidences, expected exactly 2")]
    NotBidirected { edge: String, size: usize },

    #[error("incidences {tail} and {head} do not lie on a common edge")]
    ForeignIncidences { tail: usize, head: usize },

    #[error("weak walk breaks at step {step}: head does not match the next tail")]
    NotConcatenable { step: usize },

    #[error("step assigned to vertex `{vertex}` does not start there")]
    MisplacedStep { vertex: String },

    #[error("expected {expected} steps, got {actual}")]
    StepCount { expected: usize, actual: usize },

    #[error("head map is not a bijection onto the kept columns")]
    NotBijective,

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("struck {rows} rows but {cols} columns")]
    SizeMismatch { rows: usize, cols: usize },

    #[error("dimension {0} is too large for this operation")]
    TooLarge(usize),

    #[error("the step at `{0}` is already a backstep")]
    AlreadyBackstep(String),

    #[error("the step at `{0}` is not a backstep")]
    NotBackstep(String),

    #[error("the component containing `{0}` has no adjacency")]
    AdjacencyFree(String),

    #[error("cycle {0} does not belong to this activation class")]
    UnknownCycle(usize),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("exactly one edge section (`edges` or `signed_edges`) must be present")]
    EdgeSection,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("edge `{0}` is not positive; an ordinary graph is required")]
    SignedInput(String),
}
