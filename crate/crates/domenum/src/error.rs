use thiserror::Error;

use crate::classify::SplitObstruction;

/// Crate-wide error type. Every fallible operation reports one of these;
/// the CLI maps them onto exit codes (parse errors → 1, everything else → 2,
/// check mismatches → 3).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (universe has {bound} vertices)")]
    InvalidVertex { vertex: usize, bound: usize },

    #[error("universe size {got} does not match expected {expected}")]
    UniverseMismatch { got: usize, expected: usize },

    #[error("loop edge at vertex {vertex} is not allowed")]
    LoopEdge { vertex: usize },

    #[error("edge {{{u}, {v}}} is already present")]
    EdgeExists { u: usize, v: usize },

    #[error("hyperedge {index} is empty")]
    EmptyHyperedge { index: usize },

    #[error("no transversal exists: hyperedge {index} is empty")]
    NoTransversal { index: usize },

    #[error("vertex {vertex} is isolated: no total dominating set exists")]
    NoTotalDominatingSet { vertex: usize },

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not split{}", match .obstruction {
        Some(o) => format!(" (witness: {o})"),
        None => String::new(),
    })]
    NotSplit {
        obstruction: Option<SplitObstruction>,
    },

    #[error("graph is not chordal (chordless cycle {0:?})")]
    NotChordal(Vec<usize>),

    #[error("graph has an induced six-vertex path {0:?}")]
    InducedP6(Vec<usize>),

    #[error("invalid split partition: {0}")]
    InvalidPartition(String),

    #[error("hypergraph has no non-empty hyperedge")]
    DegenerateHypergraph,

    #[error("oracle refused: {n} vertices exceeds the cap of {cap}")]
    OracleCapExceeded { n: usize, cap: usize },

    #[error("reduction contract violated: {0}")]
    ContractViolation(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Shorthand used by the parsers.
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
