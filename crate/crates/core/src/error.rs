use std::io;

use thiserror::Error;

/// Errors produced by graph loading and the coefficient computations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: expected 2 tokens, found {found}")]
    Parse { line: usize, found: usize },

    #[error("node {node} out of range (graph has {n} nodes)")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("moments are undefined on a graph with no nodes")]
    EmptyGraph,

    #[error("expectation formulas need at least one edge")]
    NoEdges,

    #[error("double-edge swaps need at least 2 edges, graph has {0}")]
    TooFewEdges(usize),

    #[error("swap chain stalled: {accepted} of {target} swaps accepted after {attempts} attempts")]
    SwapStall { accepted: u64, target: u64, attempts: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
