use thiserror::Error;

use crate::cartan::Root;
use crate::tableaux::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank must be ≥ 4 (got {0})")]
    InvalidRank(usize),

    #[error("index {i} out of range 1..={n}")]
    IndexOutOfRange { i: usize, n: usize },

    #[error("{root} is not a positive root of D_{n}")]
    InvalidRoot { root: Root, n: usize },

    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("not a marginally large tableau: {}", format_violations(.0))]
    InvalidTableau(Vec<Violation>),

    #[error("invalid Kostant partition: {0}")]
    InvalidPartition(String),

    #[error("rank mismatch: D_{left} vs D_{right}")]
    RankMismatch { left: usize, right: usize },

    #[error("cannot parse operator string: {0}")]
    OperatorParse(String),

    #[error("{what} limit exceeded: {value} > {limit}")]
    LimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("distinct elements share the key {0}")]
    KeyCollision(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
