//! Seeds, mutation, freezing, quiver graphs, and decomposition trees.

mod finite;
mod graph;
mod louise;
mod matrix;
mod presentation;
mod seed;

pub use finite::{finite_type_check, FiniteTypeVerdict};
pub use graph::{Edge, QuiverGraph};
pub use louise::{louise_decompose, louise_decompose_with, LouiseTree};
pub use matrix::ExtendedExchangeMatrix;
pub use presentation::{isolated_presentation, ExchangeEquation, VarietyPresentation};
pub use seed::{seed_one_mutable, seed_three_mutable, seed_torus, seed_two_mutable, Seed};

use thiserror::Error;

/// Errors arising from seed construction and quiver-level operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuiverError {
    #[error("matrix must have {expected} rows of length {cols}, found row {row} of length {found}")]
    RaggedMatrix {
        expected: usize,
        cols: usize,
        row: usize,
        found: usize,
    },
    #[error("matrix has {rows} rows but n={n}, m={m} requires {expected}")]
    RowCountMismatch { rows: usize, n: usize, m: usize, expected: usize },
    #[error("principal part is not skew-symmetric at ({i},{j})")]
    NotSkewSymmetric { i: usize, j: usize },
    #[error("mutation index {k} out of range (n={n})")]
    MutationIndexOutOfRange { k: usize, n: usize },
    #[error("freeze index {k} out of range (n={n})")]
    FreezeIndexOutOfRange { k: usize, n: usize },
    #[error("expected {expected} labels, found {found}")]
    LabelCountMismatch { expected: usize, found: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("seed has {dim} variables; supported dimensions are 2 and 3")]
    UnsupportedDimension { dim: usize },
    #[error("matrix entry at ({i},{j}) does not fit in 64 bits")]
    WeightOverflow { i: usize, j: usize },
    #[error("seed is not isolated: mutable vertices {i} and {j} are joined by an edge")]
    NotIsolated { i: usize, j: usize },
    #[error("no separating edge at a node with mutable edges; the seed is not Louise")]
    NotLouise,
    #[error("finite-type search requires 3 mutable and 0 frozen vertices, found n={n}, m={m}")]
    FiniteTypeDomain { n: usize, m: usize },
    #[error("finite-type search did not terminate within {0} mutations")]
    FiniteTypeBudget(usize),
    #[error("invalid quiver JSON: {0}")]
    Json(String),
}
