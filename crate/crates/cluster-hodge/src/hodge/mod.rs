//! Mixed Hodge number tables and the operations that produce them.

mod builders;
mod classify;
mod epoly;
mod kunneth;
mod mv;
mod table;

pub use builders::{
    table_2d, table_one_mutable, table_singular, table_three_mutable, table_torus,
    table_two_mutable, SingularVariant,
};
pub use classify::{classify, table_for, Classification, Classified};
pub use epoly::e_polynomial;
pub use kunneth::kunneth;
pub use mv::{assemble_table, mayer_vietoris, RestrictionRankData};
pub use table::{is_mixed_tate, numerical_chl, MixedHodgeTable, TableVariant};

use thiserror::Error;

use crate::quiver::QuiverError;

/// Errors arising from table construction and classification.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum HodgeError {
    #[error("weight {name} must be at least {min}, found {value}")]
    InvalidWeight {
        name: &'static str,
        min: i64,
        value: i64,
    },
    #[error("entry ({k},{p}) lies outside the admissible range for dimension {dim}")]
    EntryOutOfRange { k: usize, p: usize, dim: usize },
    #[error("entry ({k},{p}) would be negative ({h})")]
    NegativeEntry { k: usize, p: usize, h: i64 },
    #[error("tables have different dimensions ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },
    #[error("restriction rank at ({k},{p}) is {rank}, exceeding the bound {bound}")]
    RankInconsistent {
        k: usize,
        p: usize,
        rank: i64,
        bound: i64,
    },
    #[error("table is not smooth; E-polynomial point counts need a smooth table")]
    NotSmooth,
    #[error("no table is available for case {case}: {reason}")]
    TableUnavailable { case: String, reason: String },
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}
