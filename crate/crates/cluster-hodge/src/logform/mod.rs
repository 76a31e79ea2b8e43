//! Logarithmic differential forms with exact rational arithmetic.
//!
//! A [`LogForm`] is a finite sum of terms `c * x^e * dlog x_{S}` over a
//! fixed ordered list of generators: `e` is a Laurent exponent vector, `S`
//! a strictly increasing set of generator indices wedged together, and `c`
//! a rational coefficient. Wedging, monomial changes of variables
//! ([`MonomialMap`], [`pullback`]), and the Bezout coordinate change that
//! splits a rank-one lattice map ([`bezout_change`]) are all exact.
//!
//! [`bases`] builds the explicit form bases attached to each smooth
//! classification, keyed by cohomological degree and weight; their
//! cardinalities match the mixed Hodge number tables entry by entry.

mod bases;
mod form;
mod map;

pub use bases::{
    basis_2d, basis_for, basis_one_mutable, basis_surface_times_torus, basis_torus,
    basis_two_mutable, DeligneBasis, TwoMutableBasisVariant,
};
pub use form::{forms_independent, rational_rank, LogForm};
pub use map::{bezout_change, pullback, BezoutChange, MonomialMap};

use thiserror::Error;

/// Errors from building or combining log forms and monomial maps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    /// Binary operations require both forms to share one generator list.
    #[error("forms use different generator lists: [{left}] vs [{right}]")]
    GeneratorMismatch { left: String, right: String },
    /// An exponent vector must have one entry per generator.
    #[error("exponent vector has length {found}, expected {expected}")]
    ExponentLength { expected: usize, found: usize },
    /// A wedge index must address an existing generator.
    #[error("wedge index {index} out of range for {generators} generators")]
    WedgeIndexOutOfRange { index: usize, generators: usize },
    /// Wedge index sets are stored sorted without repeats.
    #[error("wedge indices must be strictly increasing, got {0:?}")]
    WedgeIndicesUnsorted(Vec<usize>),
    /// A serialized coefficient failed to parse as a rational.
    #[error("coefficient {0:?} is not a rational number")]
    BadCoefficient(String),
    /// A monomial map's row shapes disagree with its generator lists.
    #[error("malformed monomial map: {0}")]
    MalformedMap(String),
    /// Bezout coordinate changes need two positive weights.
    #[error("weights must be positive, got ({a}, {b})")]
    NonPositiveWeights { a: i64, b: i64 },
    /// A basis parameter lies outside the case's domain.
    #[error("basis parameter {name} = {value} rejected: {why}")]
    BadBasisParameter {
        name: &'static str,
        value: i64,
        why: &'static str,
    },
    /// The classification has no closed-form log-form basis.
    #[error("no log-form basis for {case}: {why}")]
    BasisUnavailable { case: String, why: String },
    /// Exponent arithmetic left the i64 range.
    #[error("exponent arithmetic overflowed")]
    ExponentOverflow,
}
