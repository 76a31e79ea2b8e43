//! Cluster varieties of dimension at most three: classification, mixed Hodge
//! number tables, log-form bases, and point counts over prime fields.
//!
//! The crate is organised into four layers:
//!
//! * [`quiver`]: extended exchange matrices, seeds, mutation, freezing,
//!   quiver graphs, separating edges, Louise decomposition trees, and the
//!   finite-type search for rank-3 seeds.
//! * [`hodge`]: mixed Hodge number tables of Tate type, closed-form
//!   constructors for each supported case, the Kunneth and Mayer-Vietoris
//!   combinators, and numerical checks (curious hard Lefschetz, Euler
//!   characteristic, E-polynomial).
//! * [`logform`]: logarithmic differential forms with Laurent monomial
//!   coefficients, monomial changes of variables, and explicit bases
//!   realising each table entry.
//! * [`count`]: point counting over small prime fields, polynomial
//!   interpolation, and the verification harness that compares counts
//!   against E-polynomial predictions.
//!
//! The binary `cluster-hodge` exposes all of this behind a small CLI; see
//! the README for the input format and exit-code conventions.

#![forbid(unsafe_code)]

pub mod count;
pub mod hodge;
pub mod logform;
pub mod quiver;

pub use count::{
    count_isolated, count_variety, interpolate, verify_table, CountError, CountingPolynomial,
    PrimeField, VerificationReport, Verdict,
};
pub use hodge::{
    classify, e_polynomial, is_mixed_tate, kunneth, mayer_vietoris, numerical_chl, table_2d,
    table_one_mutable, table_singular, table_three_mutable, table_torus, table_two_mutable,
    Classification, Classified, HodgeError, MixedHodgeTable, RestrictionRankData, SingularVariant,
    TableVariant,
};
pub use logform::{
    basis_2d, basis_for, basis_one_mutable, basis_surface_times_torus, basis_torus,
    basis_two_mutable, bezout_change, pullback, BezoutChange, DeligneBasis, FormError, LogForm,
    MonomialMap, TwoMutableBasisVariant,
};
pub use quiver::{
    finite_type_check, isolated_presentation, louise_decompose, FiniteTypeVerdict,
    ExtendedExchangeMatrix, LouiseTree, QuiverError, QuiverGraph, Seed, VarietyPresentation,
};
