use std::fmt;

use super::builders::{
    table_2d, table_one_mutable, table_singular, table_three_mutable, table_torus,
    table_two_mutable, SingularVariant,
};
use super::kunneth::kunneth;
use super::table::MixedHodgeTable;
use super::HodgeError;
use crate::quiver::{finite_type_check, FiniteTypeVerdict, QuiverError, QuiverGraph, Seed};

/// The supported shapes of a cluster variety of dimension two or three, up
/// to permutation, mutation, and inversion of frozen directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// An algebraic torus of the given dimension.
    Torus { rank: usize },
    /// The surface x x' = y^weight + 1 (y invertible) times a torus.
    SurfaceTimesTorus { weight: i64, torus_rank: usize },
    /// One mutable vertex with two frozen weights, both nonzero:
    /// x x' = y^a z^b + 1.
    OneMutable { a: i64, b: i64 },
    /// Two mutable vertices joined with weight a >= 1; frozen weights
    /// (b, c) may vanish. Covers the all-mutable single-edge triangle via
    /// b = c = 0.
    TwoMutable { a: i64, b: i64, c: i64 },
    /// Acyclic triangle of mutable vertices with positive pair weights.
    ThreeMutableAcyclic { a: i64, b: i64, c: i64 },
    /// The singular threefold x x' = z + 1 = y y' with z invertible.
    SingularSharedFrozen,
    /// A cyclic seed that no mutation sequence makes acyclic; witness
    /// carries the triangle weights at the point of detection.
    NotFiniteType { witness: (i64, i64, i64) },
    /// Shapes the theory leaves open; `reason` says which.
    Unsupported { reason: String },
}

impl Classification {
    /// Short stable tag for serialized output.
    pub fn case_name(&self) -> &'static str {
        match self {
            Classification::Torus { .. } => "torus",
            Classification::SurfaceTimesTorus { .. } => "surface-times-torus",
            Classification::OneMutable { .. } => "one-mutable",
            Classification::TwoMutable { .. } => "two-mutable",
            Classification::ThreeMutableAcyclic { .. } => "three-mutable-acyclic",
            Classification::SingularSharedFrozen => "singular-shared-frozen",
            Classification::NotFiniteType { .. } => "not-finite-type",
            Classification::Unsupported { .. } => "unsupported",
        }
    }

    /// Numeric parameters in a fixed order, for serialized output.
    pub fn params(&self) -> Vec<i64> {
        match self {
            Classification::Torus { rank } => vec![*rank as i64],
            Classification::SurfaceTimesTorus { weight, torus_rank } => {
                vec![*weight, *torus_rank as i64]
            }
            Classification::OneMutable { a, b } => vec![*a, *b],
            Classification::TwoMutable { a, b, c } => vec![*a, *b, *c],
            Classification::ThreeMutableAcyclic { a, b, c } => vec![*a, *b, *c],
            Classification::SingularSharedFrozen => vec![1, 1],
            Classification::NotFiniteType { witness } => {
                vec![witness.0, witness.1, witness.2]
            }
            Classification::Unsupported { .. } => vec![],
        }
    }

    /// Whether the associated variety is smooth (meaningful only for cases
    /// with a table).
    pub fn smooth(&self) -> bool {
        !matches!(self, Classification::SingularSharedFrozen)
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Torus { rank } => write!(f, "torus of dimension {rank}"),
            Classification::SurfaceTimesTorus { weight, torus_rank } => {
                if *torus_rank == 0 {
                    write!(f, "surface x x' = y^{weight} + 1")
                } else {
                    write!(
                        f,
                        "surface x x' = y^{weight} + 1 times a {torus_rank}-torus"
                    )
                }
            }
            Classification::OneMutable { a, b } => {
                write!(f, "one mutable vertex, frozen weights ({a}, {b})")
            }
            Classification::TwoMutable { a, b, c } => {
                write!(f, "two joined mutable vertices, weights ({a}; {b}, {c})")
            }
            Classification::ThreeMutableAcyclic { a, b, c } => {
                write!(f, "acyclic mutable triangle, weights ({a}, {b}, {c})")
            }
            Classification::SingularSharedFrozen => {
                write!(f, "singular threefold x x' = y y' = z + 1")
            }
            Classification::NotFiniteType { witness: (a, b, c) } => {
                write!(f, "not of finite type; growing triangle ({a}, {b}, {c})")
            }
            Classification::Unsupported { reason } => write!(f, "unsupported: {reason}"),
        }
    }
}

/// A classification together with the normalized seed it applies to: the
/// mutation and vertex permutation performed during classification are
/// baked into the seed, and `mutations` counts the mutation steps.
#[derive(Debug, Clone)]
pub struct Classified {
    pub case: Classification,
    pub seed: Seed,
    pub mutations: usize,
}

/// Classifies a seed of total dimension two or three.
///
/// Cyclic rank-3 seeds are first driven to an acyclic representative when
/// possible; two-mutable seeds are permuted so the joining weight is
/// positive. Frozen weights enter through their absolute values since
/// inverting a frozen coordinate is an isomorphism.
pub fn classify(seed: &Seed) -> Result<Classified, HodgeError> {
    let n = seed.n();
    let m = seed.m();
    let dim = n + m;
    if dim != 2 && dim != 3 {
        return Err(HodgeError::Quiver(QuiverError::UnsupportedDimension { dim }));
    }
    let w = |i: usize, j: usize| -> Result<i64, HodgeError> {
        Ok(seed.matrix().entry_i64(i, j)?.abs())
    };
    let done = |case: Classification| {
        Ok(Classified {
            case,
            seed: seed.clone(),
            mutations: 0,
        })
    };
    match (n, m) {
        (0, rank) => done(Classification::Torus { rank }),
        (1, 1) => {
            let a = w(1, 0)?;
            if a == 0 {
                done(Classification::Torus { rank: 2 })
            } else {
                done(Classification::SurfaceTimesTorus {
                    weight: a,
                    torus_rank: 0,
                })
            }
        }
        (1, 2) => {
            let (a, b) = (w(1, 0)?, w(2, 0)?);
            match (a, b) {
                (0, 0) => done(Classification::Torus { rank: 3 }),
                (weight, 0) | (0, weight) => done(Classification::SurfaceTimesTorus {
                    weight,
                    torus_rank: 1,
                }),
                _ => done(Classification::OneMutable { a, b }),
            }
        }
        (2, 0) => {
            let a = w(0, 1)?;
            if a == 0 {
                done(Classification::Torus { rank: 2 })
            } else {
                done(Classification::Unsupported {
                    reason: format!(
                        "two mutable vertices joined with weight {a} and no frozen \
                         direction; this rank-2 case is open"
                    ),
                })
            }
        }
        (2, 1) => {
            let signed_a = seed.matrix().entry_i64(0, 1)?;
            if signed_a < 0 {
                // Swap the two mutable vertices so the joining weight is
                // positive, then classify the permuted seed.
                let swapped = seed.permuted(&[1, 0], &[0]);
                return classify(&swapped);
            }
            let a = signed_a;
            let (b, c) = (w(2, 0)?, w(2, 1)?);
            if a > 0 {
                done(Classification::TwoMutable { a, b, c })
            } else {
                match (b, c) {
                    (0, 0) => done(Classification::Torus { rank: 3 }),
                    (weight, 0) | (0, weight) => done(Classification::SurfaceTimesTorus {
                        weight,
                        torus_rank: 1,
                    }),
                    (1, 1) => done(Classification::SingularSharedFrozen),
                    _ => done(Classification::Unsupported {
                        reason: format!(
                            "two disjoint mutable vertices over one frozen direction \
                             with weights ({b}, {c}); only (1, 1) is settled"
                        ),
                    }),
                }
            }
        }
        (3, 0) => {
            let graph = QuiverGraph::from_matrix(seed.matrix());
            let (acyclic, mutations) = if graph.has_mutable_cycle() {
                match finite_type_check(seed)? {
                    FiniteTypeVerdict::FiniteLouise { seed, mutations } => (seed, mutations),
                    FiniteTypeVerdict::NotFiniteType { witness, mutations } => {
                        return Ok(Classified {
                            case: Classification::NotFiniteType { witness },
                            seed: seed.clone(),
                            mutations,
                        });
                    }
                }
            } else {
                (seed.clone(), 0)
            };
            let wk = |i: usize, j: usize| -> Result<i64, HodgeError> {
                Ok(acyclic.matrix().entry_i64(i, j)?.abs())
            };
            let (a, b, c) = (wk(0, 1)?, wk(0, 2)?, wk(1, 2)?);
            let case = match (a > 0, b > 0, c > 0) {
                (true, true, true) => Classification::ThreeMutableAcyclic { a, b, c },
                (false, false, false) => Classification::Torus { rank: 3 },
                (true, false, false) => Classification::TwoMutable { a, b: 0, c: 0 },
                (false, true, false) => Classification::TwoMutable { a: b, b: 0, c: 0 },
                (false, false, true) => Classification::TwoMutable { a: c, b: 0, c: 0 },
                _ => Classification::Unsupported {
                    reason: format!(
                        "three mutable vertices with exactly one vanished pair weight \
                         ({a}, {b}, {c}); this degenerate shape is open"
                    ),
                },
            };
            Ok(Classified {
                case,
                seed: acyclic,
                mutations,
            })
        }
        _ => Err(HodgeError::Quiver(QuiverError::UnsupportedDimension { dim })),
    }
}

/// Produces the table for a classified seed; `intersection` requests the
/// intersection cohomology table, which differs from ordinary cohomology
/// only in the singular case.
pub fn table_for(classified: &Classified, intersection: bool) -> Result<MixedHodgeTable, HodgeError> {
    let table = match &classified.case {
        Classification::Torus { rank } => table_torus(*rank),
        Classification::SurfaceTimesTorus { weight, torus_rank } => {
            kunneth(&table_2d(*weight)?, &table_torus(*torus_rank))?
        }
        Classification::OneMutable { a, b } => table_one_mutable(*a, *b)?,
        Classification::TwoMutable { a, b, c } => table_two_mutable(*a, *b, *c)?,
        Classification::ThreeMutableAcyclic { a, b, c } => table_three_mutable(*a, *b, *c)?,
        Classification::SingularSharedFrozen => {
            let variant = if intersection {
                SingularVariant::IntersectionCohomology
            } else {
                SingularVariant::Cohomology
            };
            return Ok(table_singular(variant));
        }
        Classification::NotFiniteType { .. } => {
            return Err(HodgeError::TableUnavailable {
                case: "not-finite-type".to_string(),
                reason: "no acyclic representative exists, so none of the closed forms apply"
                    .to_string(),
            })
        }
        Classification::Unsupported { reason } => {
            return Err(HodgeError::TableUnavailable {
                case: "unsupported".to_string(),
                reason: reason.clone(),
            })
        }
    };
    Ok(if intersection {
        debug_assert!(table.smooth());
        table.as_intersection_cohomology()
    } else {
        table
    })
}
