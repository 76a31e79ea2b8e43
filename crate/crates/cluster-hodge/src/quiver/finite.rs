use serde::Serialize;

use super::{QuiverError, QuiverGraph, Seed};

/// Outcome of the finite-type search on a rank-3 seed with no frozen
/// vertices.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "verdict")]
pub enum FiniteTypeVerdict {
    /// A mutation-equivalent seed whose mutable part is acyclic was found;
    /// such a seed is of finite mutation behaviour for our purposes and its
    /// acyclic representative is Louise.
    FiniteLouise {
        #[serde(skip)]
        seed: Seed,
        mutations: usize,
    },
    /// Every vertex of the current oriented triangle satisfies the growth
    /// inequality, so no mutation sequence reaches an acyclic seed.
    NotFiniteType {
        witness: (i64, i64, i64),
        mutations: usize,
    },
}

/// Decides whether a seed with three mutable and no frozen vertices is
/// mutation-equivalent to an acyclic one.
///
/// An acyclic mutable part is returned immediately. Otherwise the mutable
/// part is an oriented triangle with positive weights (a, b, c); when every
/// pairwise product exceeds the remaining weight (ab > c, bc > a, ca > b),
/// every mutation grows the triangle and the seed is not of finite type.
/// When some product fails the inequality, mutating there strictly shrinks
/// the weight sum, so greedily mutating at the vertex minimising the new
/// sum terminates.
pub fn finite_type_check(seed: &Seed) -> Result<FiniteTypeVerdict, QuiverError> {
    if seed.n() != 3 || seed.m() != 0 {
        return Err(QuiverError::FiniteTypeDomain {
            n: seed.n(),
            m: seed.m(),
        });
    }
    const BUDGET: usize = 10_000;
    let mut current = seed.clone();
    for mutations in 0..=BUDGET {
        let graph = QuiverGraph::from_matrix(current.matrix());
        if !graph.has_mutable_cycle() {
            return Ok(FiniteTypeVerdict::FiniteLouise {
                seed: current,
                mutations,
            });
        }
        // Oriented triangle: opposite[v] is the weight of the edge not
        // touching v. Weights are widened to i128 so products cannot
        // overflow; the matrix itself stays arbitrary precision.
        let w01 = i128::from(current.matrix().entry_i64(0, 1)?).abs();
        let w02 = i128::from(current.matrix().entry_i64(0, 2)?).abs();
        let w12 = i128::from(current.matrix().entry_i64(1, 2)?).abs();
        let opposite = [w12, w02, w01];
        let grows = |v: usize| {
            let (p, q) = incident(&opposite, v);
            p * q > opposite[v]
        };
        if (0..3).all(grows) {
            return Ok(FiniteTypeVerdict::NotFiniteType {
                witness: (w01 as i64, w02 as i64, w12 as i64),
                mutations,
            });
        }
        // Mutating at v replaces opposite[v] by |p*q - opposite[v]|; at the
        // chosen vertex this strictly shrinks the weight sum, so the loop
        // terminates within the initial sum.
        let best = (0..3)
            .map(|v| {
                let (p, q) = incident(&opposite, v);
                (p + q + (p * q - opposite[v]).abs(), v)
            })
            .min()
            .expect("three candidates");
        current = current.mutate(best.1)?;
    }
    Err(QuiverError::FiniteTypeBudget(BUDGET))
}

/// Weights of the two triangle edges incident to v.
fn incident(opposite: &[i128; 3], v: usize) -> (i128, i128) {
    match v {
        0 => (opposite[1], opposite[2]),
        1 => (opposite[0], opposite[2]),
        _ => (opposite[0], opposite[1]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::seed::{seed_three_mutable, seed_torus};

    fn cyclic(a: i64, b: i64, c: i64) -> Seed {
        // Orient the triangle cyclically: x -> y, y -> z, z -> x carry
        // weights a, c, b.
        seed_three_mutable(a, -b, c)
    }

    #[test]
    fn domain_is_three_mutable_no_frozen() {
        let err = finite_type_check(&seed_torus(3)).unwrap_err();
        assert_eq!(err, QuiverError::FiniteTypeDomain { n: 0, m: 3 });
    }

    #[test]
    fn acyclic_seed_needs_no_mutation() {
        let v = finite_type_check(&seed_three_mutable(2, 2, 1)).unwrap();
        let FiniteTypeVerdict::FiniteLouise { mutations, .. } = v else {
            panic!("expected FiniteLouise");
        };
        assert_eq!(mutations, 0);
    }

    #[test]
    fn unit_cycle_resolves_in_one_mutation() {
        let v = finite_type_check(&cyclic(1, 1, 1)).unwrap();
        let FiniteTypeVerdict::FiniteLouise { seed, mutations } = v else {
            panic!("expected FiniteLouise");
        };
        assert_eq!(mutations, 1);
        assert!(!QuiverGraph::from_matrix(seed.matrix()).has_mutable_cycle());
    }

    #[test]
    fn markov_style_cycles_are_not_finite_type() {
        for w in [2, 3] {
            let v = finite_type_check(&cyclic(w, w, w)).unwrap();
            let FiniteTypeVerdict::NotFiniteType { mutations, .. } = v else {
                panic!("expected NotFiniteType for weight {w}");
            };
            assert_eq!(mutations, 0);
        }
    }

    #[test]
    fn mixed_cycle_mutates_to_all_positive_acyclic() {
        // Cyclic weights (1, 3, 1): the product criterion fails at the
        // middle vertex and one mutation yields an acyclic triangle with
        // weights (1, 2, 1), all positive.
        let v = finite_type_check(&cyclic(1, 1, 3)).unwrap();
        let FiniteTypeVerdict::FiniteLouise { seed, mutations } = v else {
            panic!("expected FiniteLouise");
        };
        assert!(mutations >= 1);
        let m = seed.matrix();
        let mut weights: Vec<i64> = vec![
            m.entry_i64(0, 1).unwrap().abs(),
            m.entry_i64(0, 2).unwrap().abs(),
            m.entry_i64(1, 2).unwrap().abs(),
        ];
        weights.sort_unstable();
        assert_eq!(weights, vec![1, 1, 2]);
    }

    #[test]
    fn cycle_with_a_blocking_pair_reaches_a_degenerate_triangle() {
        // Cyclic weights (2, 2, 1): mutation at the vertex opposite one of
        // the weight-2 edges gives |2*1 - 2| = 0, an acyclic shape with a
        // vanished edge.
        let v = finite_type_check(&cyclic(2, 2, 1)).unwrap();
        let FiniteTypeVerdict::FiniteLouise { seed, mutations } = v else {
            panic!("expected FiniteLouise");
        };
        assert_eq!(mutations, 1);
        let m = seed.matrix();
        let mut weights: Vec<i64> = vec![
            m.entry_i64(0, 1).unwrap().abs(),
            m.entry_i64(0, 2).unwrap().abs(),
            m.entry_i64(1, 2).unwrap().abs(),
        ];
        weights.sort_unstable();
        assert_eq!(*weights.last().unwrap(), 2);
        assert!(weights.contains(&0));
    }

    #[test]
    fn search_is_stable_under_relabelling() {
        // Permuting the vertices of a cyclic seed must not change the
        // verdict tag.
        let base = cyclic(2, 3, 2);
        let base_verdict = finite_type_check(&base).unwrap();
        for perm in [[1usize, 2, 0], [2, 0, 1], [1, 0, 2]] {
            let permuted = base.permuted(&perm, &[]);
            let v = finite_type_check(&permuted).unwrap();
            assert_eq!(
                std::mem::discriminant(&v),
                std::mem::discriminant(&base_verdict)
            );
        }
    }
}
