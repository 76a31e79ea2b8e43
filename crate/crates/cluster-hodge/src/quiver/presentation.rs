use std::fmt;

use super::{QuiverError, QuiverGraph, Seed};

/// One exchange equation x x' = M+ + M- of an isolated seed, with both
/// monomials written as exponent vectors over the frozen variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeEquation {
    /// Index of the mutable vertex the equation belongs to.
    pub vertex: usize,
    /// Exponents of the first monomial over the frozen variables, in frozen
    /// row order.
    pub plus: Vec<u64>,
    /// Exponents of the second monomial.
    pub minus: Vec<u64>,
}

/// A cluster variety presented by one exchange equation per mutable vertex,
/// valid when the mutable part of the quiver has no edges. The variety is
/// cut out inside prod_i (A^2 in x_i, x_i') x (torus in the frozen y_j) by
/// the equations x_i x_i' = M_i+ + M_i-.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyPresentation {
    /// Labels of the mutable variables, one per equation.
    pub mutable: Vec<String>,
    /// Labels of the frozen (invertible) variables.
    pub frozen: Vec<String>,
    pub equations: Vec<ExchangeEquation>,
}

impl VarietyPresentation {
    /// Ambient coordinate count: x_i, x_i' pairs plus frozen variables.
    pub fn ambient_vars(&self) -> usize {
        2 * self.mutable.len() + self.frozen.len()
    }

    /// Dimension of the variety.
    pub fn dim(&self) -> usize {
        self.mutable.len() + self.frozen.len()
    }
}

impl fmt::Display for VarietyPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.equations.is_empty() {
            return write!(
                f,
                "torus in {}",
                if self.frozen.is_empty() {
                    "no variables".to_string()
                } else {
                    self.frozen.join(", ")
                }
            );
        }
        for (i, eq) in self.equations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let x = &self.mutable[eq.vertex];
            write!(
                f,
                "{x} {x}' = {} + {}",
                monomial(&self.frozen, &eq.plus),
                monomial(&self.frozen, &eq.minus)
            )?;
        }
        Ok(())
    }
}

fn monomial(names: &[String], exps: &[u64]) -> String {
    let factors: Vec<String> = names
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(n, &e)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join(" ")
    }
}

/// Reads off the exchange equations of an isolated seed.
///
/// Fails with [`QuiverError::NotIsolated`] when two mutable vertices are
/// joined by an edge, since then the exchange monomials would involve
/// non-invertible cluster variables.
pub fn isolated_presentation(seed: &Seed) -> Result<VarietyPresentation, QuiverError> {
    let graph = QuiverGraph::from_matrix(seed.matrix());
    if let Some(e) = graph.mutable_edges().first() {
        return Err(QuiverError::NotIsolated {
            i: e.from,
            j: e.to,
        });
    }
    let n = seed.n();
    let mut equations = Vec::with_capacity(n);
    for k in 0..n {
        let (plus, minus) = seed.matrix().exchange_exponents(k)?;
        let to_u64 = |v: Vec<num::BigInt>, k: usize| -> Result<Vec<u64>, QuiverError> {
            v.into_iter()
                .enumerate()
                .skip(n)
                .map(|(i, e)| u64::try_from(&e).map_err(|_| QuiverError::WeightOverflow { i, j: k }))
                .collect()
        };
        equations.push(ExchangeEquation {
            vertex: k,
            plus: to_u64(plus, k)?,
            minus: to_u64(minus, k)?,
        });
    }
    Ok(VarietyPresentation {
        mutable: seed.labels()[..n].to_vec(),
        frozen: seed.labels()[n..].to_vec(),
        equations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::seed::{seed_one_mutable, seed_torus, seed_two_mutable};

    #[test]
    fn one_mutable_presentation_prints_the_exchange_relation() {
        let p = isolated_presentation(&seed_one_mutable(2, 3)).unwrap();
        assert_eq!(p.to_string(), "x x' = y^2 z^3 + 1");
        assert_eq!(p.dim(), 3);
        assert_eq!(p.ambient_vars(), 4);
    }

    #[test]
    fn negative_weights_move_the_monomial_to_the_other_side() {
        let p = isolated_presentation(&seed_one_mutable(-2, 3)).unwrap();
        assert_eq!(p.to_string(), "x x' = z^3 + y^2");
    }

    #[test]
    fn torus_presentation_has_no_equations() {
        let p = isolated_presentation(&seed_torus(2)).unwrap();
        assert!(p.equations.is_empty());
        assert_eq!(p.dim(), 2);
    }

    #[test]
    fn seeds_with_mutable_edges_are_rejected() {
        let err = isolated_presentation(&seed_two_mutable(2, 2, 1)).unwrap_err();
        assert_eq!(err, QuiverError::NotIsolated { i: 0, j: 1 });
    }

    #[test]
    fn two_independent_mutable_vertices_give_two_equations() {
        use crate::quiver::{ExtendedExchangeMatrix, Seed};
        // x and y not joined; frozen z sees x with weight 2 and y with -1.
        let m = ExtendedExchangeMatrix::from_i64(
            2,
            1,
            &[vec![0, 0], vec![0, 0], vec![2, -1]],
        )
        .unwrap();
        let s = Seed::with_labels(m, vec!["x".into(), "y".into(), "z".into()]).unwrap();
        let p = isolated_presentation(&s).unwrap();
        assert_eq!(p.to_string(), "x x' = z^2 + 1\ny y' = 1 + z");
    }
}
