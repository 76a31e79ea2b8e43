use num::rational::BigRational;
use num::BigInt;

use super::form::LogForm;
use super::FormError;

/// A monomial change of variables: each source generator is a Laurent
/// monomial in the target generators, recorded as one exponent row.
///
/// `rows[i][j]` is the exponent of target generator `j` in the monomial
/// expressing source generator `i`, so `dlog source_i` pulls back to
/// `sum_j rows[i][j] dlog target_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMap {
    source: Vec<String>,
    target: Vec<String>,
    rows: Vec<Vec<i64>>,
}

impl MonomialMap {
    pub fn new(
        source: Vec<String>,
        target: Vec<String>,
        rows: Vec<Vec<i64>>,
    ) -> Result<Self, FormError> {
        if rows.len() != source.len() {
            return Err(FormError::MalformedMap(format!(
                "{} rows for {} source generators",
                rows.len(),
                source.len()
            )));
        }
        if let Some(row) = rows.iter().find(|r| r.len() != target.len()) {
            return Err(FormError::MalformedMap(format!(
                "row of length {} for {} target generators",
                row.len(),
                target.len()
            )));
        }
        Ok(Self {
            source,
            target,
            rows,
        })
    }

    /// The identity change of variables on one generator list.
    pub fn identity(generators: Vec<String>) -> Self {
        let n = generators.len();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        Self {
            source: generators.clone(),
            target: generators,
            rows,
        }
    }

    /// Extends `inner` by fixed generators mapped identically: source
    /// `prefix_source ++ inner.source`, target `prefix_target ++
    /// inner.target`, block-diagonal exponents.
    pub fn with_identity_prefix(
        &self,
        prefix_source: &[&str],
        prefix_target: &[&str],
    ) -> Result<MonomialMap, FormError> {
        if prefix_source.len() != prefix_target.len() {
            return Err(FormError::MalformedMap(format!(
                "identity prefix maps {} generators to {}",
                prefix_source.len(),
                prefix_target.len()
            )));
        }
        let k = prefix_source.len();
        let source: Vec<String> = prefix_source
            .iter()
            .map(|s| s.to_string())
            .chain(self.source.iter().cloned())
            .collect();
        let target: Vec<String> = prefix_target
            .iter()
            .map(|s| s.to_string())
            .chain(self.target.iter().cloned())
            .collect();
        let width = target.len();
        let mut rows = Vec::with_capacity(source.len());
        for i in 0..k {
            let mut row = vec![0; width];
            row[i] = 1;
            rows.push(row);
        }
        for inner_row in &self.rows {
            let mut row = vec![0; width];
            row[k..].copy_from_slice(inner_row);
            rows.push(row);
        }
        MonomialMap::new(source, target, rows)
    }

    pub fn source(&self) -> &[String] {
        &self.source
    }

    pub fn target(&self) -> &[String] {
        &self.target
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Composes with another map whose source is this map's target:
    /// sends this map's source monomials through `next`.
    pub fn then(&self, next: &MonomialMap) -> Result<MonomialMap, FormError> {
        if self.target != next.source {
            return Err(FormError::GeneratorMismatch {
                left: self.target.join(", "),
                right: next.source.join(", "),
            });
        }
        let mut rows = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let mut out = vec![0i64; next.target.len()];
            for (mid, &e) in row.iter().enumerate() {
                for (j, &f) in next.rows[mid].iter().enumerate() {
                    let add = e.checked_mul(f).ok_or(FormError::ExponentOverflow)?;
                    out[j] = out[j].checked_add(add).ok_or(FormError::ExponentOverflow)?;
                }
            }
            rows.push(out);
        }
        MonomialMap::new(self.source.clone(), next.target.clone(), rows)
    }

    /// Determinant of the exponent matrix; defined for square maps only.
    pub fn determinant(&self) -> Option<i64> {
        if self.rows.len() != self.target.len() {
            return None;
        }
        match self.rows.len() {
            0 => Some(1),
            1 => Some(self.rows[0][0]),
            2 => Some(self.rows[0][0] * self.rows[1][1] - self.rows[0][1] * self.rows[1][0]),
            _ => {
                // Laplace expansion along the first row; maps here are
                // at most 3x3.
                let mut det = 0i64;
                for (j, &lead) in self.rows[0].iter().enumerate() {
                    if lead == 0 {
                        continue;
                    }
                    let minor_rows: Vec<Vec<i64>> = self.rows[1..]
                        .iter()
                        .map(|r| {
                            r.iter()
                                .enumerate()
                                .filter(|&(c, _)| c != j)
                                .map(|(_, &v)| v)
                                .collect()
                        })
                        .collect();
                    let minor = MonomialMap {
                        source: self.source[1..].to_vec(),
                        target: self
                            .target
                            .iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, s)| s.clone())
                            .collect(),
                        rows: minor_rows,
                    };
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    det += sign * lead * minor.determinant()?;
                }
                Some(det)
            }
        }
    }
}

/// Transports a form along a monomial change of variables.
///
/// The form must live over the map's source generators. Each `dlog
/// source_i` becomes the linear combination given by row `i`, and each
/// coefficient monomial `x^e` becomes the target monomial with exponents
/// `rows^T e`.
pub fn pullback(map: &MonomialMap, form: &LogForm) -> Result<LogForm, FormError> {
    if form.generators() != map.source {
        return Err(FormError::GeneratorMismatch {
            left: form.generators().join(", "),
            right: map.source.join(", "),
        });
    }
    let mut out = LogForm::zero(map.target.clone());
    for (exponents, wedge, coefficient) in form.terms() {
        let mut mapped_exps = vec![0i64; map.target.len()];
        for (i, &e) in exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            for (j, &m) in map.rows[i].iter().enumerate() {
                let add = e.checked_mul(m).ok_or(FormError::ExponentOverflow)?;
                mapped_exps[j] = mapped_exps[j]
                    .checked_add(add)
                    .ok_or(FormError::ExponentOverflow)?;
            }
        }
        let mut acc = LogForm::term(
            map.target.clone(),
            mapped_exps,
            Vec::new(),
            coefficient.clone(),
        )?;
        for &i in wedge {
            let parts: Vec<(i64, usize)> = map.rows[i]
                .iter()
                .enumerate()
                .filter(|&(_, &m)| m != 0)
                .map(|(j, &m)| (m, j))
                .collect();
            let image = LogForm::linear_dlog(map.target.clone(), &parts)?;
            acc = acc.wedge(&image)?;
        }
        out = out.add(&acc)?;
    }
    Ok(out)
}

/// The coordinate change splitting one Laurent monomial off a rank-two
/// lattice: for positive weights (a, b) with g = gcd(a, b), sa + tb = g,
/// a' = a/g, b' = b/g, the substitution y = v^s w^{b'}, z = v^t w^{-a'}
/// turns y^a z^b into v^g. Both directions are unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutChange {
    pub g: i64,
    pub s: i64,
    pub t: i64,
    pub a_prime: i64,
    pub b_prime: i64,
    /// (y, z) as monomials in (v, w): rows [[s, b'], [t, -a']].
    pub forward: MonomialMap,
    /// (v, w) as monomials in (y, z): rows [[a', b'], [t, -s]].
    pub inverse: MonomialMap,
}

/// Extended Euclid: returns (g, x, y) with x*a + y*b = g, g >= 0 for
/// nonnegative inputs.
fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if a == 0 {
        (b, 0, 1)
    } else {
        let (g, x, y) = extended_gcd(b % a, a);
        (g, y - (b / a) * x, x)
    }
}

/// Builds the [`BezoutChange`] for positive weights (a, b), with the
/// Bezout pair fixed by the classic recursive extended Euclid so the
/// output is deterministic.
pub fn bezout_change(a: i64, b: i64) -> Result<BezoutChange, FormError> {
    if a <= 0 || b <= 0 {
        return Err(FormError::NonPositiveWeights { a, b });
    }
    let (g, s, t) = extended_gcd(a, b);
    let a_prime = a / g;
    let b_prime = b / g;
    let yz = vec!["y".to_string(), "z".to_string()];
    let vw = vec!["v".to_string(), "w".to_string()];
    let forward = MonomialMap::new(
        yz.clone(),
        vw.clone(),
        vec![vec![s, b_prime], vec![t, -a_prime]],
    )?;
    let inverse = MonomialMap::new(vw, yz, vec![vec![a_prime, b_prime], vec![t, -s]])?;
    debug_assert_eq!(s * a + t * b, g);
    debug_assert_eq!(forward.determinant(), Some(-1));
    debug_assert_eq!(inverse.determinant(), Some(-1));
    Ok(BezoutChange {
        g,
        s,
        t,
        a_prime,
        b_prime,
        forward,
        inverse,
    })
}

impl BezoutChange {
    /// Rational helper for tests and basis builders.
    pub fn rational(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logform::forms_independent;
    use num::One;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn extended_gcd_reproduces_fixed_pairs() {
        // Frozen outputs of the recursive scheme.
        assert_eq!(extended_gcd(2, 3), (1, -1, 1));
        assert_eq!(extended_gcd(4, 6), (2, -1, 1));
        assert_eq!(extended_gcd(6, 4), (2, 1, -1));
        assert_eq!(extended_gcd(5, 5), (5, 1, 0));
    }

    #[test]
    fn bezout_change_matches_hand_goldens() {
        let change = bezout_change(2, 3).unwrap();
        assert_eq!(
            (change.g, change.s, change.t, change.a_prime, change.b_prime),
            (1, -1, 1, 2, 3)
        );
        assert_eq!(change.forward.rows(), &[vec![-1, 3], vec![1, -2]]);
        assert_eq!(change.inverse.rows(), &[vec![2, 3], vec![1, 1]]);

        let equal = bezout_change(4, 4).unwrap();
        assert_eq!((equal.g, equal.s, equal.t), (4, 1, 0));
        assert_eq!(equal.forward.rows(), &[vec![1, 1], vec![0, -1]]);

        assert!(matches!(
            bezout_change(0, 3),
            Err(FormError::NonPositiveWeights { a: 0, b: 3 })
        ));
        assert!(matches!(
            bezout_change(2, -1),
            Err(FormError::NonPositiveWeights { .. })
        ));
    }

    #[test]
    fn bezout_matrices_are_unimodular_and_mutually_inverse() {
        for a in 1..=50 {
            for b in 1..=50 {
                let change = bezout_change(a, b).unwrap();
                assert_eq!(change.forward.determinant(), Some(-1), "({a},{b})");
                assert_eq!(change.inverse.determinant(), Some(-1), "({a},{b})");
                let round = change.forward.then(&change.inverse).unwrap();
                assert_eq!(
                    round.rows(),
                    &[vec![1, 0], vec![0, 1]],
                    "({a},{b}) does not round-trip"
                );
            }
        }
    }

    #[test]
    fn bezout_change_straightens_the_weight_monomial() {
        // y^a z^b should become v^g: exponents (a, b) times the forward
        // rows give (g, 0).
        for (a, b) in [(2, 3), (4, 6), (6, 4), (5, 5), (12, 8)] {
            let change = bezout_change(a, b).unwrap();
            let rows = change.forward.rows();
            let v_exp = a * rows[0][0] + b * rows[1][0];
            let w_exp = a * rows[0][1] + b * rows[1][1];
            assert_eq!((v_exp, w_exp), (change.g, 0), "({a},{b})");
        }
    }

    #[test]
    fn pullback_maps_dlog_generators_linearly() {
        // dlog v -> a' dlog y + b' dlog z and dlog w -> t dlog y - s dlog z.
        for (a, b) in [(2, 3), (6, 4), (5, 5), (9, 12)] {
            let change = bezout_change(a, b).unwrap();
            let vw = names(&["v", "w"]);
            let yz = names(&["y", "z"]);
            let v = LogForm::dlog(vw.clone(), 0).unwrap();
            let w = LogForm::dlog(vw, 1).unwrap();
            let v_image = pullback(&change.inverse, &v).unwrap();
            let w_image = pullback(&change.inverse, &w).unwrap();
            assert_eq!(
                v_image,
                LogForm::linear_dlog(yz.clone(), &[(change.a_prime, 0), (change.b_prime, 1)])
                    .unwrap()
            );
            assert_eq!(
                w_image,
                LogForm::linear_dlog(yz.clone(), &[(change.t, 0), (-change.s, 1)]).unwrap()
            );
        }
    }

    #[test]
    fn pullback_transforms_monomial_coefficients() {
        // v = y^{a'} z^{b'}, so the coefficient v^i becomes y^{ia'} z^{ib'}.
        let change = bezout_change(4, 6).unwrap();
        let vw = names(&["v", "w"]);
        let form = LogForm::dlog(vw.clone(), 1)
            .unwrap()
            .mul_monomial(&[3, 0])
            .unwrap();
        let image = pullback(&change.inverse, &form).unwrap();
        let expected =
            LogForm::linear_dlog(names(&["y", "z"]), &[(change.t, 0), (-change.s, 1)])
                .unwrap()
                .mul_monomial(&[3 * change.a_prime, 3 * change.b_prime])
                .unwrap();
        assert_eq!(image, expected);
    }

    #[test]
    fn pullback_respects_wedge_products() {
        let change = bezout_change(3, 5).unwrap();
        let vw = names(&["v", "w"]);
        let v = LogForm::dlog(vw.clone(), 0)
            .unwrap()
            .mul_monomial(&[2, -1])
            .unwrap();
        let w = LogForm::dlog(vw, 1).unwrap();
        let wedge_then_pull = pullback(&change.inverse, &v.wedge(&w).unwrap()).unwrap();
        let pull_then_wedge = pullback(&change.inverse, &v)
            .unwrap()
            .wedge(&pullback(&change.inverse, &w).unwrap())
            .unwrap();
        assert_eq!(wedge_then_pull, pull_then_wedge);
    }

    #[test]
    fn pullback_round_trips_through_the_inverse() {
        let change = bezout_change(10, 4).unwrap();
        let yz = names(&["y", "z"]);
        let form = LogForm::linear_dlog(yz.clone(), &[(2, 0), (-7, 1)])
            .unwrap()
            .mul_monomial(&[1, -2])
            .unwrap();
        let there = pullback(&change.forward, &form).unwrap();
        let back = pullback(&change.inverse, &there).unwrap();
        assert_eq!(back, form);
    }

    #[test]
    fn identity_prefix_extension_fixes_the_mutable_generator() {
        // u stays x; v, w change as in the two-variable map. The products
        // uv and uvw then transform as in the rank-one reduction.
        for (a, b) in [(2, 2), (3, 6), (7, 5), (12, 12)] {
            let change = bezout_change(a, b).unwrap();
            let extended = change
                .inverse
                .with_identity_prefix(&["u"], &["x"])
                .unwrap();
            let uvw = names(&["u", "v", "w"]);
            let xyz = names(&["x", "y", "z"]);
            let u = LogForm::dlog(uvw.clone(), 0).unwrap();
            let v = LogForm::dlog(uvw.clone(), 1).unwrap();
            let w = LogForm::dlog(uvw.clone(), 2).unwrap();

            let uv = pullback(&extended, &u.wedge(&v).unwrap()).unwrap();
            let expected_uv = LogForm::term(
                xyz.clone(),
                vec![0, 0, 0],
                vec![0, 1],
                BezoutChange::rational(change.a_prime),
            )
            .unwrap()
            .add(
                &LogForm::term(
                    xyz.clone(),
                    vec![0, 0, 0],
                    vec![0, 2],
                    BezoutChange::rational(change.b_prime),
                )
                .unwrap(),
            )
            .unwrap();
            assert_eq!(uv, expected_uv, "({a},{b})");

            let uvw_form = pullback(
                &extended,
                &u.wedge(&v).unwrap().wedge(&w).unwrap(),
            )
            .unwrap();
            let minus_xyz = LogForm::term(
                xyz.clone(),
                vec![0, 0, 0],
                vec![0, 1, 2],
                -BigRational::one(),
            )
            .unwrap();
            assert_eq!(uvw_form, minus_xyz, "({a},{b})");

            let vw = pullback(&extended, &v.wedge(&w).unwrap()).unwrap();
            let minus_yz = LogForm::term(
                xyz.clone(),
                vec![0, 0, 0],
                vec![1, 2],
                -BigRational::one(),
            )
            .unwrap();
            assert_eq!(vw, minus_yz, "({a},{b})");
        }
    }

    #[test]
    fn malformed_maps_are_rejected() {
        assert!(matches!(
            MonomialMap::new(names(&["a", "b"]), names(&["c"]), vec![vec![1]]),
            Err(FormError::MalformedMap(_))
        ));
        assert!(matches!(
            MonomialMap::new(names(&["a"]), names(&["c", "d"]), vec![vec![1]]),
            Err(FormError::MalformedMap(_))
        ));
        let map = MonomialMap::identity(names(&["p", "q"]));
        let wrong = LogForm::dlog(names(&["x", "y"]), 0).unwrap();
        assert!(matches!(
            pullback(&map, &wrong),
            Err(FormError::GeneratorMismatch { .. })
        ));
        assert!(matches!(
            MonomialMap::identity(names(&["p"]))
                .with_identity_prefix(&["a", "b"], &["c"]),
            Err(FormError::MalformedMap(_))
        ));
    }

    #[test]
    fn pulled_back_bases_stay_independent() {
        // Unimodular changes of variables preserve independence.
        let change = bezout_change(6, 9).unwrap();
        let vw = names(&["v", "w"]);
        let v = LogForm::dlog(vw.clone(), 0).unwrap();
        let w = LogForm::dlog(vw, 1).unwrap();
        let images = [
            pullback(&change.inverse, &v).unwrap(),
            pullback(&change.inverse, &w).unwrap(),
        ];
        assert!(forms_independent(&images).unwrap());
    }
}
