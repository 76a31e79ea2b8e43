use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::rational::BigRational;
use num::{BigInt, One, Zero};
use serde::{Deserialize, Serialize};

use super::FormError;

/// Key of one term: Laurent exponents of the coefficient monomial, then
/// the strictly increasing set of wedged generator indices. The derived
/// order groups terms with equal monomials together.
type TermKey = (Vec<i64>, Vec<usize>);

/// A finite rational combination of terms `c * x^e * dlog x_{S}`.
///
/// All terms share the ordered generator list; zero coefficients are never
/// stored, so structural equality is semantic equality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LogFormJson", into = "LogFormJson")]
pub struct LogForm {
    generators: Vec<String>,
    terms: BTreeMap<TermKey, BigRational>,
}

impl LogForm {
    pub fn zero(generators: Vec<String>) -> Self {
        Self {
            generators,
            terms: BTreeMap::new(),
        }
    }

    /// The constant form `value` (empty wedge, exponent zero).
    pub fn constant(generators: Vec<String>, value: BigRational) -> Self {
        let mut form = Self::zero(generators);
        if !value.is_zero() {
            let key = (vec![0; form.generators.len()], Vec::new());
            form.terms.insert(key, value);
        }
        form
    }

    /// The constant form 1.
    pub fn one(generators: Vec<String>) -> Self {
        Self::constant(generators, BigRational::one())
    }

    /// The single generator form `dlog x_index`.
    pub fn dlog(generators: Vec<String>, index: usize) -> Result<Self, FormError> {
        let exponents = vec![0; generators.len()];
        Self::term(generators, exponents, vec![index], BigRational::one())
    }

    /// An integer combination of dlog generators, `sum c_i dlog x_i`.
    pub fn linear_dlog(
        generators: Vec<String>,
        parts: &[(i64, usize)],
    ) -> Result<Self, FormError> {
        let mut form = Self::zero(generators.clone());
        for &(coeff, index) in parts {
            let exponents = vec![0; generators.len()];
            let single = Self::term(
                generators.clone(),
                exponents,
                vec![index],
                BigRational::from_integer(BigInt::from(coeff)),
            )?;
            form = form.add(&single)?;
        }
        Ok(form)
    }

    /// A single term `coefficient * x^exponents * dlog x_{wedge}`.
    pub fn term(
        generators: Vec<String>,
        exponents: Vec<i64>,
        wedge: Vec<usize>,
        coefficient: BigRational,
    ) -> Result<Self, FormError> {
        if exponents.len() != generators.len() {
            return Err(FormError::ExponentLength {
                expected: generators.len(),
                found: exponents.len(),
            });
        }
        for &index in &wedge {
            if index >= generators.len() {
                return Err(FormError::WedgeIndexOutOfRange {
                    index,
                    generators: generators.len(),
                });
            }
        }
        if wedge.windows(2).any(|w| w[0] >= w[1]) {
            return Err(FormError::WedgeIndicesUnsorted(wedge));
        }
        let mut form = Self::zero(generators);
        if !coefficient.is_zero() {
            form.terms.insert((exponents, wedge), coefficient);
        }
        Ok(form)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterates terms as (exponents, wedge indices, coefficient), in the
    /// canonical key order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &[usize], &BigRational)> + '_ {
        self.terms
            .iter()
            .map(|((e, s), c)| (e.as_slice(), s.as_slice(), c))
    }

    /// The common wedge degree |S| of all terms, if they agree; `None`
    /// for the zero form or mixed-degree sums.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|(_, s)| s.len());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn require_same_generators(&self, other: &Self) -> Result<(), FormError> {
        if self.generators != other.generators {
            return Err(FormError::GeneratorMismatch {
                left: self.generators.join(", "),
                right: other.generators.join(", "),
            });
        }
        Ok(())
    }

    fn insert(&mut self, key: TermKey, value: BigRational) {
        if value.is_zero() {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + value;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FormError> {
        self.require_same_generators(other)?;
        let mut out = self.clone();
        for (key, value) in &other.terms {
            out.insert(key.clone(), value.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FormError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.generators.clone());
        }
        Self {
            generators: self.generators.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * factor))
                .collect(),
        }
    }

    pub fn scale_int(&self, factor: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(factor)))
    }

    /// Multiplies every term by the Laurent monomial `x^exponents`.
    pub fn mul_monomial(&self, exponents: &[i64]) -> Result<Self, FormError> {
        if exponents.len() != self.generators.len() {
            return Err(FormError::ExponentLength {
                expected: self.generators.len(),
                found: exponents.len(),
            });
        }
        let mut out = Self::zero(self.generators.clone());
        for ((e, s), c) in &self.terms {
            let mut shifted = Vec::with_capacity(e.len());
            for (lhs, rhs) in e.iter().zip(exponents) {
                shifted.push(lhs.checked_add(*rhs).ok_or(FormError::ExponentOverflow)?);
            }
            out.insert((shifted, s.clone()), c.clone());
        }
        Ok(out)
    }

    /// The exterior product. Terms sharing a wedge index vanish; the rest
    /// pick up the parity sign of sorting the concatenated index list.
    pub fn wedge(&self, other: &Self) -> Result<Self, FormError> {
        self.require_same_generators(other)?;
        let mut out = Self::zero(self.generators.clone());
        for ((e1, s1), c1) in &self.terms {
            for ((e2, s2), c2) in &other.terms {
                let Some((merged, sign)) = merge_wedge(s1, s2) else {
                    continue;
                };
                let mut exps = Vec::with_capacity(e1.len());
                for (lhs, rhs) in e1.iter().zip(e2) {
                    exps.push(lhs.checked_add(*rhs).ok_or(FormError::ExponentOverflow)?);
                }
                let mut value = c1 * c2;
                if sign < 0 {
                    value = -value;
                }
                out.insert((exps, merged), value);
            }
        }
        Ok(out)
    }
}

/// Merges two sorted disjoint index sets, returning the sorted union and
/// the sign of the permutation that interleaves them; `None` on overlap.
fn merge_wedge(s1: &[usize], s2: &[usize]) -> Option<(Vec<usize>, i32)> {
    if s1.iter().any(|i| s2.contains(i)) {
        return None;
    }
    // Moving each element of s2 past the larger elements of s1 costs one
    // transposition per crossing.
    let mut crossings = 0usize;
    for &j in s2 {
        crossings += s1.iter().filter(|&&i| i > j).count();
    }
    let mut merged: Vec<usize> = s1.iter().chain(s2).copied().collect();
    merged.sort_unstable();
    Some((merged, if crossings % 2 == 0 { 1 } else { -1 }))
}

/// Row-reduces the coefficient matrix of `forms` over the rationals and
/// returns its rank. All forms must share one generator list.
pub fn rational_rank(forms: &[LogForm]) -> Result<usize, FormError> {
    let Some(first) = forms.first() else {
        return Ok(0);
    };
    for form in &forms[1..] {
        first.require_same_generators(form)?;
    }
    let mut columns: Vec<TermKey> = Vec::new();
    for form in forms {
        for key in form.terms.keys() {
            if !columns.contains(key) {
                columns.push(key.clone());
            }
        }
    }
    let mut matrix: Vec<Vec<BigRational>> = forms
        .iter()
        .map(|form| {
            columns
                .iter()
                .map(|key| form.terms.get(key).cloned().unwrap_or_else(BigRational::zero))
                .collect()
        })
        .collect();
    let mut rank = 0usize;
    for col in 0..columns.len() {
        let Some(pivot) = (rank..matrix.len()).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(rank, pivot);
        let lead = matrix[rank][col].clone();
        for row in rank + 1..matrix.len() {
            if matrix[row][col].is_zero() {
                continue;
            }
            let factor = &matrix[row][col] / &lead;
            for c in col..columns.len() {
                let delta = &factor * &matrix[rank][c];
                matrix[row][c] = &matrix[row][c] - delta;
            }
        }
        rank += 1;
        if rank == matrix.len() {
            break;
        }
    }
    Ok(rank)
}

/// Whether the forms are linearly independent over the rationals.
pub fn forms_independent(forms: &[LogForm]) -> Result<bool, FormError> {
    Ok(rational_rank(forms)? == forms.len())
}

impl fmt::Display for LogForm {
    /// Renders in underline notation: terms grouped by coefficient
    /// monomial, e.g. `y^2*z^3*(2_xy_+3_xz_)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut groups: Vec<(Vec<i64>, Vec<(Vec<usize>, BigRational)>)> = Vec::new();
        for ((e, s), c) in &self.terms {
            match groups.last_mut() {
                Some((exps, parts)) if exps == e => parts.push((s.clone(), c.clone())),
                _ => groups.push((e.clone(), vec![(s.clone(), c.clone())])),
            }
        }
        let mut rendered = String::new();
        for (exps, parts) in groups {
            let monomial = self.render_monomial(&exps);
            let mut body = String::new();
            let mut prefixed = false;
            for (s, c) in &parts {
                let piece = self.render_part(s, c);
                if !body.is_empty() {
                    if let Some(rest) = piece.strip_prefix('-') {
                        body.push('-');
                        body.push_str(rest);
                    } else {
                        body.push('+');
                        body.push_str(&piece);
                    }
                } else {
                    body.push_str(&piece);
                }
                prefixed |= piece
                    .chars()
                    .next()
                    .is_some_and(|c| c.is_ascii_digit() || c == '-');
            }
            let group = if monomial.is_empty() {
                body
            } else if parts.len() > 1 || prefixed {
                format!("{monomial}*({body})")
            } else {
                format!("{monomial}*{body}")
            };
            if rendered.is_empty() {
                rendered = group;
            } else if let Some(rest) = group.strip_prefix('-') {
                rendered.push_str(" - ");
                rendered.push_str(rest);
            } else {
                rendered.push_str(" + ");
                rendered.push_str(&group);
            }
        }
        write!(f, "{rendered}")
    }
}

impl LogForm {
    fn render_monomial(&self, exponents: &[i64]) -> String {
        let mut pieces = Vec::new();
        for (name, &e) in self.generators.iter().zip(exponents) {
            match e {
                0 => {}
                1 => pieces.push(name.clone()),
                _ => pieces.push(format!("{name}^{e}")),
            }
        }
        pieces.join("*")
    }

    fn render_part(&self, wedge: &[usize], coeff: &BigRational) -> String {
        if wedge.is_empty() {
            return coeff.to_string();
        }
        let names: String = wedge.iter().map(|&i| self.generators[i].as_str()).collect();
        let prefix = if coeff.is_one() {
            String::new()
        } else if (-coeff).is_one() {
            "-".to_string()
        } else {
            coeff.to_string()
        };
        format!("{prefix}_{names}_")
    }
}

/// Serialized shape: generators plus a sorted term list with string
/// rationals ("2", "-3/4").
#[derive(Serialize, Deserialize)]
struct LogFormJson {
    generators: Vec<String>,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponents: Vec<i64>,
    wedge: Vec<usize>,
    coefficient: String,
}

impl From<LogForm> for LogFormJson {
    fn from(form: LogForm) -> Self {
        let terms = form
            .terms
            .iter()
            .map(|((e, s), c)| TermJson {
                exponents: e.clone(),
                wedge: s.clone(),
                coefficient: c.to_string(),
            })
            .collect();
        Self {
            generators: form.generators,
            terms,
        }
    }
}

impl TryFrom<LogFormJson> for LogForm {
    type Error = FormError;

    fn try_from(json: LogFormJson) -> Result<Self, FormError> {
        let mut form = LogForm::zero(json.generators.clone());
        for term in json.terms {
            let coefficient = BigRational::from_str(&term.coefficient)
                .map_err(|_| FormError::BadCoefficient(term.coefficient.clone()))?;
            let single = LogForm::term(
                json.generators.clone(),
                term.exponents,
                term.wedge,
                coefficient,
            )?;
            form = form.add(&single)?;
        }
        Ok(form)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn xy() -> Vec<String> {
        gens(&["x", "y"])
    }

    fn xyz() -> Vec<String> {
        gens(&["x", "y", "z"])
    }

    #[test]
    fn wedge_is_antisymmetric_on_generators() {
        let x = LogForm::dlog(xy(), 0).unwrap();
        let y = LogForm::dlog(xy(), 1).unwrap();
        let xy_form = x.wedge(&y).unwrap();
        let yx_form = y.wedge(&x).unwrap();
        assert_eq!(xy_form.to_string(), "_xy_");
        assert_eq!(yx_form.to_string(), "-_xy_");
        assert_eq!(yx_form, xy_form.neg());
        assert!(x.wedge(&x).unwrap().is_zero());
    }

    #[test]
    fn wedge_of_linear_combinations_collapses_to_one_term() {
        // (a'y + b'z) ^ (ty - sz) = -(s a' + t b') yz; with s a' + t b' = 1
        // this is -yz. Take (a,b) = (2,3): a'=2, b'=3, s=-1, t=1.
        let left = LogForm::linear_dlog(xyz(), &[(2, 1), (3, 2)]).unwrap();
        let right = LogForm::linear_dlog(xyz(), &[(1, 1), (1, 2)]).unwrap();
        let product = left.wedge(&right).unwrap();
        let yz = LogForm::term(
            xyz(),
            vec![0, 0, 0],
            vec![1, 2],
            -BigRational::one(),
        )
        .unwrap();
        assert_eq!(product, yz);
    }

    #[test]
    fn triple_wedge_sign_matches_sorting_parity() {
        let x = LogForm::dlog(xyz(), 0).unwrap();
        let y = LogForm::dlog(xyz(), 1).unwrap();
        let z = LogForm::dlog(xyz(), 2).unwrap();
        let zxy = z.wedge(&x).unwrap().wedge(&y).unwrap();
        let xyz_form = x.wedge(&y).unwrap().wedge(&z).unwrap();
        // z^x^y is an even permutation of x^y^z.
        assert_eq!(zxy, xyz_form);
        let yxz = y.wedge(&x).unwrap().wedge(&z).unwrap();
        assert_eq!(yxz, xyz_form.neg());
    }

    #[test]
    fn adding_opposite_terms_cancels_to_zero() {
        let form = LogForm::term(
            xy(),
            vec![2, 0],
            vec![0, 1],
            BigRational::from_integer(3.into()),
        )
        .unwrap();
        let sum = form.add(&form.neg()).unwrap();
        assert!(sum.is_zero());
        assert_eq!(sum.to_string(), "0");
    }

    #[test]
    fn monomial_multiplication_shifts_exponents() {
        let form = LogForm::dlog(xy(), 0).unwrap();
        let shifted = form.mul_monomial(&[0, 3]).unwrap();
        assert_eq!(shifted.to_string(), "y^3*_x_");
        let back = shifted.mul_monomial(&[0, -3]).unwrap();
        assert_eq!(back, form);
    }

    #[test]
    fn invalid_terms_are_rejected() {
        assert!(matches!(
            LogForm::term(xy(), vec![0], vec![], BigRational::one()),
            Err(FormError::ExponentLength {
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(
            LogForm::term(xy(), vec![0, 0], vec![2], BigRational::one()),
            Err(FormError::WedgeIndexOutOfRange {
                index: 2,
                generators: 2
            })
        ));
        assert!(matches!(
            LogForm::term(xy(), vec![0, 0], vec![1, 0], BigRational::one()),
            Err(FormError::WedgeIndicesUnsorted(_))
        ));
        let x2 = LogForm::dlog(xy(), 0).unwrap();
        let x3 = LogForm::dlog(xyz(), 0).unwrap();
        assert!(matches!(
            x2.add(&x3),
            Err(FormError::GeneratorMismatch { .. })
        ));
    }

    #[test]
    fn display_groups_terms_by_monomial() {
        // y^2*z^3*(2_xy_+3_xz_) is the documented rendering.
        let part1 = LogForm::term(
            xyz(),
            vec![0, 2, 3],
            vec![0, 1],
            BigRational::from_integer(2.into()),
        )
        .unwrap();
        let part2 = LogForm::term(
            xyz(),
            vec![0, 2, 3],
            vec![0, 2],
            BigRational::from_integer(3.into()),
        )
        .unwrap();
        let form = part1.add(&part2).unwrap();
        assert_eq!(form.to_string(), "y^2*z^3*(2_xy_+3_xz_)");
    }

    #[test]
    fn display_handles_constants_signs_and_negative_exponents() {
        assert_eq!(LogForm::one(xy()).to_string(), "1");
        let y_inv = LogForm::dlog(xy(), 0)
            .unwrap()
            .mul_monomial(&[0, -1])
            .unwrap();
        assert_eq!(y_inv.to_string(), "y^-1*_x_");
        let combo = LogForm::linear_dlog(xy(), &[(1, 0), (-1, 1)]).unwrap();
        assert_eq!(combo.to_string(), "_x_-_y_");
        let neg_first = LogForm::linear_dlog(xy(), &[(-2, 0), (1, 1)]).unwrap();
        assert_eq!(neg_first.to_string(), "-2_x_+_y_");
    }

    #[test]
    fn homogeneous_degree_detects_uniform_wedge_size() {
        let x = LogForm::dlog(xy(), 0).unwrap();
        let y = LogForm::dlog(xy(), 1).unwrap();
        assert_eq!(x.add(&y).unwrap().homogeneous_degree(), Some(1));
        let mixed = x.add(&LogForm::one(xy())).unwrap();
        assert_eq!(mixed.homogeneous_degree(), None);
        assert_eq!(LogForm::zero(xy()).homogeneous_degree(), None);
    }

    #[test]
    fn rank_distinguishes_dependent_from_independent_sets() {
        let x = LogForm::dlog(xyz(), 0).unwrap();
        let y = LogForm::dlog(xyz(), 1).unwrap();
        let sum = x.add(&y).unwrap();
        assert_eq!(rational_rank(&[x.clone(), y.clone()]).unwrap(), 2);
        assert_eq!(
            rational_rank(&[x.clone(), y.clone(), sum.clone()]).unwrap(),
            2
        );
        assert!(forms_independent(&[x.clone(), y]).unwrap());
        assert!(!forms_independent(&[x.clone(), x.scale_int(2)]).unwrap());
        assert!(forms_independent(&[]).unwrap());
        // The same dlog against different monomial coefficients stays
        // independent: columns are (exponent, wedge) pairs.
        let shifted = x.mul_monomial(&[0, 1, 0]).unwrap();
        assert!(forms_independent(&[x, shifted, sum]).unwrap());
    }

    #[test]
    fn json_round_trip_preserves_terms_and_rationals() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let form = LogForm::term(xyz(), vec![1, -2, 0], vec![0, 2], half)
            .unwrap()
            .add(&LogForm::dlog(xyz(), 1).unwrap())
            .unwrap();
        let text = serde_json::to_string(&form).unwrap();
        assert!(text.contains("\"1/2\""));
        let back: LogForm = serde_json::from_str(&text).unwrap();
        assert_eq!(back, form);
    }

    #[test]
    fn json_rejects_bad_coefficients_and_bad_terms() {
        let bad_coeff = r#"{"generators":["x"],"terms":[{"exponents":[0],"wedge":[],"coefficient":"pi"}]}"#;
        assert!(serde_json::from_str::<LogForm>(bad_coeff).is_err());
        let bad_wedge = r#"{"generators":["x"],"terms":[{"exponents":[0],"wedge":[1],"coefficient":"1"}]}"#;
        assert!(serde_json::from_str::<LogForm>(bad_wedge).is_err());
    }
}
