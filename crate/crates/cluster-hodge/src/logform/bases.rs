use std::collections::BTreeMap;

use num::integer::gcd;
use num::rational::BigRational;
use num::BigInt;

use crate::hodge::{Classification, MixedHodgeTable};

use super::form::LogForm;
use super::FormError;

/// A basis of the weight-graded cohomology, keyed by (degree, weight):
/// the forms under `(k, p)` represent `H^{k,(p,p)}`. Only nonempty groups
/// are stored; every form lives over one shared generator list.
#[derive(Debug, Clone, PartialEq)]
pub struct DeligneBasis {
    generators: Vec<String>,
    graded: BTreeMap<(usize, usize), Vec<LogForm>>,
}

impl DeligneBasis {
    fn new(generators: Vec<String>) -> Self {
        Self {
            generators,
            graded: BTreeMap::new(),
        }
    }

    fn push(&mut self, k: usize, p: usize, form: LogForm) -> Result<(), FormError> {
        if form.generators() != self.generators {
            return Err(FormError::GeneratorMismatch {
                left: self.generators.join(", "),
                right: form.generators().join(", "),
            });
        }
        self.graded.entry((k, p)).or_default().push(form);
        Ok(())
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    /// The forms representing `H^{k,(p,p)}`; empty when the group vanishes.
    pub fn forms(&self, k: usize, p: usize) -> &[LogForm] {
        self.graded.get(&(k, p)).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, k: usize, p: usize) -> usize {
        self.forms(k, p).len()
    }

    /// Nonempty groups in lexicographic (k, p) order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &[LogForm])> {
        self.graded.iter().map(|(&key, forms)| (key, forms.as_slice()))
    }

    pub fn total(&self) -> usize {
        self.graded.values().map(Vec::len).sum()
    }

    /// Whether every group's cardinality equals the table entry, including
    /// the zero entries.
    pub fn matches_table(&self, table: &MixedHodgeTable) -> bool {
        let dim = table.dim();
        if self.graded.keys().any(|&(k, p)| k > dim || p > k) {
            return false;
        }
        (0..=dim).all(|k| (0..=k).all(|p| self.count(k, p) as i64 == table.entry(k, p)))
    }
}

/// Which second generating family the two-mutable basis uses for its
/// weight-one rows. The first family is the same in both.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum TwoMutableBasisVariant {
    /// Second family indexed by gcd(a, b), drawn from the chart with
    /// frozen weights (a, b). Its cardinality always matches the
    /// closed-form table.
    #[default]
    Statement,
    /// Second family with exponents and range built from gcd(b, c). Kept
    /// for comparison: it disagrees with the table whenever
    /// gcd(b, c) != gcd(a, b).
    Alternate,
}

fn rat(value: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

fn name_list(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// One wedge monomial `coeff * dlog x_{indices}` with trivial coefficient
/// monomial.
fn wedge_term(generators: &[String], coeff: i64, indices: &[usize]) -> Result<LogForm, FormError> {
    LogForm::term(
        generators.to_vec(),
        vec![0; generators.len()],
        indices.to_vec(),
        rat(coeff),
    )
}

/// An integer combination of wedge monomials.
fn wedge_combo(
    generators: &[String],
    parts: &[(i64, &[usize])],
) -> Result<LogForm, FormError> {
    let mut acc = LogForm::zero(generators.to_vec());
    for &(coeff, indices) in parts {
        acc = acc.add(&wedge_term(generators, coeff, indices)?)?;
    }
    Ok(acc)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Basis for a torus of the given dimension: all wedge monomials in the
/// generators, graded by degree.
pub fn basis_torus(rank: usize) -> Result<DeligneBasis, FormError> {
    if rank > 3 {
        return Err(FormError::BadBasisParameter {
            name: "rank",
            value: rank as i64,
            why: "tori of dimension at most three are supported",
        });
    }
    let generators = name_list(&["x", "y", "z"][..rank]);
    let mut basis = DeligneBasis::new(generators.clone());
    for k in 0..=rank {
        for indices in subsets(rank, k) {
            basis.push(k, k, wedge_term(&generators, 1, &indices)?)?;
        }
    }
    Ok(basis)
}

/// Basis for the surface x x' = y^a + 1 with y invertible.
pub fn basis_2d(a: i64) -> Result<DeligneBasis, FormError> {
    if a < 1 {
        return Err(FormError::BadBasisParameter {
            name: "a",
            value: a,
            why: "the surface weight must be positive",
        });
    }
    let generators = name_list(&["x", "y"]);
    let mut basis = DeligneBasis::new(generators.clone());
    basis.push(0, 0, LogForm::one(generators.clone()))?;
    basis.push(1, 1, wedge_term(&generators, 1, &[1])?)?;
    basis.push(2, 2, wedge_term(&generators, 1, &[0, 1])?)?;
    for i in 1..a {
        let form = wedge_term(&generators, 1, &[0, 1])?.mul_monomial(&[0, i])?;
        basis.push(2, 1, form)?;
    }
    Ok(basis)
}

/// Basis for the surface x x' = y^a + 1 times a one-dimensional torus
/// with coordinate z.
pub fn basis_surface_times_torus(a: i64) -> Result<DeligneBasis, FormError> {
    if a < 1 {
        return Err(FormError::BadBasisParameter {
            name: "a",
            value: a,
            why: "the surface weight must be positive",
        });
    }
    let generators = name_list(&["x", "y", "z"]);
    let mut basis = DeligneBasis::new(generators.clone());
    basis.push(0, 0, LogForm::one(generators.clone()))?;
    basis.push(1, 1, wedge_term(&generators, 1, &[1])?)?;
    basis.push(1, 1, wedge_term(&generators, 1, &[2])?)?;
    basis.push(2, 2, wedge_term(&generators, 1, &[0, 1])?)?;
    basis.push(2, 2, wedge_term(&generators, 1, &[1, 2])?)?;
    basis.push(3, 3, wedge_term(&generators, 1, &[0, 1, 2])?)?;
    for i in 1..a {
        let shift = [0, i, 0];
        basis.push(
            2,
            1,
            wedge_term(&generators, 1, &[0, 1])?.mul_monomial(&shift)?,
        )?;
        basis.push(
            3,
            2,
            wedge_term(&generators, 1, &[0, 1, 2])?.mul_monomial(&shift)?,
        )?;
    }
    Ok(basis)
}

/// Basis for the threefold x x' = y^a z^b + 1 with y, z invertible and
/// both weights positive.
pub fn basis_one_mutable(a: i64, b: i64) -> Result<DeligneBasis, FormError> {
    for (name, value) in [("a", a), ("b", b)] {
        if value < 1 {
            return Err(FormError::BadBasisParameter {
                name,
                value,
                why: "both frozen weights must be positive",
            });
        }
    }
    let g = gcd(a, b);
    let (a_red, b_red) = (a / g, b / g);
    let generators = name_list(&["x", "y", "z"]);
    let mut basis = DeligneBasis::new(generators.clone());
    basis.push(0, 0, LogForm::one(generators.clone()))?;
    basis.push(1, 1, wedge_term(&generators, 1, &[1])?)?;
    basis.push(1, 1, wedge_term(&generators, 1, &[2])?)?;
    let weighted = wedge_combo(&generators, &[(a, &[0, 1]), (b, &[0, 2])])?;
    basis.push(2, 2, weighted.clone())?;
    basis.push(2, 2, wedge_term(&generators, 1, &[1, 2])?)?;
    let top = wedge_term(&generators, 1, &[0, 1, 2])?;
    basis.push(3, 3, top.clone())?;
    for i in 1..g {
        let shift = [0, i * a_red, i * b_red];
        basis.push(2, 1, weighted.mul_monomial(&shift)?)?;
        basis.push(3, 2, top.mul_monomial(&shift)?)?;
    }
    Ok(basis)
}

/// Basis for the threefold with two joined mutable vertices of weight a
/// and frozen weights b (off the first vertex) and c (off the second).
pub fn basis_two_mutable(
    a: i64,
    b: i64,
    c: i64,
    variant: TwoMutableBasisVariant,
) -> Result<DeligneBasis, FormError> {
    if a < 1 {
        return Err(FormError::BadBasisParameter {
            name: "a",
            value: a,
            why: "the joining weight must be positive",
        });
    }
    for (name, value) in [("b", b), ("c", c)] {
        if value < 0 {
            return Err(FormError::BadBasisParameter {
                name,
                value,
                why: "frozen weights must be nonnegative",
            });
        }
    }
    let generators = name_list(&["x", "y", "z"]);
    let mut basis = DeligneBasis::new(generators.clone());
    basis.push(0, 0, LogForm::one(generators.clone()))?;
    basis.push(1, 1, wedge_term(&generators, 1, &[2])?)?;
    basis.push(
        2,
        2,
        wedge_combo(&generators, &[(a, &[0, 1]), (b, &[0, 2]), (c, &[1, 2])])?,
    )?;
    let top = wedge_term(&generators, 1, &[0, 1, 2])?;
    basis.push(3, 3, top.clone())?;

    // First family, common to both variants: forms pulled from the chart
    // where the first vertex is frozen, indexed by gcd(a, c).
    let g_ac = gcd(a, c);
    let first = wedge_combo(&generators, &[(a, &[0, 1]), (c, &[1, 2])])?;
    for i in 1..g_ac {
        let shift = [i * (a / g_ac), 0, i * (c / g_ac)];
        basis.push(2, 1, first.mul_monomial(&shift)?)?;
        basis.push(3, 2, top.mul_monomial(&shift)?)?;
    }

    // Second family: the same chart form in both variants, but with
    // exponents and range from gcd(a, b) or gcd(b, c).
    let second = wedge_combo(&generators, &[(a, &[0, 1]), (b, &[0, 2])])?;
    match variant {
        TwoMutableBasisVariant::Statement => {
            let g_ab = gcd(a, b);
            for j in 1..g_ab {
                let shift = [0, j * (a / g_ab), j * (b / g_ab)];
                basis.push(2, 1, second.mul_monomial(&shift)?)?;
                basis.push(3, 2, top.mul_monomial(&shift)?)?;
            }
        }
        TwoMutableBasisVariant::Alternate => {
            let g_bc = gcd(b, c);
            for j in 1..g_bc {
                let shift = [0, j * (b / g_bc), j * (c / g_bc)];
                basis.push(2, 1, second.mul_monomial(&shift)?)?;
                basis.push(3, 2, top.mul_monomial(&shift)?)?;
            }
        }
    }
    Ok(basis)
}

/// Basis attached to a classification, when one exists in closed form.
pub fn basis_for(
    case: &Classification,
    variant: TwoMutableBasisVariant,
) -> Result<DeligneBasis, FormError> {
    match case {
        Classification::Torus { rank } => basis_torus(*rank),
        Classification::SurfaceTimesTorus {
            weight,
            torus_rank: 0,
        } => basis_2d(*weight),
        Classification::SurfaceTimesTorus {
            weight,
            torus_rank: 1,
        } => basis_surface_times_torus(*weight),
        Classification::SurfaceTimesTorus { torus_rank, .. } => {
            Err(FormError::BasisUnavailable {
                case: format!("surface times a torus of rank {torus_rank}"),
                why: "only torus factors of rank zero or one fit in dimension three".to_string(),
            })
        }
        Classification::OneMutable { a, b } => basis_one_mutable(*a, *b),
        Classification::TwoMutable { a, b, c } => basis_two_mutable(*a, *b, *c, variant),
        Classification::ThreeMutableAcyclic { .. } => Err(FormError::BasisUnavailable {
            case: case.case_name().to_string(),
            why: "its weight-one classes come from a two-chart gluing and have no single \
                  closed-form list"
                .to_string(),
        }),
        Classification::SingularSharedFrozen => Err(FormError::BasisUnavailable {
            case: case.case_name().to_string(),
            why: "the variety is singular, so global log forms do not represent its cohomology"
                .to_string(),
        }),
        Classification::NotFiniteType { .. } => Err(FormError::BasisUnavailable {
            case: case.case_name().to_string(),
            why: "the variety is not of finite type".to_string(),
        }),
        Classification::Unsupported { reason } => Err(FormError::BasisUnavailable {
            case: case.case_name().to_string(),
            why: reason.clone(),
        }),
    }
}
