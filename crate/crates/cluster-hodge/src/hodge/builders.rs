use num::integer::gcd;

use super::table::{MixedHodgeTable, TableVariant};
use super::HodgeError;

/// Which of the two tables attached to the singular surface case is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularVariant {
    /// Ordinary cohomology of the singular variety.
    Cohomology,
    /// Intersection cohomology, which differs in degree 2.
    IntersectionCohomology,
}

fn require(name: &'static str, min: i64, value: i64) -> Result<(), HodgeError> {
    if value < min {
        return Err(HodgeError::InvalidWeight { name, min, value });
    }
    Ok(())
}

fn diagonal(dim: usize, smooth: bool, values: &[i64]) -> MixedHodgeTable {
    let mut t = MixedHodgeTable::empty(dim, smooth, TableVariant::Cohomology);
    for (k, &h) in values.iter().enumerate() {
        t.set(k, k, h).expect("diagonal entries are admissible");
    }
    t
}

/// Table of the algebraic torus of the given dimension: h^{k,(k,k)} counts
/// the k-fold products of logarithmic coordinate forms.
pub fn table_torus(rank: usize) -> MixedHodgeTable {
    let mut t = MixedHodgeTable::empty(rank, true, TableVariant::Cohomology);
    let mut binom: i64 = 1;
    for k in 0..=rank {
        t.set(k, k, binom).expect("torus entries are admissible");
        binom = binom * (rank as i64 - k as i64) / (k as i64 + 1);
    }
    t
}

/// Table of the surface x x' = y^a + 1 with y invertible, for a >= 1.
pub fn table_2d(a: i64) -> Result<MixedHodgeTable, HodgeError> {
    require("a", 1, a)?;
    let mut t = diagonal(2, true, &[1, 1, 1]);
    t.set(2, 1, a - 1)?;
    Ok(t)
}

/// Table of the threefold x x' = y^a z^b + 1 with y, z invertible.
///
/// Both weights may be zero individually; the table depends only on
/// g = gcd(|a|, |b|), which must be positive.
pub fn table_one_mutable(a: i64, b: i64) -> Result<MixedHodgeTable, HodgeError> {
    let g = gcd(a.abs(), b.abs());
    require("gcd(a,b)", 1, g)?;
    let mut t = diagonal(3, true, &[1, 2, 2, 1]);
    t.set(2, 1, g - 1)?;
    t.set(3, 2, g - 1)?;
    Ok(t)
}

/// Table of the threefold attached to two exchange-joined mutable vertices
/// with weight a >= 1 and one frozen vertex with weights (b, c).
///
/// The correction C = gcd(a,|b|) + gcd(a,|c|) - 2 counts the extra classes
/// glued in from the two charts; gcd(a, 0) reads as a.
pub fn table_two_mutable(a: i64, b: i64, c: i64) -> Result<MixedHodgeTable, HodgeError> {
    require("a", 1, a)?;
    let correction = gcd(a, b.abs()) + gcd(a, c.abs()) - 2;
    let mut t = diagonal(3, true, &[1, 1, 1, 1]);
    t.set(2, 1, correction)?;
    t.set(3, 2, correction)?;
    Ok(t)
}

/// Table of the threefold attached to an acyclic triangle of mutable
/// vertices with positive pair weights (a, b, c) on (x,y), (x,z), (y,z).
pub fn table_three_mutable(a: i64, b: i64, c: i64) -> Result<MixedHodgeTable, HodgeError> {
    require("a", 1, a)?;
    require("b", 1, b)?;
    require("c", 1, c)?;
    let correction = gcd(a, b) + gcd(a, c) + gcd(b, c) - 3;
    let mut t = diagonal(3, true, &[1, 0, 1, 1]);
    t.set(2, 1, correction)?;
    t.set(3, 2, correction + 1)?;
    Ok(t)
}

/// Tables of the singular threefold x x' = y + z with y, z invertible:
/// ordinary cohomology, or intersection cohomology which picks up one
/// extra class in degree 2 and weight (1,1).
pub fn table_singular(variant: SingularVariant) -> MixedHodgeTable {
    let mut t = diagonal(3, false, &[1, 1, 2, 1]);
    if variant == SingularVariant::IntersectionCohomology {
        t.set(2, 1, 1).expect("admissible entry");
        t = t.as_intersection_cohomology();
    }
    t
}
