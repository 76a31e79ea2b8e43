use super::table::{MixedHodgeTable, TableVariant};
use super::HodgeError;

/// Table of a product of varieties: the convolution of the two tables in
/// both the cohomological degree and the Hodge weight.
pub fn kunneth(
    left: &MixedHodgeTable,
    right: &MixedHodgeTable,
) -> Result<MixedHodgeTable, HodgeError> {
    let dim = left.dim() + right.dim();
    let mut out = MixedHodgeTable::empty(dim, left.smooth() && right.smooth(), TableVariant::Cohomology);
    for (k1, p1, h1) in left.entries() {
        for (k2, p2, h2) in right.entries() {
            let (k, p) = (k1 + k2, p1 + p2);
            let prev = out.entry(k, p);
            out.set(k, p, prev + h1 * h2)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::builders::{table_2d, table_one_mutable, table_torus};

    #[test]
    fn torus_factors_multiply_binomially() {
        let t = kunneth(&table_torus(1), &table_torus(2)).unwrap();
        assert_eq!(t, table_torus(3));
    }

    #[test]
    fn surface_times_circle_torus_matches_the_one_mutable_threefold() {
        // The threefold x x' = y^a + 1 with y, z invertible is the product
        // of the corresponding surface with a one-dimensional torus, and
        // its closed-form table has gcd(a, 0) = a.
        for a in 1..=6 {
            let product = kunneth(&table_2d(a).unwrap(), &table_torus(1)).unwrap();
            assert_eq!(product, table_one_mutable(a, 0).unwrap());
        }
    }

    #[test]
    fn kunneth_is_symmetric() {
        let l = table_2d(3).unwrap();
        let r = table_torus(1);
        assert_eq!(kunneth(&l, &r).unwrap(), kunneth(&r, &l).unwrap());
    }
}
