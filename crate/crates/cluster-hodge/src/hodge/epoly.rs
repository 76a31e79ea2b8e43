use super::table::MixedHodgeTable;
use super::HodgeError;
use crate::count::CountingPolynomial;

/// The E-polynomial of a smooth table: the signed sum of entries grouped by
/// weight, E(q) = sum over (k, p) of (-1)^k h^{k,(p,p)} q^{dim - p}.
///
/// For the smooth cases in range the F_q point count equals E(q), which is
/// what the verification harness exploits. Singular tables are refused
/// since the count comparison is not available for them.
pub fn e_polynomial(table: &MixedHodgeTable) -> Result<CountingPolynomial, HodgeError> {
    if !table.smooth() {
        return Err(HodgeError::NotSmooth);
    }
    let d = table.dim();
    let mut coeffs = vec![0i64; d + 1];
    for (k, p, h) in table.entries() {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        coeffs[d - p] += sign * h;
    }
    Ok(CountingPolynomial::new(coeffs))
}
