use super::{CountError, PrimeField};
use crate::quiver::VarietyPresentation;

/// Counts the F_p points of an isolated presentation by iterating over the
/// frozen torus and multiplying fibre counts.
///
/// For a fixed frozen tuple, each equation x x' = r contributes q - 1
/// solutions when r is a unit (x free, x' determined) and 2q - 1 when
/// r = 0 (either coordinate vanishes). The equations share no mutable
/// variables, so the fibre is a product.
pub fn count_isolated(
    presentation: &VarietyPresentation,
    field: &PrimeField,
) -> Result<u64, CountError> {
    let q = field.order();
    let m = presentation.frozen.len();
    let mut total: u64 = 0;
    let mut frozen = vec![1u64; m];
    loop {
        let mut fibre: u64 = 1;
        for eq in &presentation.equations {
            let r = field.add(
                monomial_value(field, &frozen, &eq.plus),
                monomial_value(field, &frozen, &eq.minus),
            );
            let weight = if r == 0 { 2 * q - 1 } else { q - 1 };
            fibre = fibre
                .checked_mul(weight)
                .ok_or(CountError::CountOverflow)?;
        }
        total = total.checked_add(fibre).ok_or(CountError::CountOverflow)?;
        // Odometer over (F_p^*)^m; finished when every digit wraps.
        let mut i = 0;
        loop {
            if i == m {
                return Ok(total);
            }
            frozen[i] += 1;
            if frozen[i] < q {
                break;
            }
            frozen[i] = 1;
            i += 1;
        }
    }
}

fn monomial_value(field: &PrimeField, frozen: &[u64], exps: &[u64]) -> u64 {
    let mut acc = 1u64;
    for (&y, &e) in frozen.iter().zip(exps) {
        if e > 0 {
            acc = field.mul(acc, field.pow(y, e));
        }
    }
    acc
}

/// Reference implementation: enumerates every tuple of the ambient space
/// (x_i, x_i' in F_p, frozen y_j in F_p^*) and tests the equations. Only
/// feasible for small primes and few variables; exists to cross-check
/// [`count_isolated`], which never iterates over mutable coordinates.
pub fn count_isolated_naive(
    presentation: &VarietyPresentation,
    field: &PrimeField,
) -> Result<u64, CountError> {
    let q = field.order();
    let n = presentation.mutable.len();
    let m = presentation.frozen.len();
    let ambient = 2 * n + m;
    let total_tuples = (q as u128).checked_pow(ambient as u32);
    if total_tuples.is_none() || total_tuples.unwrap() > 1 << 32 {
        return Err(CountError::Unsupported(format!(
            "naive enumeration over {ambient} coordinates at q = {q} is too large"
        )));
    }
    let mut count: u64 = 0;
    let mut tuple = vec![0u64; ambient];
    'outer: loop {
        // Layout: x_1, x_1', ..., x_n, x_n', y_1, ..., y_m.
        let frozen = &tuple[2 * n..];
        let valid = frozen.iter().all(|&y| y != 0)
            && presentation.equations.iter().all(|eq| {
                let lhs = field.mul(tuple[2 * eq.vertex], tuple[2 * eq.vertex + 1]);
                let rhs = field.add(
                    monomial_value(field, frozen, &eq.plus),
                    monomial_value(field, frozen, &eq.minus),
                );
                lhs == rhs
            });
        if valid {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == ambient {
                break 'outer;
            }
            tuple[i] += 1;
            if tuple[i] < q {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
    }
    Ok(count)
}
