use num::bigint::BigInt;
use num::{Signed, Zero};

use super::QuiverError;

/// An (n+m) x n integer matrix whose top n x n block is skew-symmetric.
///
/// Rows 0..n index mutable vertices, rows n..n+m frozen vertices; columns
/// always index mutable vertices. Entries are arbitrary-precision integers
/// because mutation can grow weights exponentially along a mutation path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedExchangeMatrix {
    n: usize,
    m: usize,
    entries: Vec<Vec<BigInt>>,
}

impl ExtendedExchangeMatrix {
    /// Validates dimensions and skew-symmetry of the principal part.
    pub fn new(n: usize, m: usize, entries: Vec<Vec<BigInt>>) -> Result<Self, QuiverError> {
        let expected = n + m;
        if entries.len() != expected {
            return Err(QuiverError::RowCountMismatch {
                rows: entries.len(),
                n,
                m,
                expected,
            });
        }
        for (row, r) in entries.iter().enumerate() {
            if r.len() != n {
                return Err(QuiverError::RaggedMatrix {
                    expected,
                    cols: n,
                    row,
                    found: r.len(),
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if entries[i][j] != -entries[j][i].clone() {
                    return Err(QuiverError::NotSkewSymmetric { i, j });
                }
            }
        }
        Ok(Self { n, m, entries })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(n: usize, m: usize, rows: &[Vec<i64>]) -> Result<Self, QuiverError> {
        let entries = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        Self::new(n, m, entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Total number of vertices, mutable plus frozen.
    pub fn total(&self) -> usize {
        self.n + self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    /// The entry converted to i64, for callers who need machine weights.
    pub fn entry_i64(&self, i: usize, j: usize) -> Result<i64, QuiverError> {
        i64::try_from(&self.entries[i][j]).map_err(|_| QuiverError::WeightOverflow { i, j })
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    /// Matrix mutation in direction k (a mutable index).
    ///
    /// Entries in row or column k flip sign; every other entry picks up the
    /// correction [b_ik]+ [b_kj]+ - [b_ik]- [b_kj]- where [x]+ = max(x,0)
    /// and [x]- = min(x,0). The operation is an involution and preserves
    /// skew-symmetry of the principal part.
    pub fn mutate(&self, k: usize) -> Result<Self, QuiverError> {
        if k >= self.n {
            return Err(QuiverError::MutationIndexOutOfRange { k, n: self.n });
        }
        let mut out = vec![vec![BigInt::zero(); self.n]; self.total()];
        for i in 0..self.total() {
            for j in 0..self.n {
                let b = &self.entries[i][j];
                out[i][j] = if i == k || j == k {
                    -b
                } else {
                    let bik = &self.entries[i][k];
                    let bkj = &self.entries[k][j];
                    b + pos(bik) * pos(bkj) - neg(bik) * neg(bkj)
                };
            }
        }
        Ok(Self {
            n: self.n,
            m: self.m,
            entries: out,
        })
    }

    /// Exponent vectors of the two monomials in the exchange relation at k.
    ///
    /// Returns (plus, minus), each of length n+m, where the relation reads
    /// x_k x_k' = prod_j x_j^plus[j] + prod_j x_j^minus[j]; plus collects the
    /// positive entries of column k and minus the negated negative entries,
    /// so both vectors are componentwise nonnegative.
    pub fn exchange_exponents(&self, k: usize) -> Result<(Vec<BigInt>, Vec<BigInt>), QuiverError> {
        if k >= self.n {
            return Err(QuiverError::MutationIndexOutOfRange { k, n: self.n });
        }
        let mut plus = Vec::with_capacity(self.total());
        let mut minus = Vec::with_capacity(self.total());
        for j in 0..self.total() {
            let b = &self.entries[j][k];
            plus.push(pos(b));
            minus.push(-neg(b));
        }
        Ok((plus, minus))
    }

    /// Deletes the given mutable columns and reorders rows so the newly
    /// frozen vertices sit between the surviving mutables and the old
    /// frozen block. `frozen` must contain valid, distinct mutable indices.
    ///
    /// Returns the new matrix together with the row permutation applied,
    /// as a list of old row indices in new order.
    pub fn freeze(
        &self,
        frozen: &[usize],
    ) -> Result<(Self, Vec<usize>), QuiverError> {
        let mut order: Vec<usize> = Vec::with_capacity(self.total());
        for j in frozen {
            if *j >= self.n {
                return Err(QuiverError::FreezeIndexOutOfRange { k: *j, n: self.n });
            }
        }
        let keep: Vec<usize> = (0..self.n).filter(|j| !frozen.contains(j)).collect();
        order.extend(&keep);
        order.extend(frozen);
        order.extend(self.n..self.total());
        let entries = order
            .iter()
            .map(|&i| keep.iter().map(|&j| self.entries[i][j].clone()).collect())
            .collect();
        let out = Self {
            n: keep.len(),
            m: self.m + frozen.len(),
            entries,
        };
        Ok((out, order))
    }

    /// Applies a permutation of the mutable vertices (rows and columns) and
    /// of the frozen vertices (rows only). `mutable[i]` is the old index of
    /// the new vertex i, and likewise for `frozen`.
    pub fn permuted(&self, mutable: &[usize], frozen: &[usize]) -> Self {
        assert_eq!(mutable.len(), self.n, "mutable permutation has wrong length");
        assert_eq!(frozen.len(), self.m, "frozen permutation has wrong length");
        let row_of = |i: usize| {
            if i < self.n {
                mutable[i]
            } else {
                self.n + frozen[i - self.n]
            }
        };
        let entries = (0..self.total())
            .map(|i| {
                (0..self.n)
                    .map(|j| self.entries[row_of(i)][mutable[j]].clone())
                    .collect()
            })
            .collect();
        Self {
            n: self.n,
            m: self.m,
            entries,
        }
    }
}

fn pos(x: &BigInt) -> BigInt {
    if x.is_positive() {
        x.clone()
    } else {
        BigInt::zero()
    }
}

fn neg(x: &BigInt) -> BigInt {
    if x.is_negative() {
        x.clone()
    } else {
        BigInt::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn markov() -> ExtendedExchangeMatrix {
        ExtendedExchangeMatrix::from_i64(
            3,
            0,
            &[vec![0, 2, -2], vec![-2, 0, 2], vec![2, -2, 0]],
        )
        .unwrap()
    }

    fn cyclic_unit() -> ExtendedExchangeMatrix {
        // Oriented triangle x -> y -> z -> x with unit weights.
        ExtendedExchangeMatrix::from_i64(
            3,
            0,
            &[vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]],
        )
        .unwrap()
    }

    #[test]
    fn rejects_non_skew_principal_part() {
        let err = ExtendedExchangeMatrix::from_i64(2, 0, &[vec![0, 1], vec![1, 0]]).unwrap_err();
        assert_eq!(err, QuiverError::NotSkewSymmetric { i: 0, j: 1 });
    }

    #[test]
    fn rejects_nonzero_diagonal() {
        let err = ExtendedExchangeMatrix::from_i64(1, 0, &[vec![3]]).unwrap_err();
        assert_eq!(err, QuiverError::NotSkewSymmetric { i: 0, j: 0 });
    }

    #[test]
    fn rejects_ragged_rows() {
        let err =
            ExtendedExchangeMatrix::from_i64(2, 0, &[vec![0, 1], vec![-1]]).unwrap_err();
        assert!(matches!(err, QuiverError::RaggedMatrix { row: 1, .. }));
    }

    #[test]
    fn rejects_wrong_row_count() {
        let err = ExtendedExchangeMatrix::from_i64(2, 1, &[vec![0, 1], vec![-1, 0]]).unwrap_err();
        assert!(matches!(err, QuiverError::RowCountMismatch { rows: 2, .. }));
    }

    #[test]
    fn mutation_of_markov_quiver_preserves_it_up_to_sign() {
        let b = markov();
        let got = b.mutate(0).unwrap();
        let want = ExtendedExchangeMatrix::from_i64(
            3,
            0,
            &[vec![0, -2, 2], vec![2, 0, -2], vec![-2, 2, 0]],
        )
        .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn mutation_reverses_the_unit_triangle() {
        // Mutating the oriented unit triangle at x reverses its two edges
        // and cancels the composite against the direct edge y -> z, so the
        // cycle opens into the path y -> x -> z.
        let got = cyclic_unit().mutate(0).unwrap();
        let want = ExtendedExchangeMatrix::from_i64(
            3,
            0,
            &[vec![0, -1, 1], vec![1, 0, 0], vec![-1, 0, 0]],
        )
        .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn mutation_is_an_involution_on_a_mixed_example() {
        let b = ExtendedExchangeMatrix::from_i64(
            2,
            1,
            &[vec![0, 3], vec![-3, 0], vec![2, -5]],
        )
        .unwrap();
        for k in 0..2 {
            assert_eq!(b.mutate(k).unwrap().mutate(k).unwrap(), b);
        }
    }

    #[test]
    fn mutation_index_must_be_mutable() {
        let b = ExtendedExchangeMatrix::from_i64(1, 1, &[vec![0], vec![2]]).unwrap();
        assert_eq!(
            b.mutate(1).unwrap_err(),
            QuiverError::MutationIndexOutOfRange { k: 1, n: 1 }
        );
    }

    #[test]
    fn exchange_exponents_split_column_signs() {
        // One mutable vertex with frozen weights (2,3):
        // x x' = y^2 z^3 + 1.
        let b =
            ExtendedExchangeMatrix::from_i64(1, 2, &[vec![0], vec![2], vec![3]]).unwrap();
        let (plus, minus) = b.exchange_exponents(0).unwrap();
        assert_eq!(plus, vec![BigInt::from(0), BigInt::from(2), BigInt::from(3)]);
        assert_eq!(minus, vec![BigInt::from(0), BigInt::from(0), BigInt::from(0)]);
    }

    #[test]
    fn exchange_exponents_with_mixed_signs() {
        // Two mutable, one frozen; column 0 is (0, -a, b).
        let b = ExtendedExchangeMatrix::from_i64(
            2,
            1,
            &[vec![0, 4], vec![-4, 0], vec![5, -6]],
        )
        .unwrap();
        let (plus, minus) = b.exchange_exponents(0).unwrap();
        assert_eq!(plus, vec![0.into(), 0.into(), 5.into()]);
        assert_eq!(minus, vec![0.into(), 4.into(), 0.into()]);
    }

    #[test]
    fn freeze_reorders_newly_frozen_before_old_frozen() {
        // Two mutable x,y with edge weight a and frozen z with weights (b,c).
        let b = ExtendedExchangeMatrix::from_i64(
            2,
            1,
            &[vec![0, 2], vec![-2, 0], vec![3, 5]],
        )
        .unwrap();
        let (f, order) = b.freeze(&[0]).unwrap();
        assert_eq!(order, vec![1, 0, 2]);
        assert_eq!(f.n(), 1);
        assert_eq!(f.m(), 2);
        // Remaining column is y's: rows (y, x, z) give (0, 2, 5).
        let want =
            ExtendedExchangeMatrix::from_i64(1, 2, &[vec![0], vec![2], vec![5]]).unwrap();
        assert_eq!(f, want);
    }

    #[test]
    fn freeze_two_vertices_of_a_triangle() {
        // Cyclic weights (a,b,c) = (2,3,5); freezing y and z leaves column x
        // with rows (x,y,z) = (0,-2,-3).
        let b = ExtendedExchangeMatrix::from_i64(
            3,
            0,
            &[vec![0, 2, 3], vec![-2, 0, 5], vec![-3, -5, 0]],
        )
        .unwrap();
        let (f, order) = b.freeze(&[1, 2]).unwrap();
        assert_eq!(order, vec![0, 1, 2]);
        let want =
            ExtendedExchangeMatrix::from_i64(1, 2, &[vec![0], vec![-2], vec![-3]]).unwrap();
        assert_eq!(f, want);
    }

    #[test]
    fn freeze_rejects_frozen_index() {
        let b = ExtendedExchangeMatrix::from_i64(1, 1, &[vec![0], vec![1]]).unwrap();
        assert_eq!(
            b.freeze(&[1]).unwrap_err(),
            QuiverError::FreezeIndexOutOfRange { k: 1, n: 1 }
        );
    }

    #[test]
    fn mutation_grows_weights_without_overflow() {
        // Repeated mutation of a wild triangle grows entries well past
        // u128 (bit sizes roughly double every other step, so the count
        // below stays cheap); the involution holds at every step.
        let mut b = ExtendedExchangeMatrix::from_i64(
            3,
            0,
            &[vec![0, 3, -3], vec![-3, 0, 3], vec![3, -3, 0]],
        )
        .unwrap();
        for step in 0..24 {
            let k = step % 3;
            let next = b.mutate(k).unwrap();
            assert_eq!(next.mutate(k).unwrap(), b);
            b = next;
        }
        let max = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| b.entry(i, j).magnitude().bits())
            .max()
            .unwrap();
        assert!(max > 128, "entries should exceed 128 bits, got {max}");
    }
}
