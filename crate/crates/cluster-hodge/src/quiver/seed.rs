use num::bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{ExtendedExchangeMatrix, QuiverError};

/// A seed: an extended exchange matrix with vertex labels and the list of
/// mutations applied since construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    matrix: ExtendedExchangeMatrix,
    labels: Vec<String>,
    history: Vec<usize>,
}

/// Serialized form: `{"n", "m", "matrix", "labels"?}` with `matrix` given
/// as (n+m) rows of n integers, mutable rows first.
#[derive(Serialize, Deserialize)]
struct SeedJson {
    n: usize,
    m: usize,
    matrix: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Seed {
    /// Wraps a matrix with default labels x1..xn for mutable and y1..ym for
    /// frozen vertices.
    pub fn new(matrix: ExtendedExchangeMatrix) -> Self {
        let labels = default_labels(matrix.n(), matrix.m());
        Self {
            matrix,
            labels,
            history: Vec::new(),
        }
    }

    /// Wraps a matrix with caller-supplied labels, one per vertex.
    pub fn with_labels(
        matrix: ExtendedExchangeMatrix,
        labels: Vec<String>,
    ) -> Result<Self, QuiverError> {
        if labels.len() != matrix.total() {
            return Err(QuiverError::LabelCountMismatch {
                expected: matrix.total(),
                found: labels.len(),
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(QuiverError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Self {
            matrix,
            labels,
            history: Vec::new(),
        })
    }

    pub fn matrix(&self) -> &ExtendedExchangeMatrix {
        &self.matrix
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Mutations applied so far, oldest first.
    pub fn history(&self) -> &[usize] {
        &self.history
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn m(&self) -> usize {
        self.matrix.m()
    }

    /// Dimension of the associated variety: one coordinate per vertex.
    pub fn dim(&self) -> usize {
        self.matrix.total()
    }

    /// Mutates the seed in direction k, appending k to the history.
    pub fn mutate(&self, k: usize) -> Result<Seed, QuiverError> {
        let matrix = self.matrix.mutate(k)?;
        let mut history = self.history.clone();
        history.push(k);
        Ok(Seed {
            matrix,
            labels: self.labels.clone(),
            history,
        })
    }

    /// Freezes the given mutable vertices, producing the seed of the
    /// subvariety where those cluster variables are inverted. Labels follow
    /// the row reordering; history starts fresh because the result is a
    /// different cluster variety.
    pub fn freeze(&self, frozen: &[usize]) -> Result<Seed, QuiverError> {
        let mut sorted: Vec<usize> = frozen.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let (matrix, order) = self.matrix.freeze(&sorted)?;
        let labels = order.iter().map(|&i| self.labels[i].clone()).collect();
        Ok(Seed {
            matrix,
            labels,
            history: Vec::new(),
        })
    }

    /// Applies a permutation of mutable and frozen vertices; see
    /// [`ExtendedExchangeMatrix::permuted`] for the index convention.
    pub fn permuted(&self, mutable: &[usize], frozen: &[usize]) -> Seed {
        let matrix = self.matrix.permuted(mutable, frozen);
        let labels = (0..self.dim())
            .map(|i| {
                if i < self.n() {
                    self.labels[mutable[i]].clone()
                } else {
                    self.labels[self.n() + frozen[i - self.n()]].clone()
                }
            })
            .collect();
        Seed {
            matrix,
            labels,
            history: self.history.clone(),
        }
    }

    /// Parses the documented JSON input format.
    pub fn from_json(text: &str) -> Result<Seed, QuiverError> {
        let raw: SeedJson =
            serde_json::from_str(text).map_err(|e| QuiverError::Json(e.to_string()))?;
        let matrix = ExtendedExchangeMatrix::from_i64(raw.n, raw.m, &raw.matrix)?;
        match raw.labels {
            Some(labels) => Seed::with_labels(matrix, labels),
            None => Ok(Seed::new(matrix)),
        }
    }

    /// Serializes to the documented JSON input format. Fails if an entry
    /// does not fit in 64 bits.
    pub fn to_json(&self) -> Result<String, QuiverError> {
        let mut matrix = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let mut row = Vec::with_capacity(self.n());
            for j in 0..self.n() {
                row.push(self.matrix.entry_i64(i, j)?);
            }
            matrix.push(row);
        }
        let raw = SeedJson {
            n: self.n(),
            m: self.m(),
            matrix,
            labels: Some(self.labels.clone()),
        };
        Ok(serde_json::to_string_pretty(&raw).expect("seed serialization cannot fail"))
    }

}

fn default_labels(n: usize, m: usize) -> Vec<String> {
    let mut labels = Vec::with_capacity(n + m);
    for i in 0..n {
        labels.push(format!("x{}", i + 1));
    }
    for j in 0..m {
        labels.push(format!("y{}", j + 1));
    }
    labels
}

/// Builds the canonical seed with one mutable vertex and frozen weights
/// (a, b): the variety x x' = y^a z^b + 1 inside a two-torus worth of
/// frozen coordinates.
pub fn seed_one_mutable(a: i64, b: i64) -> Seed {
    let matrix =
        ExtendedExchangeMatrix::from_i64(1, 2, &[vec![0], vec![a], vec![b]]).unwrap();
    Seed::with_labels(matrix, labels(&["x", "y", "z"])).unwrap()
}

/// Canonical seed with two mutable vertices joined by weight a and one
/// frozen vertex with weights (b, c).
pub fn seed_two_mutable(a: i64, b: i64, c: i64) -> Seed {
    let matrix =
        ExtendedExchangeMatrix::from_i64(2, 1, &[vec![0, a], vec![-a, 0], vec![b, c]]).unwrap();
    Seed::with_labels(matrix, labels(&["x", "y", "z"])).unwrap()
}

/// Canonical seed with three mutable vertices and weights (a, b, c) on the
/// pairs (x,y), (x,z), (y,z).
pub fn seed_three_mutable(a: i64, b: i64, c: i64) -> Seed {
    let matrix = ExtendedExchangeMatrix::from_i64(
        3,
        0,
        &[vec![0, a, b], vec![-a, 0, c], vec![-b, -c, 0]],
    )
    .unwrap();
    Seed::with_labels(matrix, labels(&["x", "y", "z"])).unwrap()
}

/// Seed of the rank-0 cluster variety: a torus of the given dimension.
pub fn seed_torus(r: usize) -> Seed {
    let rows: Vec<Vec<BigInt>> = vec![Vec::new(); r];
    Seed::new(ExtendedExchangeMatrix::new(0, r, rows).unwrap())
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_labels_cover_both_blocks() {
        let s = seed_torus(2);
        assert_eq!(s.labels(), ["y1", "y2"]);
        let s = Seed::new(
            ExtendedExchangeMatrix::from_i64(1, 1, &[vec![0], vec![3]]).unwrap(),
        );
        assert_eq!(s.labels(), ["x1", "y1"]);
    }

    #[test]
    fn labels_must_be_distinct_and_complete() {
        let m = ExtendedExchangeMatrix::from_i64(1, 1, &[vec![0], vec![3]]).unwrap();
        assert_eq!(
            Seed::with_labels(m.clone(), vec!["x".into()]).unwrap_err(),
            QuiverError::LabelCountMismatch { expected: 2, found: 1 }
        );
        assert_eq!(
            Seed::with_labels(m, vec!["x".into(), "x".into()]).unwrap_err(),
            QuiverError::DuplicateLabel("x".into())
        );
    }

    #[test]
    fn mutate_records_history() {
        let s = seed_two_mutable(2, 2, 1);
        let s = s.mutate(0).unwrap().mutate(1).unwrap().mutate(0).unwrap();
        assert_eq!(s.history(), [0, 1, 0]);
    }

    #[test]
    fn freeze_one_vertex_of_the_two_mutable_seed() {
        // Freezing x leaves the one-mutable seed in y with weights (a, c).
        let s = seed_two_mutable(3, 5, 7);
        let f = s.freeze(&[0]).unwrap();
        assert_eq!(f.labels(), ["y", "x", "z"]);
        assert_eq!(f.matrix(), seed_one_mutable(3, 7).matrix());
    }

    #[test]
    fn freeze_two_vertices_of_the_triangle() {
        // Freezing y,z in the triangle (a,b,c) leaves x with column (-a,-b):
        // the exchange relation becomes x x' = 1 + y^a z^b.
        let s = seed_three_mutable(2, 3, 5);
        let f = s.freeze(&[1, 2]).unwrap();
        assert_eq!(f.labels(), ["x", "y", "z"]);
        let (plus, minus) = f.matrix().exchange_exponents(0).unwrap();
        assert_eq!(plus, vec![0.into(), 0.into(), 0.into()]);
        assert_eq!(minus, vec![0.into(), 2.into(), 3.into()]);
    }

    #[test]
    fn json_round_trip_is_stable() {
        let s = seed_two_mutable(2, 2, 1);
        let text = s.to_json().unwrap();
        let back = Seed::from_json(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_json().unwrap(), text);
    }

    #[test]
    fn json_rejects_malformed_input() {
        assert!(matches!(
            Seed::from_json("{\"n\": 2}").unwrap_err(),
            QuiverError::Json(_)
        ));
        let bad_skew = r#"{"n": 2, "m": 0, "matrix": [[0, 1], [1, 0]]}"#;
        assert_eq!(
            Seed::from_json(bad_skew).unwrap_err(),
            QuiverError::NotSkewSymmetric { i: 0, j: 1 }
        );
        let bad_dims = r#"{"n": 2, "m": 1, "matrix": [[0, 1], [-1, 0]]}"#;
        assert!(matches!(
            Seed::from_json(bad_dims).unwrap_err(),
            QuiverError::RowCountMismatch { .. }
        ));
    }

    #[test]
    fn permutation_swaps_rows_columns_and_labels() {
        let s = seed_two_mutable(-4, 6, 7);
        let p = s.permuted(&[1, 0], &[0]);
        assert_eq!(p.labels(), ["y", "x", "z"]);
        assert_eq!(p.matrix(), seed_two_mutable(4, 7, 6).matrix());
    }
}
