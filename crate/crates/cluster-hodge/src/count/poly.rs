use std::fmt;

use num::rational::BigRational;
use num::{BigInt, FromPrimitive, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::CountError;

/// A polynomial in q with integer coefficients, stored low degree first.
/// Serializes as the bare coefficient array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CountingPolynomial {
    coefficients: Vec<i64>,
}

impl CountingPolynomial {
    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coefficients: Vec<i64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn zero() -> Self {
        Self {
            coefficients: Vec::new(),
        }
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    /// Leading coefficient is one.
    pub fn is_monic(&self) -> bool {
        self.coefficients.last() == Some(&1)
    }

    pub fn eval(&self, q: i64) -> i64 {
        let mut acc: i128 = 0;
        for &c in self.coefficients.iter().rev() {
            acc = acc * q as i128 + c as i128;
        }
        acc as i64
    }
}

impl fmt::Display for CountingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coefficients.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if first {
                if c < 0 {
                    "-".to_string()
                } else {
                    String::new()
                }
            } else if c < 0 {
                " - ".to_string()
            } else {
                " + ".to_string()
            };
            let mag = c.abs();
            let body = match d {
                0 => format!("{mag}"),
                _ => {
                    let var = if d == 1 {
                        "q".to_string()
                    } else {
                        format!("q^{d}")
                    };
                    if mag == 1 {
                        var
                    } else {
                        format!("{mag}{var}")
                    }
                }
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// Fits a degree-at-most-`degree` integer polynomial through point counts.
///
/// The first `degree + 1` samples determine the candidate by exact Lagrange
/// interpolation over the rationals; every remaining sample is held out and
/// must be matched exactly. At least one held-out sample is required, so
/// `degree + 2` samples is the minimum. Sample points must be distinct.
pub fn interpolate(
    samples: &[(u64, u64)],
    degree: usize,
) -> Result<CountingPolynomial, CountError> {
    let needed = degree + 2;
    if samples.len() < needed {
        return Err(CountError::InsufficientSamples {
            needed,
            degree,
            found: samples.len(),
        });
    }
    for (i, (q, _)) in samples.iter().enumerate() {
        if samples[..i].iter().any(|(r, _)| r == q) {
            return Err(CountError::DuplicateSample(*q));
        }
    }
    let (fit, held_out) = samples.split_at(degree + 1);

    // Lagrange: sum_i y_i prod_{j != i} (X - x_j) / (x_i - x_j), expanded
    // into monomial coefficients over BigRational.
    let rat = |v: BigInt| BigRational::from_integer(v);
    let x: Vec<BigInt> = fit.iter().map(|&(q, _)| BigInt::from(q)).collect();
    let mut coeffs = vec![BigRational::zero(); degree + 1];
    for (i, &(_, y)) in fit.iter().enumerate() {
        // Numerator polynomial prod_{j != i} (X - x_j), ascending.
        let mut num = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, xj) in x.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); num.len() + 1];
            for (d, c) in num.iter().enumerate() {
                next[d + 1] += c.clone();
                next[d] -= c * rat(xj.clone());
            }
            num = next;
            denom *= rat(&x[i] - xj);
        }
        let scale = rat(BigInt::from_u64(y).unwrap()) / denom;
        for (d, c) in num.into_iter().enumerate() {
            coeffs[d] += c * scale.clone();
        }
    }

    let mut out = Vec::with_capacity(coeffs.len());
    for (d, c) in coeffs.iter().enumerate() {
        if !c.is_integer() {
            return Err(CountError::NonIntegerCoefficient { degree: d });
        }
        let v = c.to_integer();
        let small = v
            .to_i64()
            .ok_or(CountError::NonIntegerCoefficient { degree: d })?;
        out.push(small);
    }
    let poly = CountingPolynomial::new(out);

    for &(q, y) in held_out {
        let actual = poly.eval(q as i64);
        if actual.is_negative() || actual as u64 != y {
            return Err(CountError::HeldOutMismatch {
                q,
                expected: y,
                actual,
            });
        }
    }
    Ok(poly)
}
