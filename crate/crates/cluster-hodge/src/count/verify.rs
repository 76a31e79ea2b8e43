use serde::{Deserialize, Serialize};

use super::poly::{interpolate, CountingPolynomial};
use super::variety::count_variety;
use super::{CountError, PrimeField};
use crate::hodge::{classify, e_polynomial, table_for, Classification};
use crate::quiver::Seed;

/// Primes whose counts feed the polynomial fit.
pub const VERIFY_PRIMES: [u64; 4] = [5, 7, 11, 13];
/// Extra prime held out of the fit and checked against the result.
pub const VERIFY_HELD_OUT: u64 = 17;

/// Outcome of comparing point counts against a table's E-polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// Counts are polynomial and agree with the prediction.
    Pass,
    /// Counts are polynomial but disagree with the prediction.
    Fail,
    /// No smooth table exists, so only the observed polynomial is reported.
    CountOnly,
}

/// Result of verifying a seed's table against finite-field point counts.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    /// Classification tag of the seed.
    pub case: String,
    /// Classification parameters.
    pub params: Vec<i64>,
    /// E-polynomial coefficients predicted by the table, ascending; absent
    /// when the case has no smooth table.
    pub predicted: Option<CountingPolynomial>,
    /// Polynomial fitted through the observed counts, ascending.
    pub observed: CountingPolynomial,
    pub verdict: Verdict,
}

/// Counts points of the seed's variety over the verification primes, fits
/// a polynomial with one held-out prime, and compares it against the
/// E-polynomial of the seed's table.
///
/// Smooth cases yield `Pass` or `Fail`; the singular case yields
/// `CountOnly` with the observed polynomial. Unsupported shapes are
/// errors.
pub fn verify_table(seed: &Seed) -> Result<VerificationReport, CountError> {
    let classified = classify(seed)?;
    match classified.case {
        Classification::NotFiniteType { .. } | Classification::Unsupported { .. } => {
            return Err(CountError::Unsupported(format!(
                "cannot verify: {}",
                classified.case
            )));
        }
        _ => {}
    }
    let dim = seed.dim();
    let mut samples = Vec::with_capacity(VERIFY_PRIMES.len() + 1);
    for p in VERIFY_PRIMES.iter().chain([&VERIFY_HELD_OUT]) {
        let field = PrimeField::new(*p)?;
        samples.push((*p, count_variety(seed, &field)?));
    }
    let observed = interpolate(&samples, dim)?;
    let (predicted, verdict) = if classified.case.smooth() {
        let table = table_for(&classified, false)?;
        let predicted = e_polynomial(&table)?;
        let verdict = if predicted == observed {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        (Some(predicted), verdict)
    } else {
        (None, Verdict::CountOnly)
    };
    Ok(VerificationReport {
        case: classified.case.case_name().to_string(),
        params: classified.case.params(),
        predicted,
        observed,
        verdict,
    })
}
