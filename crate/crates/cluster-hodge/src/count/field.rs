use super::CountError;

/// The prime field F_p for a prime below 2^31, with arithmetic carried out
/// in u64 and intermediate products widened to u128.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Checks primality by trial division; the primes used for counting are
    /// tiny, so this is never a bottleneck.
    pub fn new(p: u64) -> Result<Self, CountError> {
        if p >= 1 << 31 {
            return Err(CountError::PrimeTooLarge(p));
        }
        if p < 2 {
            return Err(CountError::NotPrime(p));
        }
        let mut d = 2;
        while d * d <= p {
            if p % d == 0 {
                return Err(CountError::NotPrime(p));
            }
            d += 1;
        }
        Ok(Self { p })
    }

    pub fn order(&self) -> u64 {
        self.p
    }

    /// Units of the field: 1..p.
    pub fn units(&self) -> impl Iterator<Item = u64> {
        1..self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a % self.p + self.p - b % self.p) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    /// a^e by square and multiply.
    pub fn pow(&self, a: u64, e: u64) -> u64 {
        let mut base = a % self.p;
        let mut acc = 1u64;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a unit, via Fermat.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0, "zero has no inverse");
        self.pow(a, self.p - 2)
    }

    /// Reduces a signed integer into 0..p.
    pub fn reduce_signed(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_gate() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(17).is_ok());
        assert_eq!(PrimeField::new(1).unwrap_err(), CountError::NotPrime(1));
        assert_eq!(PrimeField::new(15).unwrap_err(), CountError::NotPrime(15));
        assert!(matches!(
            PrimeField::new(1 << 40).unwrap_err(),
            CountError::PrimeTooLarge(_)
        ));
    }

    #[test]
    fn field_axioms_on_f17() {
        let f = PrimeField::new(17).unwrap();
        for a in 0..17 {
            for b in 0..17 {
                assert_eq!(f.add(a, b), (a + b) % 17);
                assert_eq!(f.sub(f.add(a, b), b), a);
                assert_eq!(f.mul(a, b), a * b % 17);
            }
        }
        for a in f.units() {
            assert_eq!(f.mul(a, f.inv(a)), 1);
            assert_eq!(f.pow(a, 16), 1, "Fermat fails at {a}");
        }
    }

    #[test]
    fn signed_reduction_wraps_negatives() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.reduce_signed(-1), 4);
        assert_eq!(f.reduce_signed(-7), 3);
        assert_eq!(f.reduce_signed(12), 2);
    }
}
