use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A rational prime below 2^32, so that products of two residues fit in a `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u64);

/// Residue-field scalar: an integer in `[0, p)`.
pub type FpScalar = u64;

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 {
            return Err(Error::InvalidInput(format!("prime {p} exceeds 2^32")));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Reduce a signed integer into `[0, p)`.
    #[inline]
    pub fn from_i64(self, x: i64) -> FpScalar {
        x.rem_euclid(self.0 as i64) as u64
    }

    #[inline]
    pub fn add(self, a: FpScalar, b: FpScalar) -> FpScalar {
        (a + b) % self.0
    }

    #[inline]
    pub fn sub(self, a: FpScalar, b: FpScalar) -> FpScalar {
        (a + self.0 - b) % self.0
    }

    #[inline]
    pub fn neg(self, a: FpScalar) -> FpScalar {
        (self.0 - a) % self.0
    }

    #[inline]
    pub fn mul(self, a: FpScalar, b: FpScalar) -> FpScalar {
        a * b % self.0
    }

    pub fn pow(self, mut base: FpScalar, mut exp: u64) -> FpScalar {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: FpScalar) -> FpScalar {
        assert!(!a.is_multiple_of(self.0), "inverse of zero in F_{}", self.0);
        self.pow(a, self.0 - 2)
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(97).is_ok());
        assert_eq!(Prime::new(1), Err(Error::NotPrime(1)));
        assert_eq!(Prime::new(15), Err(Error::NotPrime(15)));
    }

    #[test]
    fn inverse_by_search() {
        let p = Prime::new(3).unwrap();
        // 2 * 2 = 4 = 1 mod 3
        let brute = (1..3).find(|&y| p.mul(2, y) == 1).unwrap();
        assert_eq!(p.inv(2), brute);
        assert_eq!(brute, 2);
    }
}
