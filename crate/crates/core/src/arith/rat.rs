//! Exact rationals with p-adic valuation.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::prime::{FpScalar, Prime};
use crate::error::{Error, Result};

/// p-adic valuation of a rational: a finite integer, or `Infinite` for zero.
///
/// `Finite(_) < Infinite`, matching the order on valuations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// `self >= k`, treating infinity as larger than everything.
    pub fn at_least(self, k: i64) -> bool {
        match self {
            Valuation::Finite(v) => v >= k,
            Valuation::Infinite => true,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// A rational number in lowest terms with positive denominator.
///
/// The prime is not part of the value; valuation and reduction take it as an
/// argument so one matrix can be inspected at several primes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PRational(BigRational);

/// Largest `k` with `p^k | n`, for nonzero `n`.
pub fn int_valuation(n: &BigInt, p: Prime) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p.get());
    let mut n = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

impl PRational {
    pub fn new(num: BigInt, den: BigInt) -> Self {
        PRational(BigRational::new(num, den))
    }

    pub fn from_int(n: i64) -> Self {
        PRational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        PRational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        PRational(BigRational::zero())
    }

    pub fn one() -> Self {
        PRational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn recip(&self) -> Self {
        PRational(self.0.recip())
    }

    pub fn val_p(&self, p: Prime) -> Valuation {
        if self.0.is_zero() {
            return Valuation::Infinite;
        }
        Valuation::Finite(int_valuation(self.0.numer(), p) - int_valuation(self.0.denom(), p))
    }

    pub fn is_integral(&self, p: Prime) -> bool {
        self.val_p(p).at_least(0)
    }

    /// Multiply by `p^k` (k may be negative).
    pub fn shift(&self, p: Prime, k: i64) -> Self {
        let pk = BigInt::from(p.get()).pow(k.unsigned_abs() as u32);
        if k >= 0 {
            PRational(&self.0 * BigRational::from_integer(pk))
        } else {
            PRational(&self.0 / BigRational::from_integer(pk))
        }
    }

    /// Residue in `F_p`; fails on negative valuation.
    pub fn reduce(&self, p: Prime) -> Result<FpScalar> {
        if !self.is_integral(p) {
            return Err(Error::NotIntegral {
                what: self.to_string(),
                row: 0,
                col: 0,
            });
        }
        let m = BigInt::from(p.get());
        let num = self.0.numer().mod_floor(&m).to_u64().unwrap();
        let den = self.0.denom().mod_floor(&m).to_u64().unwrap();
        Ok(p.mul(num, p.inv(den)))
    }

    /// The integer in `[0, modulus)` congruent to this p-integral rational.
    ///
    /// `modulus` must be a power of `p`; the denominator is a p-unit and is
    /// inverted modulo it.
    pub fn residue_mod(&self, modulus: &BigInt) -> BigInt {
        if modulus.is_one() {
            return BigInt::zero();
        }
        let den_inv = mod_inverse(&self.0.denom().mod_floor(modulus), modulus)
            .expect("denominator must be a unit modulo a p-power");
        (self.0.numer() * den_inv).mod_floor(modulus)
    }

    /// Split `x = p^v * u` with `u` a p-unit; `None` for zero.
    pub fn split_unit(&self, p: Prime) -> Option<(i64, PRational)> {
        let v = self.val_p(p).finite()?;
        Some((v, self.shift(p, -v)))
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

impl FromStr for PRational {
    type Err = Error;

    /// Accepts `a` or `a/b` with an optional leading minus on `a`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            let digits = t.strip_prefix('-').unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("bad rational literal {s:?}")));
            }
            t.parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad rational literal {s:?}")))
        };
        match s.split_once('/') {
            None => Ok(PRational::from_bigint(parse_int(s)?)),
            Some((a, b)) => {
                let num = parse_int(a)?;
                if b.starts_with('-') {
                    return Err(Error::Parse(format!("negative denominator in {s:?}")));
                }
                let den = parse_int(b)?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(PRational::new(num, den))
            }
        }
    }
}

impl fmt::Display for PRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl From<i64> for PRational {
    fn from(n: i64) -> Self {
        PRational::from_int(n)
    }
}

impl From<BigInt> for PRational {
    fn from(n: BigInt) -> Self {
        PRational::from_bigint(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&PRational> for &PRational {
            type Output = PRational;
            fn $m(self, rhs: &PRational) -> PRational {
                PRational((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<PRational> for PRational {
            type Output = PRational;
            fn $m(self, rhs: PRational) -> PRational {
                PRational(self.0.$m(rhs.0))
            }
        }
        impl $tr<&PRational> for PRational {
            type Output = PRational;
            fn $m(self, rhs: &PRational) -> PRational {
                PRational(self.0.$m(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&PRational> for PRational {
    fn add_assign(&mut self, rhs: &PRational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&PRational> for PRational {
    fn sub_assign(&mut self, rhs: &PRational) {
        self.0 -= &rhs.0;
    }
}

impl Neg for PRational {
    type Output = PRational;
    fn neg(self) -> PRational {
        PRational(-self.0)
    }
}

impl Neg for &PRational {
    type Output = PRational;
    fn neg(self) -> PRational {
        PRational(-&self.0)
    }
}

impl PRational {
    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn sign(&self) -> Sign {
        self.0.numer().sign()
    }
}

/// Serialized as a string `"a"` or `"a/b"`.
impl serde::Serialize for PRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Accepts a string in the [`FromStr`] grammar or a JSON integer.
impl<'de> serde::Deserialize<'de> for PRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl serde::de::Visitor<'_> for V {
            type Value = PRational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational string like \"-3/4\" or an integer")
            }

            fn visit_str<E: serde::de::Error>(self, v: &str) -> std::result::Result<PRational, E> {
                v.parse().map_err(|e: Error| E::custom(e.to_string()))
            }

            fn visit_i64<E: serde::de::Error>(self, v: i64) -> std::result::Result<PRational, E> {
                Ok(PRational::from_int(v))
            }

            fn visit_u64<E: serde::de::Error>(self, v: u64) -> std::result::Result<PRational, E> {
                Ok(PRational::from_bigint(BigInt::from(v)))
            }
        }
        d.deserialize_any(V)
    }
}
