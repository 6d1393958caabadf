//! Exact rational endpoints for the congruence decision procedures.
//!
//! `Rational` wraps an arbitrary-precision `BigRational` kept in lowest terms
//! with a positive denominator, and serializes as a `"p/q"` string so set
//! specs stay exact through JSON round trips.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::Parse(format!(
                "zero denominator in rational {numerator}/{denominator}"
            )));
        }
        Ok(Rational(BigRational::new(
            BigInt::from(numerator),
            BigInt::from(denominator),
        )))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Largest integer `n` with `n <= self`.
    pub fn floor_int(&self) -> i64 {
        self.0
            .floor()
            .to_integer()
            .to_i64()
            .expect("rational floor exceeds i64 range")
    }

    /// Multiply by `2^j` exactly (j may be negative).
    pub fn times_pow2(&self, j: i32) -> Self {
        let two = BigInt::from(2);
        if j >= 0 {
            Rational(&self.0 * BigRational::from_integer(two.pow(j as u32)))
        } else {
            Rational(
                &self.0
                    * BigRational::new(BigInt::one(), two.pow(j.unsigned_abs())),
            )
        }
    }

    /// Midpoint of `self` and `other`.
    pub fn midpoint(&self, other: &Self) -> Self {
        Rational((&self.0 + &other.0) / BigRational::from_integer(BigInt::from(2)))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().expect("rational outside f64 range")
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let numer = BigInt::from_str(num_str)
            .map_err(|_| Error::Parse(format!("invalid rational numerator in {s:?}")))?;
        let denom = BigInt::from_str(den_str)
            .map_err(|_| Error::Parse(format!("invalid rational denominator in {s:?}")))?;
        if denom.is_zero() {
            return Err(Error::Parse(format!("zero denominator in rational {s:?}")));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);
impl_binop!(Div, div);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Rational::from_str(&s).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        let r: Rational = "6/8".parse().unwrap();
        assert_eq!(r.to_string(), "3/4");
        let n: Rational = "-2".parse().unwrap();
        assert_eq!(n, Rational::integer(-2));
        // denominator sign is normalized away
        let m: Rational = "1/-2".parse().unwrap();
        assert_eq!(m.to_string(), "-1/2");
    }

    #[test]
    fn rejects_zero_denominator() {
        assert!("1/0".parse::<Rational>().is_err());
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn pow2_scaling_and_floor() {
        let r = Rational::new(3, 8).unwrap();
        assert_eq!(r.times_pow2(3), Rational::integer(3));
        assert_eq!(r.times_pow2(-1), Rational::new(3, 16).unwrap());
        assert_eq!(Rational::new(-3, 2).unwrap().floor_int(), -2);
        assert_eq!(Rational::new(3, 2).unwrap().floor_int(), 1);
    }

    #[test]
    fn json_round_trip() {
        let r = Rational::new(-7, 12).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, "\"-7/12\"");
        let back: Rational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
