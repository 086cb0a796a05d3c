//! Exact rationals for edge lengths and chip positions.
//!
//! A thin newtype over [`num_rational::BigRational`] that adds the few things the
//! chain-of-loops code needs: euclidean remainder by a positive modulus, solving
//! `t * step = target (mod modulus)` for the smallest positive integer `t`, and a
//! `"num/den"` string form used by the JSON documents.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(invalid!("zero denominator in {numer}/{denom}"));
        }
        Ok(Rational(BigRational::new(numer.into(), denom.into())))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(invalid!("zero denominator"));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Numerator of the reduced form; carries the sign.
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator of the reduced form; always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    /// Remainder in `[0, modulus)`. `modulus` must be positive.
    pub fn rem_euclid(&self, modulus: &Rational) -> Rational {
        assert!(modulus.is_positive(), "rem_euclid by non-positive modulus {modulus}");
        let quotient = (&self.0 / &modulus.0).floor();
        Rational(&self.0 - quotient * &modulus.0)
    }

    /// `self == other (mod modulus)`.
    pub fn congruent(&self, other: &Rational, modulus: &Rational) -> bool {
        (self - other).rem_euclid(modulus).is_zero()
    }

    /// Smallest integer `t >= 1` with `t * step = self (mod modulus)`, if one exists.
    ///
    /// `step` and `modulus` must be positive. Solved with the extended gcd over the
    /// common denominator, so it is exact and does not scan.
    pub fn smallest_multiple_index(&self, step: &Rational, modulus: &Rational) -> Option<BigInt> {
        assert!(step.is_positive() && modulus.is_positive());
        let common = self.denom().lcm(step.denom()).lcm(modulus.denom());
        let scale = |q: &Rational| q.numer() * (&common / q.denom());
        let (a, b, c) = (scale(step), scale(modulus), scale(self));
        let ext = a.extended_gcd(&b);
        let g = ext.gcd;
        if !(&c % &g).is_zero() {
            return None;
        }
        let period = &b / &g;
        // a * ext.x = g (mod b), so t = (c / g) * ext.x (mod period).
        let mut t = ((&c / &g) * ext.x).mod_floor(&period);
        if t.is_zero() {
            t = period;
        }
        Some(t)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(q: BigRational) -> Self {
        Rational(q)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |part: &str| BigInt::from_str(part.trim()).map_err(|_| invalid!("not a rational number: {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => Rational::from_big(parse(n)?, parse(d)?),
            None => Ok(Rational::from(parse(s)?)),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Int(n) => Ok(Rational::from_integer(n)),
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parses_and_reduces() {
        assert_eq!(q("6/4"), Rational::new(3, 2).unwrap());
        assert_eq!(q("-6/-4").to_string(), "3/2");
        assert_eq!(q("4/-2").to_string(), "-2");
        assert_eq!(q(" 7 ").to_string(), "7");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn euclidean_remainder() {
        let eleven = Rational::from(11);
        assert_eq!(Rational::from(-5).rem_euclid(&eleven), Rational::from(6));
        assert_eq!(Rational::from(22).rem_euclid(&eleven), Rational::zero());
        assert_eq!(q("7/2").rem_euclid(&q("3/2")), q("1/2"));
        assert_eq!(q("-1/3").rem_euclid(&Rational::from(1)), q("2/3"));
    }

    #[test]
    fn multiple_index() {
        let n = Rational::from(13);
        let m = Rational::from(3);
        // 6 * 3 = 18 = 5 (mod 13)
        assert_eq!(q("5").smallest_multiple_index(&m, &n), Some(BigInt::from(6)));
        assert_eq!(Rational::zero().smallest_multiple_index(&m, &n), Some(BigInt::from(13)));
        assert_eq!(q("1/2").smallest_multiple_index(&m, &n), None);
        // step 1/2 on circumference 5/2: 7/2 -> 2 (mod 5/2) needs 4 halves... check directly
        let t = q("1").smallest_multiple_index(&q("1/2"), &q("5/2")).unwrap();
        assert_eq!(t, BigInt::from(2));
    }

    #[test]
    fn serde_accepts_strings_and_integers() {
        let v: Vec<Rational> = serde_json::from_str(r#"["10/4", 3, "-1"]"#).unwrap();
        assert_eq!(v, vec![q("5/2"), q("3"), q("-1")]);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"["5/2","3","-1"]"#);
    }
}
