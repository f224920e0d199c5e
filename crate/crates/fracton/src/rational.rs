//! Exact reduced fractions.
//!
//! `Fraction` is the single currency for every number-theoretic quantity in
//! this crate: Farey elements, filling factors and Hausdorff labels alike.
//! Values are always stored reduced with a positive denominator, and the
//! integers underneath are arbitrary precision so deep Farey orders and
//! far-out class members never overflow.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact rational in lowest terms with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fraction(BigRational);

impl Fraction {
    /// Builds the reduced fraction `numer/denom`.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Fraction(BigRational::new(numer.into(), denom)))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Fraction(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Farey mediant: (p1 + p2) / (q1 + q2), reduced.
    pub fn mediant(&self, other: &Self) -> Self {
        Fraction(BigRational::new(
            self.numer() + other.numer(),
            self.denom() + other.denom(),
        ))
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Largest integer not exceeding the value.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn abs(&self) -> Self {
        Fraction(self.0.abs())
    }

    /// Nearest f64; exact rationals become the closest double.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Canonical wire form, always `p/q` (integers as `n/1`).
    pub fn wire(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

/// Plain form: integers print bare, everything else as `p/q`.
impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Accepts `[+-]digits` or `[+-]digits/digits` with no spaces.
    fn from_str(text: &str) -> Result<Self> {
        let malformed = || Error::ParseError(text.to_string());
        let (numer_text, denom_text) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };

        let digits = numer_text
            .strip_prefix('+')
            .or_else(|| numer_text.strip_prefix('-'))
            .unwrap_or(numer_text);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let numer: BigInt = numer_text.parse().map_err(|_| malformed())?;

        let denom: BigInt = match denom_text {
            None => BigInt::from(1),
            Some(d) => {
                if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(malformed());
                }
                d.parse().map_err(|_| malformed())?
            }
        };
        if denom.is_zero() {
            return Err(malformed());
        }
        Ok(Fraction(BigRational::new(numer, denom)))
    }
}

macro_rules! fraction_binop {
    ($Op:ident, $method:ident) => {
        impl $Op for &Fraction {
            type Output = Fraction;
            fn $method(self, rhs: &Fraction) -> Fraction {
                Fraction((&self.0).$method(&rhs.0))
            }
        }

        impl $Op for Fraction {
            type Output = Fraction;
            fn $method(self, rhs: Fraction) -> Fraction {
                (&self).$method(&rhs)
            }
        }
    };
}

fraction_binop!(Add, add);
fraction_binop!(Sub, sub);
fraction_binop!(Mul, mul);

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction(-&self.0)
    }
}

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction(-self.0)
    }
}
