//! Exact scalars, Laurent polynomials in `q`, rational functions, truncated
//! multivariate power series and sparse exact linear algebra.
//!
//! Nothing in this crate touches floating point. Every coefficient is a
//! [`Rational`] or built out of rationals.

mod laurent;
mod matrix;
mod ratfun;
mod truncated;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, One, Signed, Zero};

pub use laurent::{laurent_mul, LaurentPoly};
pub use matrix::{matrix_rank, Matrix, SpanBasis, SparseVec};
pub use ratfun::{ratfun_eval, RationalFunction};
pub use truncated::{truncated_mul, TruncatedPoly};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num::BigRational;

/// Commutative ring operations shared by every coefficient type.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

/// A [`Scalar`] in which every nonzero element is invertible.
pub trait Field: Scalar {
    fn try_inv(&self) -> Option<Self>;
}

impl Scalar for Rational {}

impl Field for Rational {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// `"p/q"` or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

/// Generic evaluation point used for deformed rank computations.
pub fn default_q() -> Rational {
    rat(7, 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("7/3").unwrap(), rat(7, 3));
        assert_eq!(parse_rational(" -4 ").unwrap(), int(-4));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
        assert_eq!(format_rational(&int(5)), "5");
    }
}
