use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{One, Zero};

use super::{format_rational, laurent_mul, Field, LaurentPoly, Rational, Scalar};
use crate::error::{Error, Result};

/// Quotient of two Laurent polynomials, an element of `ℚ(q)`.
///
/// Equality is decided by cross-multiplication. Constructors additionally
/// cancel the polynomial gcd so that repeated arithmetic does not blow up.
#[derive(Clone)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    /// Panics if `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut f = Self { num, den };
        f.reduce();
        f
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn constant(c: Rational) -> Self {
        LaurentPoly::constant(c).into()
    }

    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        if self.den.len() == 1 {
            let (e, c) = self.den.terms().next().unwrap();
            Some(self.num.shift(-e).scale(&c.recip()))
        } else {
            None
        }
    }

    pub fn eval(&self, q0: &Rational) -> Result<Rational> {
        ratfun_eval(self, q0)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        let (num_off, num_dense) = self.num.to_dense();
        let (den_off, den_dense) = self.den.to_dense();
        let g = poly_gcd(num_dense.clone(), den_dense.clone());
        let n = poly_div_exact(&num_dense, &g);
        let mut d = poly_div_exact(&den_dense, &g);
        let lead = d.last().unwrap().clone();
        let mut n = n;
        for c in n.iter_mut() {
            *c /= &lead;
        }
        for c in d.iter_mut() {
            *c /= &lead;
        }
        self.num = LaurentPoly::from_dense(num_off - den_off, &n);
        self.den = LaurentPoly::from_dense(0, &d);
    }
}

/// Exact value of `f` at `q = q0`.
pub fn ratfun_eval(f: &RationalFunction, q0: &Rational) -> Result<Rational> {
    let den = f.den.eval(q0)?;
    if den.is_zero() {
        return Err(Error::Pole {
            at: format_rational(q0),
        });
    }
    Ok(f.num.eval(q0)? / den)
}

// Dense univariate helpers, coefficients lowest degree first, no trailing zeros.

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_rem(mut a: Vec<Rational>, b: &[Rational]) -> Vec<Rational> {
    let lead = b.last().unwrap();
    while a.len() >= b.len() && !a.is_empty() {
        let shift = a.len() - b.len();
        let factor = a.last().unwrap() / lead;
        for (i, c) in b.iter().enumerate() {
            a[shift + i] -= &factor * c;
        }
        a = trim(a);
    }
    a
}

fn poly_gcd(a: Vec<Rational>, b: Vec<Rational>) -> Vec<Rational> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = poly_rem(a, &b);
        a = b;
        b = r;
    }
    a
}

fn poly_div_exact(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if b.len() == 1 {
        return a.iter().map(|c| c / &b[0]).collect();
    }
    let mut rem = a.to_vec();
    let mut quot = vec![Rational::zero(); a.len() + 1 - b.len()];
    let lead = b.last().unwrap();
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let factor = rem.last().unwrap() / lead;
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= &factor * c;
        }
        quot[shift] = factor;
        rem = trim(rem);
    }
    debug_assert!(rem.is_empty(), "inexact polynomial division");
    quot
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        laurent_mul(&self.num, &other.den) == laurent_mul(&other.num, &self.den)
    }
}

impl Eq for RationalFunction {}

impl Zero for RationalFunction {
    fn zero() -> Self {
        LaurentPoly::zero().into()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        LaurentPoly::one().into()
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(num: LaurentPoly) -> Self {
        Self {
            num,
            den: LaurentPoly::one(),
        }
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add for RationalFunction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self::new(self.num + rhs.num, self.den);
        }
        Self::new(
            laurent_mul(&self.num, &rhs.den) + laurent_mul(&rhs.num, &self.den),
            laurent_mul(&self.den, &rhs.den),
        )
    }
}

impl Sub for RationalFunction {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for RationalFunction {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for RationalFunction {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::new(
            laurent_mul(&self.num, &rhs.num),
            laurent_mul(&self.den, &rhs.den),
        )
    }
}

impl Div for RationalFunction {
    type Output = Self;
    /// Panics on division by zero.
    fn div(self, rhs: Self) -> Self {
        self * rhs.try_inv().expect("division by zero rational function")
    }
}

impl Scalar for RationalFunction {}

impl Field for RationalFunction {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // clear coefficient denominators so (q-q^-1)/2 prints as such
        let mut lcm = num::BigInt::one();
        for (_, c) in self.num.terms().chain(self.den.terms()) {
            lcm = num::Integer::lcm(&lcm, c.denom());
        }
        let scale = Rational::from_integer(lcm);
        let num = self.num.scale(&scale);
        let den = self.den.scale(&scale);
        let num_str = if num.len() > 1 {
            format!("({num})")
        } else {
            num.to_string()
        };
        match den.as_constant() {
            Some(c) if c.is_one() => write!(f, "{num}"),
            Some(c) => write!(f, "{num_str}/{}", format_rational(&c)),
            None => write!(f, "{num_str}/({den})"),
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    fn q() -> LaurentPoly {
        LaurentPoly::q()
    }

    #[test]
    fn eval_examples() {
        let odd = RationalFunction::new(
            q() - LaurentPoly::q_inv(),
            q() + LaurentPoly::q_inv(),
        );
        assert_eq!(ratfun_eval(&odd, &int(1)).unwrap(), int(0));

        let sq: RationalFunction = (q() * q()).into();
        assert_eq!(ratfun_eval(&sq, &rat(7, 3)).unwrap(), rat(49, 9));

        let inv3 = RationalFunction::new(LaurentPoly::one(), LaurentPoly::quantum_int(3));
        assert_eq!(ratfun_eval(&inv3, &int(1)).unwrap(), rat(1, 3));
    }

    #[test]
    fn pole_is_reported() {
        let f = RationalFunction::new(LaurentPoly::one(), q() - LaurentPoly::one());
        assert!(matches!(ratfun_eval(&f, &int(1)), Err(Error::Pole { .. })));
    }

    #[test]
    fn gcd_cancellation_keeps_equality() {
        // (q^2 - 1)/(q - 1) = q + 1
        let f = RationalFunction::new(q() * q() - LaurentPoly::one(), q() - LaurentPoly::one());
        let g: RationalFunction = (q() + LaurentPoly::one()).into();
        assert_eq!(f, g);
        assert_eq!(f.denominator(), &LaurentPoly::one());
    }

    #[test]
    fn display_forms() {
        let f = RationalFunction::new(q() - LaurentPoly::q_inv(), LaurentPoly::from(2));
        assert_eq!(f.to_string(), "(q-q^-1)/2");
    }
}
