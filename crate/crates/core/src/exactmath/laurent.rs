use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::{format_rational, int, is_negative, Rational, Scalar};
use crate::error::{Error, Result};

/// Finite sum `Σ c_k q^k` with `k ∈ ℤ` and rational `c_k`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    // exponent -> nonzero coefficient
    terms: BTreeMap<i32, Rational>,
}

impl LaurentPoly {
    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_inv() -> Self {
        Self::q_pow(-1)
    }

    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    /// `q - q^-1`, the Hecke deformation parameter.
    pub fn q_minus_q_inv() -> Self {
        Self::q() - Self::q_inv()
    }

    /// Symmetric quantum integer `[n] = q^(n-1) + q^(n-3) + ... + q^(1-n)`.
    pub fn quantum_int(n: u32) -> Self {
        let n = n as i32;
        let mut out = Self::zero();
        let mut e = n - 1;
        while e >= 1 - n {
            out.add_term(e, Rational::one());
            e -= 2;
        }
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in it {
            out.add_term(e, c);
        }
        out
    }

    pub fn add_term(&mut self, exp: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i32) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Value at `q = q0`. Fails when `q0 = 0` and a negative power is present.
    pub fn eval(&self, q0: &Rational) -> Result<Rational> {
        if q0.is_zero() && self.min_exp().is_some_and(|e| e < 0) {
            return Err(Error::Pole {
                at: format_rational(q0),
            });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * pow(q0, *e);
        }
        Ok(acc)
    }

    /// Dense coefficient vector of `q^-min_exp * self`, lowest degree first.
    pub(crate) fn to_dense(&self) -> (i32, Vec<Rational>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub(crate) fn from_dense(offset: i32, coeffs: &[Rational]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (offset + i as i32, c.clone())),
        )
    }
}

fn pow(x: &Rational, e: i32) -> Rational {
    if e >= 0 {
        num::pow(x.clone(), e as usize)
    } else {
        num::pow(x.recip(), (-e) as usize)
    }
}

/// Exact product of two Laurent polynomials.
pub fn laurent_mul(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (ea, ca) in &a.terms {
        for (eb, cb) in &b.terms {
            out.add_term(ea + eb, ca * cb);
        }
    }
    out
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Add for LaurentPoly {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for LaurentPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        laurent_mul(&self, &rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        laurent_mul(self, rhs)
    }
}

impl Scalar for LaurentPoly {}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(int(c))
    }
}

/// Compact ASCII rendering, highest power first: `q^2+1+q^-2`, `2/3*q-q^-1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = is_negative(c);
            let mag = if neg { -c.clone() } else { c.clone() };
            if neg {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let unit = mag.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{}", format_rational(&mag))?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{}*q", format_rational(&mag))?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{}*q^{e}", format_rational(&mag))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn q() -> LaurentPoly {
        LaurentPoly::q()
    }
    fn qi() -> LaurentPoly {
        LaurentPoly::q_inv()
    }

    #[test]
    fn difference_of_squares() {
        let got = laurent_mul(&(q() - qi()), &(q() + qi()));
        assert_eq!(got, LaurentPoly::q_pow(2) - LaurentPoly::q_pow(-2));
    }

    #[test]
    fn identity_multiplication() {
        let p = LaurentPoly::from_terms([(3, rat(2, 5)), (-1, rat(-7, 1))]);
        assert_eq!(laurent_mul(&LaurentPoly::one(), &p), p);
    }

    #[test]
    fn quantum_three_times_q_minus_inverse() {
        let three = LaurentPoly::quantum_int(3);
        assert_eq!(three.to_string(), "q^2+1+q^-2");
        let got = laurent_mul(&three, &(q() - qi()));
        assert_eq!(got, LaurentPoly::q_pow(3) - LaurentPoly::q_pow(-3));
    }

    #[test]
    fn eval_and_pole() {
        let p = q() * q();
        assert_eq!(p.eval(&rat(7, 3)).unwrap(), rat(49, 9));
        assert!(qi().eval(&rat(0, 1)).is_err());
        assert_eq!(LaurentPoly::quantum_int(3).eval(&rat(1, 1)).unwrap(), rat(3, 1));
    }

    #[test]
    fn display() {
        let p = LaurentPoly::from_terms([(1, rat(2, 3)), (-1, rat(-1, 1))]);
        assert_eq!(p.to_string(), "2/3*q-q^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
