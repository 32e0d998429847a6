use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use super::{format_rational, Rational};
use crate::error::{Error, Result};

/// Polynomial in `nvars` commuting variables with every term of total degree
/// at most `cap`. Products silently drop anything above the cap, so the type
/// doubles as a truncated power series.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedPoly {
    nvars: usize,
    cap: u32,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl TruncatedPoly {
    pub fn zero(nvars: usize, cap: u32) -> Self {
        Self {
            nvars,
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize, cap: u32) -> Self {
        Self::monomial(nvars, cap, vec![0; nvars], Rational::one())
    }

    /// The monomial `c * x^exps`, or zero when its degree exceeds `cap`.
    pub fn monomial(nvars: usize, cap: u32, exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars, cap);
        p.add_term(exps, c);
        p
    }

    /// `x_i`, zero-based.
    pub fn variable(nvars: usize, cap: u32, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, cap, e, Rational::one())
    }

    /// `Σ_{k≥0} (x^exps)^k` truncated at `cap`, i.e. `1/(1 - x^exps)`.
    pub fn geometric_series(nvars: usize, cap: u32, exps: &[u32]) -> Self {
        let step: u32 = exps.iter().sum();
        assert!(step > 0, "geometric series of a constant");
        let mut p = Self::zero(nvars, cap);
        let mut k = 0;
        while k * step <= cap {
            p.add_term(exps.iter().map(|e| e * k).collect(), Rational::one());
            k += 1;
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() || exps.iter().sum::<u32>() > self.cap {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_vars(self, other)?;
        let mut out = self.clone();
        out.cap = self.cap.min(other.cap);
        out.terms.retain(|e, _| e.iter().sum::<u32>() <= out.cap);
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.nvars, self.cap);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        truncated_mul(self, other, self.cap.min(other.cap))
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        let mut out = Self::zero(self.nvars, self.cap);
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() == d {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    /// Sets every variable to a single `t`; entry `d` is the `t^d` coefficient.
    pub fn specialize_diagonal(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.cap as usize + 1];
        for (e, c) in &self.terms {
            out[e.iter().sum::<u32>() as usize] += c;
        }
        out
    }

    /// Same terms under a new cap; terms above it are dropped. Raising the
    /// cap is only meaningful when `self` is an exact polynomial.
    pub fn with_cap(&self, cap: u32) -> Self {
        let mut out = Self::zero(self.nvars, cap);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    /// First exponent vector (in term order) at which the two differ.
    pub fn first_difference(&self, other: &Self) -> Option<(Vec<u32>, Rational, Rational)> {
        let keys: std::collections::BTreeSet<&Vec<u32>> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().find_map(|k| {
            let (a, b) = (self.coeff(k), other.coeff(k));
            (a != b).then(|| (k.clone(), a, b))
        })
    }
}

fn check_vars(a: &TruncatedPoly, b: &TruncatedPoly) -> Result<()> {
    if a.nvars != b.nvars {
        return Err(Error::VariableMismatch {
            left: a.nvars,
            right: b.nvars,
        });
    }
    Ok(())
}

/// Product of `p1` and `p2` with every term of total degree above `cap`
/// discarded.
pub fn truncated_mul(p1: &TruncatedPoly, p2: &TruncatedPoly, cap: u32) -> Result<TruncatedPoly> {
    check_vars(p1, p2)?;
    let mut out = TruncatedPoly::zero(p1.nvars, cap);
    for (ea, ca) in &p1.terms {
        let da: u32 = ea.iter().sum();
        if da > cap {
            continue;
        }
        for (eb, cb) in &p2.terms {
            if da + eb.iter().sum::<u32>() > cap {
                continue;
            }
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            out.add_term(e, ca * cb);
        }
    }
    Ok(out)
}

impl fmt::Display for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, p)| **p > 0)
                .map(|(v, p)| match p {
                    1 => format!("x{}", v + 1),
                    _ => format!("x{}^{}", v + 1, p),
                })
                .collect();
            match (mono.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{}", format_rational(c))?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{}*{}", format_rational(c), mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedPoly[{} vars, cap {}]({self})", self.nvars, self.cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    #[test]
    fn square_truncated_at_one() {
        let p = TruncatedPoly::one(1, 1).add(&TruncatedPoly::variable(1, 1, 0)).unwrap();
        let sq = truncated_mul(&p, &p, 1).unwrap();
        assert_eq!(sq.coeff(&[0]), int(1));
        assert_eq!(sq.coeff(&[1]), int(2));
        assert_eq!(sq.len(), 2);
    }

    #[test]
    fn identity() {
        let mut p = TruncatedPoly::zero(2, 4);
        p.add_term(vec![1, 2], int(3));
        p.add_term(vec![0, 1], int(-1));
        assert_eq!(truncated_mul(&p, &TruncatedPoly::one(2, 4), 4).unwrap(), p);
    }

    #[test]
    fn geometric_series_cancels() {
        let g = TruncatedPoly::geometric_series(1, 3, &[1]);
        let one_minus_x = TruncatedPoly::one(1, 3)
            .sub(&TruncatedPoly::variable(1, 3, 0))
            .unwrap();
        assert_eq!(truncated_mul(&g, &one_minus_x, 3).unwrap(), TruncatedPoly::one(1, 3));
    }

    #[test]
    fn variable_mismatch() {
        let a = TruncatedPoly::one(1, 2);
        let b = TruncatedPoly::one(2, 2);
        assert!(matches!(
            truncated_mul(&a, &b, 2),
            Err(Error::VariableMismatch { left: 1, right: 2 })
        ));
    }
}
