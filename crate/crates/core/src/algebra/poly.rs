//! Univariate and bivariate polynomials over the rationals.

use super::rational::{format_rational, int, Rational};
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense polynomial, `coeffs[i]` is the coefficient of `u^i`. Trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| int(x)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// c * u^n
    pub fn monomial(c: Rational, n: usize) -> Self {
        let mut v = vec![Rational::zero(); n + 1];
        v[n] = c;
        Self::new(v)
    }

    /// 1 + u + ... + u^{d-1} = (u^d - 1)/(u - 1)
    pub fn q_integer(d: usize) -> Self {
        Self::new(vec![Rational::one(); d])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Exact division with remainder.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or_else(|| Error::NonDivisible("division by zero polynomial".into()))?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let lead = d.lead();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    /// Quotient that must be exact; `NonDivisible` otherwise.
    pub fn exact_div(&self, d: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonDivisible(format!("({self}) / ({d}) leaves {r}")))
        }
    }

    /// Monic gcd and Bezout cofactor: returns (g, s) with s*self = g mod m.
    pub fn ext_gcd(&self, m: &UniPoly) -> (UniPoly, UniPoly) {
        let (mut r0, mut r1) = (m.clone(), self.clone());
        let (mut s0, mut s1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = &s0 - &(&q * &s1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        let l = r0.lead();
        if l.is_zero() {
            return (r0, s0);
        }
        let inv = l.recip();
        (r0.scale(&inv), s0.scale(&inv))
    }

    pub fn to_text(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&format_rational(&a));
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", format_rational(&a), mono));
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("u"))
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::new(v)
    }
}

impl Mul for UniPoly {
    type Output = UniPoly;
    fn mul(self, o: UniPoly) -> UniPoly {
        &self * &o
    }
}

/// Polynomial in two commuting variables (u_L, u_S), sparse.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0, 0)
    }

    pub fn monomial(c: Rational, a: usize, b: usize) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(a, b, c);
        p
    }

    pub fn add_term(&mut self, a: usize, b: usize, c: Rational) {
        let e = self.terms.entry((a, b)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: usize, b: usize) -> Rational {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * num_traits::pow(x.clone(), a) * num_traits::pow(y.clone(), b))
            .sum()
    }

    /// Substitute u_S = value, leaving a polynomial in u_L.
    pub fn specialize_second(&self, value: &Rational) -> UniPoly {
        let mut acc = UniPoly::zero();
        for (&(a, b), c) in &self.terms {
            acc = &acc + &UniPoly::monomial(c * num_traits::pow(value.clone(), b), a);
        }
        acc
    }

    /// Substitute u_L = value, leaving a polynomial in u_S.
    pub fn specialize_first(&self, value: &Rational) -> UniPoly {
        let mut acc = UniPoly::zero();
        for (&(a, b), c) in &self.terms {
            acc = &acc + &UniPoly::monomial(c * num_traits::pow(value.clone(), a), b);
        }
        acc
    }

    /// Diagonal u_L = u_S = u.
    pub fn diagonal(&self) -> UniPoly {
        let mut acc = UniPoly::zero();
        for (&(a, b), c) in &self.terms {
            acc = &acc + &UniPoly::monomial(c.clone(), a + b);
        }
        acc
    }

    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (&(a, b), c) in &self.terms {
            let mut mono = Vec::new();
            match a {
                0 => {}
                1 => mono.push("uL".to_string()),
                _ => mono.push(format!("uL^{a}")),
            }
            match b {
                0 => {}
                1 => mono.push("uS".to_string()),
                _ => mono.push(format!("uS^{b}")),
            }
            let coef = format_rational(c);
            let s = if mono.is_empty() {
                coef
            } else if c.is_one() {
                mono.join("*")
            } else {
                format!("{coef}*{}", mono.join("*"))
            };
            parts.push(s);
        }
        parts.join(" + ")
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, o: &BiPoly) -> BiPoly {
        let mut r = self.clone();
        for (&(a, b), c) in &o.terms {
            r.add_term(a, b, c.clone());
        }
        r
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, o: &BiPoly) -> BiPoly {
        let mut r = BiPoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &o.terms {
                r.add_term(a + x, b + y, c * d);
            }
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn display_format() {
        let p = UniPoly::from_ints(&[1, 2, 2, 1]);
        assert_eq!(p.to_string(), "1 + 2*u + 2*u^2 + u^3");
        assert_eq!(UniPoly::from_ints(&[0, -1, 0, 3]).to_string(), "-u + 3*u^3");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = &UniPoly::q_integer(2) * &UniPoly::q_integer(3);
        assert_eq!(a, UniPoly::from_ints(&[1, 2, 2, 1]));
        assert_eq!(a.exact_div(&UniPoly::q_integer(2)).unwrap(), UniPoly::q_integer(3));
        assert!(matches!(a.exact_div(&UniPoly::q_integer(4)), Err(Error::NonDivisible(_))));
    }

    #[test]
    fn bezout_inverse_mod() {
        // 1/(x) mod x^2+x+1 is -(x+1)
        let m = UniPoly::from_ints(&[1, 1, 1]);
        let x = UniPoly::from_ints(&[0, 1]);
        let (g, s) = x.ext_gcd(&m);
        assert_eq!(g, UniPoly::one());
        let (_, r) = (&s * &x).div_rem(&m).unwrap();
        assert_eq!(r, UniPoly::one());
    }

    #[test]
    fn bipoly_specializations() {
        // (1 + uL)(1 + uS)
        let p = &(&BiPoly::one() + &BiPoly::monomial(rat(1, 1), 1, 0)) * &(&BiPoly::one() + &BiPoly::monomial(rat(1, 1), 0, 1));
        assert_eq!(p.specialize_second(&rat(1, 1)), UniPoly::from_ints(&[2, 2]));
        assert_eq!(p.diagonal(), UniPoly::from_ints(&[1, 2, 1]));
        assert_eq!(p.eval(&rat(-1, 1), &rat(1, 1)), rat(0, 1));
    }
}
