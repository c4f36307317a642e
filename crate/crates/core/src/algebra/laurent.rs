//! Laurent polynomials in the symbol Omega = 2*pi*sqrt(-1) with cyclotomic coefficients.

use super::cyclo::CycloElem;
use super::numeric::{Cdd, Precision};
use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use twofloat::TwoFloat;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CycloLaurent {
    terms: BTreeMap<i32, CycloElem>,
}

impl CycloLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(CycloElem::one())
    }

    pub fn constant(c: CycloElem) -> Self {
        Self::monomial(c, 0)
    }

    pub fn rational(r: Rational) -> Self {
        Self::constant(CycloElem::from_rational(r))
    }

    /// c * Omega^e
    pub fn monomial(c: CycloElem, e: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        CycloLaurent { terms }
    }

    pub fn omega_pow(e: i32) -> Self {
        Self::monomial(CycloElem::one(), e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &CycloElem)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i32) -> CycloElem {
        self.terms.get(&e).cloned().unwrap_or_else(CycloElem::zero)
    }

    /// Least common conductor of all coefficients.
    pub fn conductor(&self) -> u32 {
        self.terms.values().fold(1u32, |acc, c| acc.lcm(&c.conductor()))
    }

    fn insert_add(&mut self, e: i32, c: &CycloElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.add_ref(c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn add_assign_ref(&mut self, o: &Self) {
        for (e, c) in &o.terms {
            self.insert_add(*e, c);
        }
    }

    pub fn scale(&self, c: &CycloElem) -> Self {
        let mut r = Self::zero();
        for (e, v) in &self.terms {
            r.insert_add(*e, &v.mul_ref(c));
        }
        r
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        CycloLaurent { terms: self.terms.iter().map(|(e, v)| (*e, v.scale(c))).collect() }
    }

    pub fn shift(&self, de: i32) -> Self {
        CycloLaurent { terms: self.terms.iter().map(|(e, v)| (e + de, v.clone())).collect() }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Inverse, available for monomials c*Omega^e only.
    pub fn inverse(&self) -> Result<Self> {
        if self.terms.len() != 1 {
            return Err(Error::NonInvertible(format!("Laurent polynomial with {} terms", self.terms.len())));
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Ok(Self::monomial(c.inverse()?, -e))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Rational value when the element is a rational constant.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).and_then(|c| c.as_rational()),
            _ => None,
        }
    }

    pub fn eval(&self, prec: Precision) -> Complex64 {
        match prec {
            Precision::Double => self.eval_f64(),
            Precision::Extended => self.eval_dd().to_c64(),
        }
    }

    pub fn eval_f64(&self) -> Complex64 {
        let omega = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
        self.terms.iter().map(|(e, c)| c.eval() * omega.powi(*e)).sum()
    }

    pub fn eval_dd(&self) -> Cdd {
        let two_pi = twofloat::consts::PI * TwoFloat::from(2.0);
        let mut acc = Cdd::zero();
        for (e, c) in &self.terms {
            let (re, im) = c.eval_dd();
            // Omega^e = (2 pi)^e * i^e
            let mag = two_pi.powi(*e);
            let z = Cdd::new(re * mag, im * mag);
            acc = acc + z.mul_i_pow(*e);
        }
        acc
    }

    pub fn to_json(&self) -> LaurentJson {
        let n = self.conductor();
        LaurentJson {
            conductor: n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson { omega_pow: *e, coords: c.lift(n).coords().iter().map(format_rational).collect() })
                .collect(),
        }
    }

    pub fn from_json(j: &LaurentJson) -> Result<Self> {
        let mut r = Self::zero();
        for t in &j.terms {
            let coords = t.coords.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
            let c = CycloElem::new(j.conductor, coords);
            r.insert_add(t.omega_pow, &c);
        }
        Ok(r)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub conductor: u32,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub omega_pow: i32,
    pub coords: Vec<String>,
}

impl Serialize for CycloLaurent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloLaurent {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = LaurentJson::deserialize(d)?;
        CycloLaurent::from_json(&j).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for CycloLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| match e {
                0 => format!("({c})"),
                _ => format!("({c})*Omega^{e}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Add for &CycloLaurent {
    type Output = CycloLaurent;
    fn add(self, o: &CycloLaurent) -> CycloLaurent {
        let mut r = self.clone();
        r.add_assign_ref(o);
        r
    }
}

impl Sub for &CycloLaurent {
    type Output = CycloLaurent;
    fn sub(self, o: &CycloLaurent) -> CycloLaurent {
        let mut r = self.clone();
        r.add_assign_ref(&-o);
        r
    }
}

impl Neg for &CycloLaurent {
    type Output = CycloLaurent;
    fn neg(self) -> CycloLaurent {
        CycloLaurent { terms: self.terms.iter().map(|(e, c)| (*e, c.neg_ref())).collect() }
    }
}

impl Mul for &CycloLaurent {
    type Output = CycloLaurent;
    fn mul(self, o: &CycloLaurent) -> CycloLaurent {
        let mut r = CycloLaurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.insert_add(e1 + e2, &c1.mul_ref(c2));
            }
        }
        r
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycloLaurent {
            type Output = CycloLaurent;
            fn $m(self, o: CycloLaurent) -> CycloLaurent {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycloLaurent {
    type Output = CycloLaurent;
    fn neg(self) -> CycloLaurent {
        -&self
    }
}

impl std::iter::Sum for CycloLaurent {
    fn sum<I: Iterator<Item = CycloLaurent>>(iter: I) -> Self {
        let mut acc = CycloLaurent::zero();
        for x in iter {
            acc.add_assign_ref(&x);
        }
        acc
    }
}
