//! Floating-point support: precision modes, double-double complex accumulation,
//! deterministic pairwise reduction and Euler-Maclaurin zeta evaluation.

use super::bernoulli::bernoulli_numbers;
use super::rational::to_f64;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;
use twofloat::TwoFloat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Precision {
    Double,
    #[default]
    Extended,
}

impl Precision {
    /// Reads `WEYLZETA_PRECISION` (double | extended), defaulting to extended.
    pub fn from_env() -> Self {
        match std::env::var("WEYLZETA_PRECISION").ok().as_deref().map(str::to_ascii_lowercase).as_deref() {
            Some("double") => Precision::Double,
            _ => Precision::Extended,
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "double" => Some(Precision::Double),
            "extended" => Some(Precision::Extended),
            _ => None,
        }
    }
}

/// Complex number with double-double parts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cdd {
    pub re: TwoFloat,
    pub im: TwoFloat,
}

impl Cdd {
    pub fn new(re: TwoFloat, im: TwoFloat) -> Self {
        Cdd { re, im }
    }

    pub fn zero() -> Self {
        Cdd::new(TwoFloat::from(0.0), TwoFloat::from(0.0))
    }

    pub fn from_c64(z: Complex64) -> Self {
        Cdd::new(TwoFloat::from(z.re), TwoFloat::from(z.im))
    }

    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.hi() + self.re.lo(), self.im.hi() + self.im.lo())
    }

    /// Low-order parts, i.e. the rounding error of `to_c64`.
    pub fn lo_c64(self) -> Complex64 {
        let c = self.to_c64();
        let re = self.re - TwoFloat::from(c.re);
        let im = self.im - TwoFloat::from(c.im);
        Complex64::new(re.hi(), im.hi())
    }

    /// Multiply by i^e.
    pub fn mul_i_pow(self, e: i32) -> Self {
        match e.rem_euclid(4) {
            0 => self,
            1 => Cdd::new(-self.im, self.re),
            2 => Cdd::new(-self.re, -self.im),
            _ => Cdd::new(self.im, -self.re),
        }
    }

    pub fn norm(self) -> f64 {
        self.to_c64().norm()
    }
}

impl Add for Cdd {
    type Output = Cdd;
    fn add(self, o: Cdd) -> Cdd {
        Cdd::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for Cdd {
    type Output = Cdd;
    fn sub(self, o: Cdd) -> Cdd {
        Cdd::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for Cdd {
    type Output = Cdd;
    fn neg(self) -> Cdd {
        Cdd::new(-self.re, -self.im)
    }
}

impl Mul for Cdd {
    type Output = Cdd;
    fn mul(self, o: Cdd) -> Cdd {
        Cdd::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
}

/// Running sum in the chosen precision.
#[derive(Clone, Copy, Debug)]
pub enum Acc {
    Double(Complex64),
    Extended(Cdd),
}

impl Acc {
    pub fn new(p: Precision) -> Self {
        match p {
            Precision::Double => Acc::Double(Complex64::new(0.0, 0.0)),
            Precision::Extended => Acc::Extended(Cdd::zero()),
        }
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        match self {
            Acc::Double(a) => *a += z,
            Acc::Extended(a) => {
                a.re += z.re;
                a.im += z.im;
            }
        }
    }

    #[inline]
    pub fn add_real(&mut self, x: f64) {
        match self {
            Acc::Double(a) => a.re += x,
            Acc::Extended(a) => a.re += x,
        }
    }

    pub fn merge(self, o: Acc) -> Acc {
        match (self, o) {
            (Acc::Double(a), Acc::Double(b)) => Acc::Double(a + b),
            (Acc::Extended(a), Acc::Extended(b)) => Acc::Extended(a + b),
            (a, b) => Acc::Extended(a.to_cdd() + b.to_cdd()),
        }
    }

    pub fn to_cdd(self) -> Cdd {
        match self {
            Acc::Double(a) => Cdd::from_c64(a),
            Acc::Extended(a) => a,
        }
    }

    pub fn value(self) -> Complex64 {
        self.to_cdd().to_c64()
    }
}

/// Fixed-shape pairwise reduction; the tree depends only on the length.
pub fn pairwise_reduce(mut v: Vec<Acc>, p: Precision) -> Acc {
    if v.is_empty() {
        return Acc::new(p);
    }
    while v.len() > 1 {
        let mut next = Vec::with_capacity(v.len().div_ceil(2));
        let mut it = v.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a.merge(b)),
                None => next.push(a),
            }
        }
        v = next;
    }
    v.pop().unwrap()
}

fn bernoulli_f64() -> &'static [f64] {
    static B: OnceLock<Vec<f64>> = OnceLock::new();
    B.get_or_init(|| bernoulli_numbers(40).iter().map(to_f64).collect())
}

/// Hurwitz zeta sum_{n>=0} (n+a)^{-s}, Euler-Maclaurin with `m` explicit terms.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Complex64 {
    assert!(a > 0.0, "Hurwitz parameter must be positive");
    assert!((s - 1.0).norm() > 1e-12, "pole at s = 1");
    let m = 24usize;
    let b = bernoulli_f64();
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 0..m {
        sum += cpow_neg(n as f64 + a, s);
    }
    let x = m as f64 + a;
    let xs = cpow_neg(x, s);
    sum += xs * x / (s - 1.0) + xs * 0.5;
    // sum_k B_{2k}/(2k)! s(s+1)...(s+2k-2) x^{-s-2k+1}
    let mut rising = s;
    let mut fact = 2.0f64;
    let mut xp = xs / x;
    for k in 1..=14 {
        let term = rising * xp * (b[2 * k] / fact);
        sum += term;
        if term.norm() < 1e-20 * sum.norm() {
            break;
        }
        rising *= (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        fact *= ((2 * k + 1) * (2 * k + 2)) as f64;
        xp /= x * x;
    }
    sum
}

pub fn riemann_zeta(s: Complex64) -> Complex64 {
    hurwitz_zeta(s, 1.0)
}

pub fn riemann_zeta_real(s: f64) -> f64 {
    riemann_zeta(Complex64::new(s, 0.0)).re
}

/// x^{-s} for real x > 0.
#[inline]
pub fn cpow_neg(x: f64, s: Complex64) -> Complex64 {
    if s.im == 0.0 {
        let e = s.re;
        if e == e.trunc() && e.abs() < 64.0 {
            return Complex64::new(x.powi(-(e as i32)), 0.0);
        }
        return Complex64::new(x.powf(-e), 0.0);
    }
    (-s * x.ln()).exp()
}
