//! Elements of the cyclotomic field Q(zeta_N) in the power basis modulo Phi_N.

use super::poly::UniPoly;
use super::rational::{format_rational, int, to_f64_pair, Rational};
use crate::error::{Error, Result};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};
use twofloat::TwoFloat;

fn cyclo_cache() -> &'static RwLock<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1, "conductor must be positive");
    if let Some(p) = cyclo_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let q = cyclotomic_poly(d);
            p = div_monic_int(&p, &q);
        }
    }
    let p = Arc::new(p);
    cyclo_cache().write().unwrap().insert(n, p.clone());
    p
}

fn div_monic_int(a: &[i64], m: &[i64]) -> Vec<i64> {
    let dm = m.len() - 1;
    let mut rem = a.to_vec();
    let mut q = vec![0i64; a.len() - dm];
    for i in (0..q.len()).rev() {
        let c = rem[i + dm];
        q[i] = c;
        if c != 0 {
            for (j, mc) in m.iter().enumerate() {
                rem[i + j] -= c * mc;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

pub fn euler_phi(n: u32) -> usize {
    cyclotomic_poly(n).len() - 1
}

/// Reduce a dense polynomial modulo Phi_n, returning exactly phi(n) coordinates.
fn reduce(mut p: Vec<Rational>, n: u32) -> Vec<Rational> {
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    if p.len() > deg {
        for d in (deg..p.len()).rev() {
            if p[d].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut p[d], Rational::zero());
            for j in 0..deg {
                if phi[j] != 0 {
                    p[d - deg + j] -= &c * int(phi[j]);
                }
            }
        }
    }
    p.resize(deg, Rational::zero());
    p
}

/// An element of Q(zeta_N); `coords[i]` multiplies zeta_N^i.
#[derive(Clone, Debug)]
pub struct CycloElem {
    n: u32,
    coords: Vec<Rational>,
}

impl CycloElem {
    pub fn new(n: u32, coords: Vec<Rational>) -> Self {
        CycloElem { n, coords: reduce(coords, n) }.normalized()
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloElem { n: 1, coords: vec![r] }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// zeta_n^a for any integer a.
    pub fn root_of_unity(n: u32, a: i64) -> Self {
        let e = a.rem_euclid(n as i64) as usize;
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = Rational::one();
        Self::new(n, v)
    }

    /// exp(2 pi i x) for rational x.
    pub fn exp_2pi_i(x: &Rational) -> Self {
        let d: u32 = x.denom().try_into().expect("denominator fits in u32");
        let a: i64 = (x.numer() % x.denom()).try_into().expect("numerator fits in i64");
        Self::root_of_unity(d, a)
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.coords.iter().skip(1).all(Zero::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    fn normalized(self) -> Self {
        if self.n != 1 && self.coords.iter().skip(1).all(Zero::is_zero) {
            return CycloElem { n: 1, coords: vec![self.coords[0].clone()] };
        }
        self
    }

    /// Exact embedding into Q(zeta_m) for n | m.
    pub fn lift(&self, m: u32) -> Self {
        assert!(m % self.n == 0, "cannot lift conductor {} to {}", self.n, m);
        if m == self.n {
            return self.clone();
        }
        let step = (m / self.n) as usize;
        let mut v = vec![Rational::zero(); (self.coords.len().max(1) - 1) * step + 1];
        for (i, c) in self.coords.iter().enumerate() {
            v[i * step] = c.clone();
        }
        CycloElem { n: m, coords: reduce(v, m) }
    }

    fn common(&self, o: &Self) -> (Self, Self) {
        if self.n == o.n {
            return (self.clone(), o.clone());
        }
        let m = self.n.lcm(&o.n);
        (self.lift(m), o.lift(m))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CycloElem { n: self.n, coords: self.coords.iter().map(|x| x * c).collect() }.normalized()
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        if self.n == o.n {
            return CycloElem { n: self.n, coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() }.normalized();
        }
        let (a, b) = self.common(o);
        a.add_ref(&b)
    }

    pub fn neg_ref(&self) -> Self {
        CycloElem { n: self.n, coords: self.coords.iter().map(|a| -a).collect() }
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        if self.n == 1 {
            return o.scale(&self.coords[0]);
        }
        if o.n == 1 {
            return self.scale(&o.coords[0]);
        }
        if self.n != o.n {
            let (a, b) = self.common(o);
            return a.mul_ref(&b);
        }
        let mut v = vec![Rational::zero(); self.coords.len() + o.coords.len() - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coords.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        CycloElem::new(self.n, v)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x].
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NonInvertible("zero in Q(zeta_N)".into()));
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        let m = UniPoly::new(cyclotomic_poly(self.n).iter().map(|&c| int(c)).collect());
        let a = UniPoly::new(self.coords.clone());
        let (g, s) = a.ext_gcd(&m);
        if g != UniPoly::one() {
            return Err(Error::NonInvertible(format!("gcd with Phi_{} is {g}", self.n)));
        }
        Ok(CycloElem::new(self.n, s.coeffs().to_vec()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    pub fn eval(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let th = 2.0 * std::f64::consts::PI * (i as f64) / (self.n as f64);
            acc += Complex64::from_polar(1.0, th) * super::rational::to_f64(c);
        }
        acc
    }

    /// Double-double evaluation (real, imaginary).
    pub fn eval_dd(&self) -> (TwoFloat, TwoFloat) {
        let mut re = TwoFloat::from(0.0);
        let mut im = TwoFloat::from(0.0);
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (hi, lo) = to_f64_pair(c);
            let cv = TwoFloat::new_add(hi, lo);
            let (s, co) = unit_angle_dd(i as i64, self.n as i64);
            re += cv * co;
            im += cv * s;
        }
        (re, im)
    }

    pub fn to_json_coords(&self) -> Vec<String> {
        self.coords.iter().map(format_rational).collect()
    }
}

/// (sin, cos) of 2 pi a / n in double-double, with exact values on the quarter turns.
pub fn unit_angle_dd(a: i64, n: i64) -> (TwoFloat, TwoFloat) {
    let a = a.rem_euclid(n);
    let zero = TwoFloat::from(0.0);
    let one = TwoFloat::from(1.0);
    if a == 0 {
        return (zero, one);
    }
    if 4 * a == n {
        return (one, zero);
    }
    if 2 * a == n {
        return (zero, -one);
    }
    if 4 * a == 3 * n {
        return (-one, zero);
    }
    // reduce to |angle| <= pi to help the argument reduction
    let (num, flip) = if 2 * a > n { (n - a, true) } else { (a, false) };
    let th = twofloat::consts::PI * TwoFloat::from(2.0 * num as f64) / TwoFloat::from(n as f64);
    let (s, c) = th.sin_cos();
    if flip { (-s, c) } else { (s, c) }
}

impl PartialEq for CycloElem {
    fn eq(&self, o: &Self) -> bool {
        let (a, b) = self.common(o);
        a.coords == b.coords
    }
}

impl Eq for CycloElem {}

impl std::fmt::Display for CycloElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(r) = self.as_rational() {
            return f.write_str(&format_rational(&r));
        }
        let parts: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format_rational(c),
                _ => format!("({})*z{}^{}", format_rational(c), self.n, i),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(30), 8);
    }

    #[test]
    fn roots_of_unity_multiply() {
        let z = CycloElem::root_of_unity(6, 1);
        assert_eq!(z.pow(6), CycloElem::one());
        assert_eq!(z.pow(3), CycloElem::from_rational(int(-1)));
        // zeta_6^2 = zeta_3 after embedding
        assert_eq!(z.pow(2), CycloElem::root_of_unity(3, 1));
        // 1 + w + w^2 = 0
        let w = CycloElem::root_of_unity(3, 1);
        assert!(CycloElem::one().add_ref(&w).add_ref(&w.pow(2)).is_zero());
    }

    #[test]
    fn mixed_conductors_and_inverse() {
        let a = CycloElem::root_of_unity(4, 1).add_ref(&CycloElem::from_rational(rat(1, 2)));
        let b = CycloElem::root_of_unity(3, 2).scale(&rat(3, 1));
        let p = a.mul_ref(&b);
        assert_eq!(p.conductor(), 12);
        let back = p.mul_ref(&b.inverse().unwrap());
        assert_eq!(back, a);
        let inv = a.inverse().unwrap();
        assert_eq!(inv.mul_ref(&a), CycloElem::one());
    }

    #[test]
    fn numeric_evaluation_matches() {
        let z = CycloElem::root_of_unity(5, 2).scale(&rat(3, 7));
        let v = z.eval();
        let th = 4.0 * std::f64::consts::PI / 5.0;
        assert!((v.re - 3.0 / 7.0 * th.cos()).abs() < 1e-15);
        assert!((v.im - 3.0 / 7.0 * th.sin()).abs() < 1e-15);
        let (re, im) = z.eval_dd();
        assert!((re.hi() - v.re).abs() < 1e-15 && (im.hi() - v.im).abs() < 1e-15);
    }

    #[test]
    fn exp_of_rational() {
        assert_eq!(CycloElem::exp_2pi_i(&rat(1, 2)), CycloElem::from_rational(int(-1)));
        assert_eq!(CycloElem::exp_2pi_i(&rat(-1, 4)), CycloElem::root_of_unity(4, 3));
        assert_eq!(CycloElem::exp_2pi_i(&rat(5, 1)), CycloElem::one());
    }
}
