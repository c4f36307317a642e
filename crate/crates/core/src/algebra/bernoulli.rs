//! Bernoulli numbers and polynomials, and zeta(2k) as an exact multiple of Omega^{2k}.

use super::laurent::CycloLaurent;
use super::rational::{binomial, factorial, int, Rational};
use num_traits::{One, Zero};

/// B_0..=B_n with the convention B_1 = -1/2.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for l in 1..=n {
        let s: Rational = (0..l).map(|j| Rational::from_integer(binomial(l as u32 + 1, j as u32)) * &b[j]).sum();
        b.push(-s / int(l as i64 + 1));
    }
    b
}

/// B_l(x) = sum_j C(l,j) B_j x^{l-j}; accepts x in [0,1] (the value 1 occurs for
/// the one-sided fractional part).
pub fn bernoulli_poly_value(l: usize, x: &Rational) -> Rational {
    let b = bernoulli_numbers(l);
    let mut acc = Rational::zero();
    let mut xp = Rational::one();
    for j in (0..=l).rev() {
        acc += Rational::from_integer(binomial(l as u32, j as u32)) * &b[j] * &xp;
        xp *= x;
    }
    acc
}

/// Coefficients c_j of B_l(x) = sum_j c_j x^j.
pub fn bernoulli_poly_coeffs(l: usize) -> Vec<Rational> {
    let b = bernoulli_numbers(l);
    (0..=l).map(|j| Rational::from_integer(binomial(l as u32, j as u32)) * &b[l - j]).collect()
}

/// zeta(2k) = -B_{2k} Omega^{2k} / (2 (2k)!), with zeta(0) = -1/2.
pub fn zeta_even_from_bernoulli(k: usize) -> CycloLaurent {
    let b = &bernoulli_numbers(2 * k)[2 * k];
    let c = -b / (int(2) * Rational::from_integer(factorial(2 * k as u32)));
    CycloLaurent::omega_pow(2 * k as i32).scale_rational(&c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::numeric::Precision;
    use crate::algebra::rational::rat;

    #[test]
    fn small_values() {
        let b = bernoulli_numbers(8);
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[3], rat(0, 1));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[8], rat(-1, 30));
        assert_eq!(bernoulli_poly_value(0, &rat(0, 1)), rat(1, 1));
        assert_eq!(bernoulli_poly_value(1, &rat(1, 2)), rat(0, 1));
        assert_eq!(bernoulli_poly_value(2, &rat(0, 1)), rat(1, 6));
        assert_eq!(bernoulli_poly_value(1, &rat(1, 1)), rat(1, 2));
    }

    #[test]
    fn recurrence_oracle() {
        // independent oracle: sum_{j<l} C(l,j) B_j = 0 for l >= 2
        let b = bernoulli_numbers(20);
        for l in 2..=20u32 {
            let s: Rational = (0..l).map(|j| Rational::from_integer(binomial(l, j)) * &b[j as usize]).sum();
            assert!(s.is_zero(), "l = {l}");
        }
    }

    #[test]
    fn zeta_even() {
        assert_eq!(zeta_even_from_bernoulli(0).as_rational(), Some(rat(-1, 2)));
        let z2 = zeta_even_from_bernoulli(1).eval(Precision::Double);
        assert!((z2.re - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-14);
        assert_eq!(zeta_even_from_bernoulli(1).coeff(2).as_rational(), Some(rat(-1, 24)));
        let z6 = zeta_even_from_bernoulli(3).eval(Precision::Extended).re;
        let direct: f64 = (1..200000).rev().map(|n| (n as f64).powi(-6)).sum();
        assert!((z6 - direct).abs() < 1e-14);
        assert!((z6 - 1.0173430619844491).abs() < 1e-15);
    }
}
