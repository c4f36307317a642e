//! Numerical lattice sums: zeta_r of a root system, the direct sum S(s, y; I; Delta) over a
//! symmetric box, the Lerch zeta-function and the depth-two Euler-Zagier sum.

use crate::algebra::numeric::{cpow_neg, hurwitz_zeta, pairwise_reduce, Acc, Precision};
use crate::algebra::rational::{format_rational, frac_part, int, Rational};
use crate::error::{Error, Result};
use crate::rootsys::RootSystemData;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;

/// Arguments of zeta_r or S: one exponent per positive root (canonical order), y in
/// simple-coroot coordinates and the index set I (0-based) for S.
#[derive(Clone, Debug)]
pub struct ZetaArgs {
    pub s: Vec<Complex64>,
    pub y: Vec<Rational>,
    pub i_set: Vec<usize>,
}

impl ZetaArgs {
    pub fn new(d: &RootSystemData, s: Vec<Complex64>, y: Vec<Rational>, i_set: Vec<usize>) -> Result<Self> {
        if s.len() != d.n_pos() {
            return Err(Error::DimensionMismatch { expected: d.n_pos(), got: s.len() });
        }
        if y.len() != d.rank {
            return Err(Error::DimensionMismatch { expected: d.rank, got: y.len() });
        }
        Ok(ZetaArgs { s, y, i_set })
    }

    pub fn real(d: &RootSystemData, s: &[f64]) -> Result<Self> {
        Self::new(d, s.iter().map(|&x| Complex64::new(x, 0.0)).collect(), vec![int(0); d.rank], vec![])
    }

    /// Re s >= 2 on Delta* and Re s > 1 on Delta_{I+}.
    pub fn converges(&self, d: &RootSystemData) -> bool {
        let par = match d.parabolic(&self.i_set) {
            Ok(p) => p,
            Err(_) => return false,
        };
        par.delta_star.iter().all(|&a| self.s[a].re >= 2.0) && par.delta_i_plus.iter().all(|&a| self.s[a].re > 1.0)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SumResult {
    /// [re, im] of the leading double.
    pub value: [f64; 2],
    /// [re, im] of the double-double tail (zero in double mode).
    pub value_lo: [f64; 2],
    pub n: u64,
    pub terms: u64,
    pub cauchy_diff: f64,
    pub precision: Precision,
    pub warnings: Vec<String>,
}

impl SumResult {
    pub fn complex(&self) -> Complex64 {
        Complex64::new(self.value[0], self.value[1])
    }

    pub fn re(&self) -> f64 {
        self.value[0] + self.value_lo[0]
    }

    fn from_parts(full: Acc, half: Acc, n: u64, terms: u64, precision: Precision, warnings: Vec<String>) -> Self {
        let c = full.to_cdd();
        let v = c.to_c64();
        let lo = c.lo_c64();
        SumResult {
            value: [v.re, v.im],
            value_lo: [lo.re, lo.im],
            n,
            terms,
            cauchy_diff: (v - half.value()).norm(),
            precision,
            warnings,
        }
    }

    /// Exact value with no truncation.
    pub fn exact(v: Complex64) -> Self {
        SumResult { value: [v.re, v.im], value_lo: [0.0, 0.0], n: 0, terms: 0, cauchy_diff: 0.0, precision: Precision::Double, warnings: vec![] }
    }

    /// sum_j c_j r_j with Cauchy differences added in absolute value.
    pub fn combine(parts: &[(Complex64, &SumResult)]) -> SumResult {
        let mut v = Complex64::new(0.0, 0.0);
        let mut lo = Complex64::new(0.0, 0.0);
        let mut cd = 0.0;
        let mut warnings = Vec::new();
        let mut n = 0;
        let mut terms = 0;
        let mut precision = Precision::Double;
        for (c, r) in parts {
            v += c * r.complex();
            lo += c * Complex64::new(r.value_lo[0], r.value_lo[1]);
            cd += c.norm() * r.cauchy_diff;
            n = n.max(r.n);
            terms += r.terms;
            if r.precision == Precision::Extended {
                precision = Precision::Extended;
            }
            for w in &r.warnings {
                if !warnings.contains(w) {
                    warnings.push(w.clone());
                }
            }
        }
        SumResult { value: [v.re, v.im], value_lo: [lo.re, lo.im], n, terms, cauchy_diff: cd, precision, warnings }
    }
}

#[derive(Clone, Copy)]
enum Exponent {
    Int(i32),
    Complex(Complex64),
}

fn exponent(s: Complex64) -> Exponent {
    if s.im == 0.0 && s.re == s.re.trunc() && s.re.abs() < 1e6 {
        Exponent::Int(s.re as i32)
    } else {
        Exponent::Complex(s)
    }
}

/// e(<y, lambda>) with y = num / den.
struct Phase {
    num: Vec<i64>,
    den: i64,
    table: Vec<Complex64>,
}

impl Phase {
    fn new(y: &[Rational]) -> Result<Self> {
        let den = y.iter().fold(BigInt::one(), |a, x| a.lcm(x.denom()));
        let den = den.to_i64().filter(|&d| d <= 1 << 24).ok_or_else(|| Error::InvalidInput("denominator of y is too large".into()))?;
        let num = y.iter().map(|x| (frac_part(x) * int(den)).to_integer().to_i64().unwrap()).collect();
        let table = (0..den).map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / den as f64)).collect();
        Ok(Phase { num, den, table })
    }

    fn trivial(&self) -> bool {
        self.den == 1
    }

    #[inline]
    fn at(&self, m: &[i64]) -> Complex64 {
        let k: i64 = self.num.iter().zip(m).map(|(a, b)| a * b).sum();
        self.table[k.rem_euclid(self.den) as usize]
    }
}

struct Summand {
    forms: Vec<Vec<i64>>,
    exps: Vec<Exponent>,
    all_int: bool,
    phase: Phase,
}

impl Summand {
    /// None on a wall.
    #[inline]
    fn eval(&self, m: &[i64]) -> Option<Complex64> {
        let mut re = 1.0f64;
        let mut z = Complex64::new(1.0, 0.0);
        for (f, e) in self.forms.iter().zip(&self.exps) {
            let x: i64 = f.iter().zip(m).map(|(a, b)| a * b).sum();
            if x == 0 {
                return None;
            }
            match *e {
                Exponent::Int(k) => re *= (x as f64).powi(-k),
                Exponent::Complex(s) => z *= cpow_neg(x as f64, s),
            }
        }
        let mut v = if self.all_int { Complex64::new(re, 0.0) } else { z * re };
        if !self.phase.trivial() {
            v *= self.phase.at(m);
        }
        Some(v)
    }
}

/// Sum over the box prod [lo_i, hi_i]; the first coordinate is split across threads and
/// the per-slice accumulators are combined by a fixed pairwise tree.
fn box_sum(summand: &Summand, ranges: &[(i64, i64)], n: i64, precision: Precision, warnings: Vec<String>) -> SumResult {
    let r = ranges.len();
    let half = n / 2;
    let (lo0, hi0) = ranges[0];
    let slices: Vec<(Acc, Acc, u64)> = (lo0..=hi0)
        .into_par_iter()
        .map(|m0| {
            let mut full = Acc::new(precision);
            let mut part = Acc::new(precision);
            let mut count = 0u64;
            let mut m: Vec<i64> = ranges.iter().map(|&(lo, _)| lo).collect();
            m[0] = m0;
            if ranges[1..].iter().any(|&(lo, hi)| lo > hi) {
                return (full, part, 0);
            }
            loop {
                if let Some(v) = summand.eval(&m) {
                    full.add(v);
                    count += 1;
                    if m.iter().all(|x| x.abs() <= half) {
                        part.add(v);
                    }
                }
                // odometer over coordinates 1..r
                let mut k = r - 1;
                loop {
                    if k == 0 {
                        return (full, part, count);
                    }
                    if m[k] < ranges[k].1 {
                        m[k] += 1;
                        break;
                    }
                    m[k] = ranges[k].0;
                    k -= 1;
                }
            }
        })
        .collect();
    let terms = slices.iter().map(|s| s.2).sum();
    let (fulls, halves): (Vec<Acc>, Vec<Acc>) = slices.into_iter().map(|(a, b, _)| (a, b)).unzip();
    let full = pairwise_reduce(fulls, precision);
    let half = pairwise_reduce(halves, precision);
    SumResult::from_parts(full, half, n as u64, terms, precision, warnings)
}

fn divergence_warning(args: &ZetaArgs, d: &RootSystemData) -> Vec<String> {
    if args.converges(d) {
        vec![]
    } else {
        vec![format!(
            "DivergenceWarning: exponents outside Re s >= 2 on Delta*, Re s > 1 on Delta_I+ (I = {:?}); the sum is computed but convergence is not guaranteed",
            args.i_set.iter().map(|i| i + 1).collect::<Vec<_>>()
        )]
    }
}

/// zeta_r(s, y; Delta) truncated to 1 <= m_i <= n.
pub fn zeta_r(d: &RootSystemData, s: &[Complex64], y: &[Rational], n: u64, precision: Precision) -> Result<SumResult> {
    let all: Vec<usize> = (0..d.rank).collect();
    let args = ZetaArgs::new(d, s.to_vec(), y.to_vec(), all)?;
    let summand = Summand {
        forms: d.positive_roots.iter().map(|r| r.coroot_coords.clone()).collect(),
        exps: s.iter().map(|&z| exponent(z)).collect(),
        all_int: s.iter().all(|z| matches!(exponent(*z), Exponent::Int(_))),
        phase: Phase::new(y)?,
    };
    let ranges = vec![(1, n as i64); d.rank];
    Ok(box_sum(&summand, &ranges, n as i64, precision, divergence_warning(&args, d)))
}

/// zeta_r at real exponents with y = 0.
pub fn zeta_r_real(d: &RootSystemData, s: &[f64], n: u64, precision: Precision) -> Result<SumResult> {
    let s: Vec<Complex64> = s.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    zeta_r(d, &s, &vec![int(0); d.rank], n, precision)
}

/// S(s, y; I; Delta) over m_i in [0, n] (i in I), [-n, n] (otherwise), off the walls.
pub fn s_direct(d: &RootSystemData, args: &ZetaArgs, n: u64, precision: Precision) -> Result<SumResult> {
    let par = d.parabolic(&args.i_set)?;
    for &a in &par.delta_star {
        if !matches!(exponent(args.s[a]), Exponent::Int(_)) {
            return Err(Error::InvalidInput(format!("exponent of {} must be an integer off Delta_I+", d.root_label(a))));
        }
    }
    let summand = Summand {
        forms: d.positive_roots.iter().map(|r| r.coroot_coords.clone()).collect(),
        exps: args.s.iter().map(|&z| exponent(z)).collect(),
        all_int: args.s.iter().all(|z| matches!(exponent(*z), Exponent::Int(_))),
        phase: Phase::new(&args.y)?,
    };
    let n = n as i64;
    let ranges: Vec<(i64, i64)> = (0..d.rank).map(|i| if args.i_set.contains(&i) { (0, n) } else { (-n, n) }).collect();
    Ok(box_sum(&summand, &ranges, n, precision, divergence_warning(args, d)))
}

/// phi(s, u) = sum_{n >= 1} e(u n) n^{-s}: the first n terms summed in the chosen precision,
/// the remainder through Hurwitz zeta values over residues modulo the denominator of u.
pub fn lerch_phi(s: Complex64, u: &Rational, n: u64, precision: Precision) -> Result<SumResult> {
    if s.re <= 1.0 {
        return Err(Error::InvalidInput(format!("lerch_phi needs Re s > 1, got {s}")));
    }
    let u = frac_part(u);
    let q = u.denom().to_i64().filter(|&q| q <= 1 << 20).ok_or_else(|| Error::InvalidInput("denominator of u is too large".into()))?;
    let p = u.numer().to_i64().unwrap();
    let e = |k: i64| Complex64::from_polar(1.0, 2.0 * PI * ((p * k).rem_euclid(q)) as f64 / q as f64);
    let tail = |start: u64| -> Complex64 {
        // sum_{m > start} e(u m) m^{-s} = q^{-s} sum_{b=1}^{q} e(u (start + b)) zeta(s, (start + b) / q)
        let mut t = Complex64::new(0.0, 0.0);
        for b in 1..=q {
            let a = (start as f64 + b as f64) / q as f64;
            t += e(start as i64 + b) * hurwitz_zeta(s, a);
        }
        t * cpow_neg(q as f64, s)
    };
    let mut full = Acc::new(precision);
    let mut half = Acc::new(precision);
    for m in 1..=n {
        let v = e(m as i64) * cpow_neg(m as f64, s);
        full.add(v);
        if m <= n / 2 {
            half.add(v);
        }
    }
    full.add(tail(n));
    half.add(tail(n / 2));
    Ok(SumResult::from_parts(full, half, n, n, precision, vec![]))
}

/// sum_{n <= N} n^{-s}.
pub fn truncated_zeta(s: Complex64, n: u64) -> Complex64 {
    let mut acc = Acc::new(Precision::Extended);
    for m in 1..=n {
        acc.add(cpow_neg(m as f64, s));
    }
    acc.value()
}

/// sum over m_1, m_2 >= 1 with m_1 + m_2 <= N of m_1^{-s1} (m_1 + m_2)^{-s2}.
pub fn euler_zagier_2(s1: Complex64, s2: Complex64, n: u64, precision: Precision) -> SumResult {
    let run = |limit: u64| -> Acc {
        let mut acc = Acc::new(precision);
        let mut h = Acc::new(precision);
        for k in 2..=limit {
            h.add(cpow_neg((k - 1) as f64, s1));
            acc.add(h.value() * cpow_neg(k as f64, s2));
        }
        acc
    };
    let full = run(n);
    let half = run(n / 2);
    let warnings = if s2.re > 1.0 && (s1 + s2).re > 2.0 { vec![] } else { vec!["DivergenceWarning: need Re s2 > 1 and Re(s1 + s2) > 2".into()] };
    SumResult::from_parts(full, half, n, n.saturating_sub(1) * n / 2, precision, warnings)
}

/// |zeta_N(s1) zeta_N(s2) - EZ_N(s1, s2) - EZ_N(s2, s1) - zeta_N(s1 + s2)|, which vanishes
/// identically for the triangular truncation.
pub fn harmonic_product_residual(s1: Complex64, s2: Complex64, n: u64) -> f64 {
    let a = euler_zagier_2(s1, s2, n, Precision::Extended).complex();
    let b = euler_zagier_2(s2, s1, n, Precision::Extended).complex();
    let lhs = truncated_zeta(s1, n) * truncated_zeta(s2, n);
    (lhs - a - b - truncated_zeta(s1 + s2, n)).norm()
}

pub fn describe_y(y: &[Rational]) -> Vec<String> {
    y.iter().map(format_rational).collect()
}

pub fn is_zero_vec(y: &[Rational]) -> bool {
    y.iter().all(Zero::is_zero)
}
