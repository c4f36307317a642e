//! Closed forms of P for A_r with I = {2..r} and of F for C_3 with I = {2, 3}.

use crate::algebra::bernoulli::{bernoulli_numbers, bernoulli_poly_value};
use crate::algebra::cyclo::CycloElem;
use crate::algebra::laurent::CycloLaurent;
use crate::algebra::rational::{binomial, factorial, frac_part, int, rat, Rational};
use crate::algebra::series::{series_factor_expand, SeriesShape, TruncatedSeries};
use crate::error::Result;
use crate::rootsys::RootSystemData;
use num_complex::Complex64;
use num_traits::Zero;
use std::sync::Arc;

/// m_{ij} for the A_r closed form; `m[p - 2]` holds m_p for 2 <= p <= r.
fn m_ij(m: &[i64], i: usize, j: usize) -> i64 {
    let mp = |p: usize| m[p - 2];
    if i < j {
        (i..j).map(mp).sum()
    } else {
        -(j..i).map(mp).sum::<i64>()
    }
}

fn compositions(n: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// P((k_i)_{2<=i<=r+1}, y, (m_i)_{2<=i<=r}; {2..r}; A_r).
/// `k[i - 2]` is the exponent of t_i (the root with coroot e_1 - e_i), `y` has r entries
/// (y_1..y_r) and `m` has r - 1 entries (m_2..m_r).
pub fn closed_form_p_ar(k: &[u32], y: &[Rational], m: &[i64]) -> CycloLaurent {
    let r = k.len();
    assert_eq!(y.len(), r);
    assert_eq!(m.len(), r - 1);
    let kf: Rational = Rational::from_integer(k.iter().map(|&x| factorial(x)).product());
    let y1 = frac_part(&y[0]);
    let yv = |i: usize| &y[i - 1];
    let mut total = CycloLaurent::zero();
    for j in 2..=r + 1 {
        if (2..=r + 1).any(|i| i != j && k[i - 2] == 0) {
            continue;
        }
        let mut angle = Rational::zero();
        for i in 2..j {
            angle += int(m[i - 2]) * (yv(i) - &y[0]);
        }
        for i in j..=r {
            angle += int(m[i - 2]) * yv(i);
        }
        let phase = CycloElem::exp_2pi_i(&angle);
        let others: Vec<usize> = (2..=r + 1).filter(|&i| i != j).collect();
        let kj = k[j - 2];
        let mut inner = CycloLaurent::zero();
        for l in compositions(kj, r) {
            // l[i - 2] = l_i
            let lj = l[j - 2];
            let mut c = bernoulli_poly_value(lj as usize, &y1) / Rational::from_integer(factorial(lj));
            let mut omega_pow = 0i32;
            for &i in &others {
                let (ki, li) = (k[i - 2], l[i - 2]);
                let sign = if (ki - 1) % 2 == 0 { int(1) } else { int(-1) };
                let e = ki + li;
                c *= sign * Rational::from_integer(binomial(ki + li - 1, li)) / num_traits::pow(int(m_ij(m, i, j)), e as usize);
                omega_pow -= e as i32;
            }
            inner.add_assign_ref(&CycloLaurent::monomial(CycloElem::from_rational(c), omega_pow));
        }
        total.add_assign_ref(&inner.scale(&phase).scale_rational(&kf));
    }
    total
}

/// Variable order of the C_3 closed form: t_1, t_{-2}, t_{+2}, t_{-3}, t_{+3}, attached to
/// the roots with coroots e_1, e_1 - e_2, e_1 + e_2, e_1 - e_3, e_1 + e_3.
pub const C3_VARS: [&str; 5] = ["t1", "t-2", "t+2", "t-3", "t+3"];

/// Simple-coroot coordinates of the coroots behind `C3_VARS`.
pub const C3_COROOTS: [[i64; 3]; 5] = [[1, 1, 1], [1, 0, 0], [1, 2, 2], [1, 1, 0], [1, 1, 2]];

/// For each C3 closed-form variable, its position among the positive roots of `d`.
pub fn c3_root_positions(d: &RootSystemData) -> Vec<usize> {
    C3_COROOTS.iter().map(|c| d.positive_roots.iter().position(|r| r.coroot_coords == c).expect("C3 coroot")).collect()
}

/// (variable with the Bernoulli factor, [(target, c)]) for t_target / (t_target - t_beta - Omega c).
fn c3_terms(m2: i64, m3: i64) -> [(usize, [(usize, i64); 4]); 5] {
    [
        (1, [(3, m2), (2, 2 * (m2 + m3)), (4, m2 + 2 * m3), (0, m2 + m3)]),
        (3, [(1, -m2), (2, m2 + 2 * m3), (4, 2 * m3), (0, m3)]),
        (2, [(1, -2 * (m2 + m3)), (3, -(m2 + 2 * m3)), (4, -m2), (0, -(m2 + m3))]),
        (4, [(1, -(m2 + 2 * m3)), (3, -2 * m3), (2, m2), (0, -m3)]),
        (0, [(1, -(m2 + m3)), (3, -m3), (2, m2 + m3), (4, m3)]),
    ]
}

/// F((t_1, t_{+-2}, t_{+-3}), 0, (m_2, m_3); {2,3}; C_3) as a truncated series.
pub fn closed_form_f_c3(m2: i64, m3: i64, max_deg: &[u32]) -> Result<TruncatedSeries> {
    let shape: Arc<SeriesShape> = SeriesShape::new(C3_VARS.iter().map(|s| s.to_string()).collect(), max_deg.to_vec(), None);
    let terms = c3_terms(m2, m3);
    let bern = bernoulli_numbers(*max_deg.iter().max().unwrap_or(&0) as usize + 1);
    let mut total = TruncatedSeries::zero(&shape);
    for (beta, factors) in terms {
        let mut b = TruncatedSeries::zero(&shape);
        for l in 0..=max_deg[beta] {
            let mut e = vec![0; 5];
            e[beta] = l;
            b.add_term(e, &CycloLaurent::rational(&bern[l as usize] / Rational::from_integer(factorial(l))));
        }
        let mut prod = b;
        for (target, c) in factors {
            let f = series_factor_expand(&shape, target, &[(beta, CycloLaurent::one())], &CycloLaurent::omega_pow(1).scale_rational(&int(c)))?;
            prod = prod.mul(&f);
        }
        total = total.add(&prod);
    }
    Ok(total)
}

/// The same closed form evaluated at a complex point.
pub fn closed_form_f_c3_numeric(m2: i64, m3: i64, t: &[Complex64; 5]) -> Complex64 {
    let omega = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    c3_terms(m2, m3)
        .iter()
        .map(|(beta, factors)| {
            let tb = t[*beta];
            let mut v = tb / (tb.exp() - 1.0);
            for &(target, c) in factors {
                v *= t[target] / (t[target] - tb - omega * c as f64);
            }
            v
        })
        .sum()
}

/// The displayed nine-term value of P((2,1,1,1,1), 0, (m_2, m_3); {2,3}; C_3).
pub fn c3_p_21111(m2: i64, m3: i64) -> CycloLaurent {
    let (a, b) = (int(m2), int(m3));
    let s = &a + &b;
    let t = &a + int(2) * &b;
    let p = |x: &Rational, e: usize| num_traits::pow(x.clone(), e);
    // coefficients of pi^{-6}
    let six = rat(1, 32) / (p(&a, 2) * p(&b, 3) * &t) + rat(1, 32) / (p(&a, 2) * p(&s, 3) * &t)
        - rat(1, 32) / (p(&b, 4) * p(&s, 2))
        - rat(5, 64) / (&a * p(&b, 4) * &t)
        - rat(1, 32) / (&a * p(&b, 3) * p(&t, 2))
        - rat(1, 32) / (p(&b, 2) * p(&s, 4))
        + rat(5, 64) / (&a * p(&s, 4) * &t)
        + rat(1, 32) / (&a * p(&s, 3) * p(&t, 2));
    let four = rat(1, 96) / (p(&b, 2) * p(&s, 2));
    // 1/pi^6 = -64 Omega^{-6}, 1/pi^4 = 16 Omega^{-4}
    let mut v = CycloLaurent::monomial(CycloElem::from_rational(six * int(-64)), -6);
    v.add_assign_ref(&CycloLaurent::monomial(CycloElem::from_rational(four * int(16)), -4));
    v
}

/// Coefficient of prod t^k / k! in a truncated series.
pub fn series_p(s: &TruncatedSeries, k: &[u32]) -> CycloLaurent {
    let kf: Rational = Rational::from_integer(k.iter().map(|&x| factorial(x)).product());
    s.coeff(k).scale_rational(&kf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli_gen::{expand_p, BernoulliContext};
    use crate::rootsys::parse_system;

    #[test]
    fn a2_closed_form_matches_expansion() {
        let a2 = parse_system("A2").unwrap();
        let ctx = BernoulliContext::new(&a2, &[1], None).unwrap();
        // Delta* positions of t_2 (e1-e2) and t_3 (e1-e3)
        let pos = |c: &[i64]| ctx.par.delta_star.iter().position(|&r| a2.positive_roots[r].coroot_coords == c).unwrap();
        let (p2, p3) = (pos(&[1, 0]), pos(&[1, 1]));
        for k2 in 0..=3u32 {
            for k3 in 0..=3u32 {
                let mut k = vec![0; 2];
                k[p2] = k2;
                k[p3] = k3;
                for m in 1..=3 {
                    let e = expand_p(&ctx, &[0, m], &[int(0), int(0)], &k).unwrap();
                    let c = closed_form_p_ar(&[k2, k3], &[int(0), int(0)], &[m]);
                    assert_eq!(e, c, "k=({k2},{k3}) m={m}");
                }
            }
        }
    }

    #[test]
    fn c3_series_coefficient_matches_nine_terms() {
        let s = closed_form_f_c3(1, 2, &[2, 1, 1, 1, 1]).unwrap();
        assert_eq!(series_p(&s, &[2, 1, 1, 1, 1]), c3_p_21111(1, 2));
    }

    #[test]
    fn c3_closed_form_evaluates_like_the_general_formula() {
        use crate::bernoulli_gen::residue::eval_f;
        use num_complex::Complex64;
        let c3 = parse_system("C3").unwrap();
        let ctx = BernoulliContext::new(&c3, &[1, 2], None).unwrap();
        let roots = c3_root_positions(&c3);
        let t = [0.31, -0.27, 0.44, 0.19, -0.36].map(|x| Complex64::new(x, 0.5 * x + 0.1));
        for (m2, m3) in [(1, 1), (1, 2), (2, 1)] {
            let mut ts = vec![Complex64::new(0.0, 0.0); 5];
            for (v, &r) in roots.iter().enumerate() {
                ts[ctx.star_pos(r).unwrap()] = t[v];
            }
            let general = eval_f(&ctx, &[int(0), int(0), int(0)], &[0, m2, m3], &ts).unwrap();
            let closed = closed_form_f_c3_numeric(m2, m3, &t);
            assert!((general - closed).norm() < 1e-12, "{general} {closed}");
        }
    }

    #[test]
    fn c3_expansion_matches_nine_terms() {
        let c3 = parse_system("C3").unwrap();
        let ctx = BernoulliContext::new(&c3, &[1, 2], None).unwrap();
        let mut k = vec![0; 5];
        for (v, &r) in c3_root_positions(&c3).iter().enumerate() {
            k[ctx.star_pos(r).unwrap()] = [2, 1, 1, 1, 1][v];
        }
        for (m2, m3) in [(1, 1), (1, 2), (2, 1)] {
            let e = expand_p(&ctx, &[0, m2, m3], &[int(0), int(0), int(0)], &k).unwrap();
            assert_eq!(e, c3_p_21111(m2, m3), "({m2},{m3})");
        }
    }

    #[test]
    fn a3_closed_form_matches_expansion() {
        let a3 = parse_system("A3").unwrap();
        let ctx = BernoulliContext::new(&a3, &[1, 2], None).unwrap();
        let pos: Vec<usize> = [[1, 0, 0], [1, 1, 0], [1, 1, 1]]
            .iter()
            .map(|c| ctx.par.delta_star.iter().position(|&r| a3.positive_roots[r].coroot_coords == c).unwrap())
            .collect();
        let ys = [vec![int(0), int(0), int(0)], vec![rat(1, 2), int(0), int(0)], vec![rat(1, 3), rat(1, 2), rat(1, 4)]];
        for kc in crate::bernoulli_gen::expand::indices_up_to(3, 4) {
            let mut k = vec![0; 3];
            for (v, &p) in pos.iter().enumerate() {
                k[p] = kc[v];
            }
            for m in [[1i64, 1], [1, 2], [3, 1]] {
                for y in &ys {
                    let e = expand_p(&ctx, &[0, m[0], m[1]], y, &k).unwrap();
                    let c = closed_form_p_ar(&kc, y, &m);
                    assert_eq!(e, c, "k={kc:?} m={m:?} y={y:?}");
                }
            }
        }
    }

    #[test]
    fn c3_constants_at_one_one() {
        // the largest shift is Omega * 2(m_2 + m_3) = 8 pi i
        let cs: Vec<i64> = c3_terms(1, 1).iter().flat_map(|(_, f)| f.iter().map(|&(_, c)| c.abs())).collect();
        assert_eq!(cs.iter().max(), Some(&4));
        assert!(cs.iter().all(|&c| c > 0));
    }
}
