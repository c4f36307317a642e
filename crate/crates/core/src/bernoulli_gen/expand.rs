//! Exact Taylor coefficients P(k, y, lambda; I; Delta) of the generating function F.
//!
//! For a fixed k the coefficient is a polynomial in the inverse constants
//! z_gamma = 1 / (Omega <gamma^vee, p(lambda)>), times roots of unity that depend on
//! lambda through sum_i m_i <y + q, mu_{alpha_i}>. That polynomial is built once per k and
//! then evaluated at as many lambda as needed, exactly or in floating point.

use super::bases::pair_int;
use super::phi::fractional_part;
use super::BernoulliContext;
use crate::algebra::bernoulli::bernoulli_poly_value;
use crate::algebra::cyclo::CycloElem;
use crate::algebra::laurent::CycloLaurent;
use crate::algebra::rational::{factorial, format_rational, frac_part, int, rat, to_f64, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::f64::consts::PI;

type Poly = BTreeMap<Vec<u32>, Rational>;

/// Largest interpolation grid accepted by the I = empty fallback.
const MAX_GRID: u64 = 400_000;

/// One (basis, phase) contribution: sum_e poly[e] prod_gamma z_gamma^{e_gamma}.
#[derive(Clone, Debug)]
pub struct SymbolicTerm {
    pub basis: usize,
    /// <y + q, mu_{alpha_i}> mod 1 for i in I.
    pub phase: Vec<Rational>,
    /// Exponents over `SymbolicBernoulli::gammas[basis]`; already multiplied by k! and 1/|Q|.
    pub poly: Poly,
}

#[derive(Clone, Debug)]
pub struct SymbolicBernoulli {
    pub k: Vec<u32>,
    pub y: Vec<Rational>,
    pub terms: Vec<SymbolicTerm>,
    /// Per basis: the roots gamma in Delta* \ V_I (as positions in Delta*).
    pub gammas: Vec<Vec<usize>>,
    /// Per basis and gamma: <gamma^vee, mu_{alpha_i}> for i in I.
    pub g: Vec<Vec<Vec<Rational>>>,
    /// Set when every constant vanishes (I empty, rank >= 2): the coefficient itself.
    pub constant: Option<Rational>,
}

fn mul_capped(a: &Poly, b: &Poly, caps: &[u32]) -> Poly {
    let mut out = Poly::new();
    let nt = caps.len();
    for (ka, ca) in a {
        'inner: for (kb, cb) in b {
            let mut key = Vec::with_capacity(ka.len());
            for (i, (x, y)) in ka.iter().zip(kb).enumerate() {
                let s = x + y;
                if i < nt && s > caps[i] {
                    continue 'inner;
                }
                key.push(s);
            }
            let e = out.entry(key).or_insert_with(Rational::zero);
            *e += ca * cb;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn add_into(acc: &mut Poly, p: &Poly, scale: &Rational) {
    for (k, v) in p {
        let e = acc.entry(k.clone()).or_insert_with(Rational::zero);
        *e += v * scale;
    }
    acc.retain(|_, v| !v.is_zero());
}

fn k_factorial(k: &[u32]) -> Rational {
    Rational::from_integer(k.iter().map(|&x| factorial(x)).product::<BigInt>())
}

/// All multi-indices of length n with every entry <= kmax[i], in lexicographic order.
pub fn boxed_indices(kmax: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &m in kmax {
        out = out.into_iter().flat_map(|v| (0..=m).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

/// Multi-indices of length n with |k| <= total.
pub fn indices_up_to(n: usize, total: u32) -> Vec<Vec<u32>> {
    boxed_indices(&vec![total; n]).into_iter().filter(|k| k.iter().sum::<u32>() <= total).collect()
}

/// Compositions of `n` into `parts` non-negative parts.
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

pub(crate) struct BasisData {
    /// positions in Delta* of V_I, in basis order
    pub(crate) vi_pos: Vec<usize>,
    pub(crate) gam: Vec<usize>,
    /// a[g][l] = <gamma^vee, mu_{beta_l}> for beta_l in V_I
    pub(crate) a: Vec<Vec<Rational>>,
    pub(crate) g: Vec<Vec<Rational>>,
    /// (x on V_I, phase on I) -> multiplicity / |Q|
    pub(crate) groups: BTreeMap<(Vec<Rational>, Vec<Rational>), Rational>,
}

pub(crate) fn basis_data(ctx: &BernoulliContext, b: usize, y: &[Rational]) -> Result<BasisData> {
    let d = &ctx.d;
    let basis = &ctx.bases[b];
    let vi_pos: Vec<usize> = basis.v_i.iter().map(|&r| ctx.star_pos(r).expect("V_I lies in Delta*")).collect();
    let gam: Vec<usize> = (0..ctx.n_star()).filter(|p| !vi_pos.contains(p)).collect();
    let cor = |p: usize| &d.positive_roots[ctx.par.delta_star[p]].coroot_coords;
    let a = gam.iter().map(|&p| (0..basis.v_i.len()).map(|l| pair_int(cor(p), &basis.dual[l])).collect()).collect();
    let g = gam.iter().map(|&p| (0..ctx.par.i_set.len()).map(|j| pair_int(cor(p), &basis.dual[ctx.psi_pos(b, j)])).collect()).collect();
    let quo = &ctx.quotients[b];
    let inv_index = rat(1, quo.index as i64);
    let mut groups: BTreeMap<(Vec<Rational>, Vec<Rational>), Rational> = BTreeMap::new();
    for q in &quo.representatives {
        let yq: Vec<Rational> = y.iter().zip(q).map(|(a, &b)| a + int(b)).collect();
        let x = (0..basis.v_i.len()).map(|l| fractional_part(d, &yq, basis, l, &ctx.phi.phi)).collect::<Result<Vec<_>>>()?;
        let w = (0..ctx.par.i_set.len()).map(|j| frac_part(&super::bases::pair(&yq, &basis.dual[ctx.psi_pos(b, j)]))).collect();
        *groups.entry((x, w)).or_insert_with(Rational::zero) += &inv_index;
    }
    Ok(BasisData { vi_pos, gam, a, g, groups })
}

/// B_l(x) / l! for l = 0..=n.
fn bernoulli_row(x: &Rational, n: u32) -> Vec<Rational> {
    (0..=n).map(|l| bernoulli_poly_value(l as usize, x) / Rational::from_integer(factorial(l))).collect()
}

fn symbolic_basis(b: usize, k: &[u32], bd: &BasisData) -> Vec<SymbolicTerm> {
    let nt = k.len();
    let ng = bd.gam.len();
    if bd.gam.iter().any(|&p| k[p] == 0) {
        return vec![];
    }
    // A = prod_gamma ( -z t_gamma sum_n z^n (t_gamma - sum_beta a t_beta)^n )
    let mut prod = Poly::new();
    prod.insert(vec![0; nt + ng], Rational::one());
    for (gi, &p) in bd.gam.iter().enumerate() {
        let mut zu = Poly::new();
        let mut key = vec![0; nt + ng];
        key[p] = 1;
        key[nt + gi] = 1;
        zu.insert(key, Rational::one());
        for (l, &vp) in bd.vi_pos.iter().enumerate() {
            if bd.a[gi][l].is_zero() {
                continue;
            }
            let mut key = vec![0; nt + ng];
            key[vp] = 1;
            key[nt + gi] = 1;
            zu.insert(key, -bd.a[gi][l].clone());
        }
        let mut key = vec![0; nt + ng];
        key[p] = 1;
        key[nt + gi] = 1;
        let mut term = Poly::new();
        term.insert(key, -Rational::one());
        let mut factor = term.clone();
        loop {
            term = mul_capped(&term, &zu, k);
            if term.is_empty() {
                break;
            }
            add_into(&mut factor, &term, &Rational::one());
        }
        prod = mul_capped(&prod, &factor, k);
        if prod.is_empty() {
            return vec![];
        }
    }
    // split by the V_I part m = k - t
    let mut by_m: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
    for (key, c) in &prod {
        if bd.gam.iter().any(|&p| key[p] != k[p]) {
            continue;
        }
        let m: Vec<u32> = bd.vi_pos.iter().map(|&p| k[p] - key[p]).collect();
        by_m.entry(m).or_default().insert(key[nt..].to_vec(), c.clone());
    }
    let kf = k_factorial(k);
    let mut merged: BTreeMap<Vec<Rational>, Poly> = BTreeMap::new();
    for ((x, w), weight) in &bd.groups {
        let rows: Vec<Vec<Rational>> = x.iter().zip(&bd.vi_pos).map(|(xb, &p)| bernoulli_row(xb, k[p])).collect();
        let acc = merged.entry(w.clone()).or_default();
        for (m, zp) in &by_m {
            let mut c = &kf * weight;
            for (l, &ml) in m.iter().enumerate() {
                c *= &rows[l][ml as usize];
            }
            if !c.is_zero() {
                add_into(acc, zp, &c);
            }
        }
    }
    merged.into_iter().filter(|(_, p)| !p.is_empty()).map(|(phase, poly)| SymbolicTerm { basis: b, phase, poly }).collect()
}

/// Build the coefficient of prod t^k / k! as a function of lambda.
pub fn symbolic_p(ctx: &BernoulliContext, y: &[Rational], k: &[u32]) -> Result<SymbolicBernoulli> {
    let r = ctx.d.rank;
    if y.len() != r {
        return Err(Error::DimensionMismatch { expected: r, got: y.len() });
    }
    if k.len() != ctx.n_star() {
        return Err(Error::DimensionMismatch { expected: ctx.n_star(), got: k.len() });
    }
    let data = (0..ctx.bases.len()).map(|b| basis_data(ctx, b, y)).collect::<Result<Vec<_>>>()?;
    let gammas = data.iter().map(|bd| bd.gam.clone()).collect();
    let g = data.iter().map(|bd| bd.g.clone()).collect();
    if ctx.par.i_set.is_empty() && data.iter().any(|bd| !bd.gam.is_empty()) {
        let c = homogeneous_coefficient(ctx, &data, k)?;
        return Ok(SymbolicBernoulli { k: k.to_vec(), y: y.to_vec(), terms: vec![], gammas, g, constant: Some(c) });
    }
    let terms: Vec<SymbolicTerm> = data.par_iter().enumerate().flat_map_iter(|(b, bd)| symbolic_basis(b, k, bd)).collect();
    Ok(SymbolicBernoulli { k: k.to_vec(), y: y.to_vec(), terms, gammas, g, constant: None })
}

fn check_lambda(ctx: &BernoulliContext, m: &[i64]) -> Result<()> {
    if m.len() != ctx.d.rank {
        return Err(Error::DimensionMismatch { expected: ctx.d.rank, got: m.len() });
    }
    if !ctx.par.in_p_i_plusplus(m) {
        return Err(Error::NonIntegralWeight(format!("lambda {m:?} is not in P_I++ for I = {:?}", ctx.par.i_set.iter().map(|i| i + 1).collect::<Vec<_>>())));
    }
    Ok(())
}

impl SymbolicBernoulli {
    /// Constants <gamma^vee, p(lambda)> per basis and gamma; errors on a zero.
    fn constants(&self, ctx: &BernoulliContext, m: &[i64]) -> Result<Vec<Vec<Rational>>> {
        let mi: Vec<i64> = ctx.par.i_set.iter().map(|&i| m[i]).collect();
        let mut out = Vec::with_capacity(self.g.len());
        for (b, gb) in self.g.iter().enumerate() {
            let mut row = Vec::with_capacity(gb.len());
            for (gi, gv) in gb.iter().enumerate() {
                let c: Rational = gv.iter().zip(&mi).map(|(x, &n)| x * int(n)).sum();
                if c.is_zero() {
                    let root = ctx.par.delta_star[self.gammas[b][gi]];
                    return Err(Error::ZeroConstantDenominator { gamma: ctx.d.root_label(root), basis: ctx.bases[b].labels(&ctx.d), lambda: m.to_vec() });
                }
                row.push(c);
            }
            out.push(row);
        }
        Ok(out)
    }

    /// Exact value at lambda = sum m_i lambda_i (fundamental-weight coordinates).
    pub fn eval_exact(&self, ctx: &BernoulliContext, m: &[i64]) -> Result<CycloLaurent> {
        check_lambda(ctx, m)?;
        if let Some(c) = &self.constant {
            return Ok(CycloLaurent::rational(c.clone()));
        }
        let consts = self.constants(ctx, m)?;
        let inv: Vec<Vec<Rational>> = consts.iter().map(|r| r.iter().map(|c| c.recip()).collect()).collect();
        let mi: Vec<i64> = ctx.par.i_set.iter().map(|&i| m[i]).collect();
        let mut total = CycloLaurent::zero();
        for t in &self.terms {
            let mut by_j: BTreeMap<i32, Rational> = BTreeMap::new();
            for (e, c) in &t.poly {
                let mut v = c.clone();
                let mut j = 0i32;
                for (gi, &ex) in e.iter().enumerate() {
                    if ex > 0 {
                        v *= num_traits::pow(inv[t.basis][gi].clone(), ex as usize);
                        j += ex as i32;
                    }
                }
                *by_j.entry(j).or_insert_with(Rational::zero) += v;
            }
            let angle: Rational = t.phase.iter().zip(&mi).map(|(w, &n)| w * int(n)).sum();
            let ph = CycloElem::exp_2pi_i(&angle);
            for (j, v) in by_j {
                total.add_assign_ref(&CycloLaurent::monomial(ph.scale(&v), -j));
            }
        }
        Ok(total)
    }

    /// Floating-point evaluator for many lambda.
    pub fn numeric(&self, ctx: &BernoulliContext) -> NumericBernoulli {
        let i_set = ctx.par.i_set.clone();
        let constant = self.constant.as_ref().map(to_f64);
        // integer forms for the constants: c = (sum_i G_i m_i) / den
        let g_int = self
            .g
            .iter()
            .map(|gb| {
                gb.iter()
                    .map(|gv| {
                        let den = gv.iter().fold(BigInt::one(), |a, x| a.lcm(x.denom())).to_i64().expect("small denominators");
                        let coeffs = gv.iter().map(|x| (x * int(den)).to_integer().to_i64().unwrap()).collect();
                        (coeffs, den as f64)
                    })
                    .collect()
            })
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let den = t.phase.iter().fold(BigInt::one(), |a, x| a.lcm(x.denom())).to_i64().unwrap();
                let num = t.phase.iter().map(|x| (x * int(den)).to_integer().to_i64().unwrap()).collect();
                let poly = t.poly.iter().map(|(e, c)| (e.clone(), e.iter().sum::<u32>(), to_f64(c))).collect();
                NumericTerm { basis: t.basis, phase_num: num, phase_den: den, poly }
            })
            .collect();
        NumericBernoulli { i_set, labels: self.gammas.clone(), g_int, terms, constant }
    }
}

#[derive(Clone, Debug)]
struct NumericTerm {
    basis: usize,
    phase_num: Vec<i64>,
    phase_den: i64,
    poly: Vec<(Vec<u32>, u32, f64)>,
}

/// Double-precision evaluator of one P(k, y, . ; I; Delta).
#[derive(Clone, Debug)]
pub struct NumericBernoulli {
    i_set: Vec<usize>,
    labels: Vec<Vec<usize>>,
    g_int: Vec<Vec<(Vec<i64>, f64)>>,
    terms: Vec<NumericTerm>,
    constant: Option<f64>,
}

impl NumericBernoulli {
    /// P at lambda; `None` when some constant vanishes (the caller reports the error).
    pub fn eval(&self, m: &[i64]) -> Option<Complex64> {
        if let Some(c) = self.constant {
            return Some(Complex64::new(c, 0.0));
        }
        let mi: Vec<i64> = self.i_set.iter().map(|&i| m[i]).collect();
        let mut inv: Vec<Vec<f64>> = Vec::with_capacity(self.g_int.len());
        for gb in &self.g_int {
            let mut row = Vec::with_capacity(gb.len());
            for (coeffs, den) in gb {
                let n: i64 = coeffs.iter().zip(&mi).map(|(a, b)| a * b).sum();
                if n == 0 {
                    return None;
                }
                row.push(den / n as f64);
            }
            inv.push(row);
        }
        let mut total = Complex64::new(0.0, 0.0);
        let two_pi = 2.0 * PI;
        for t in &self.terms {
            // by power of 1/Omega
            let mut acc = [0.0f64; 64];
            let mut maxj = 0;
            for (e, j, c) in &t.poly {
                let mut v = *c;
                for (gi, &ex) in e.iter().enumerate() {
                    if ex > 0 {
                        v *= inv[t.basis][gi].powi(ex as i32);
                    }
                }
                acc[*j as usize] += v;
                maxj = maxj.max(*j as usize);
            }
            let mut s = Complex64::new(0.0, 0.0);
            // sum_j acc_j (2 pi i)^{-j}
            let mut w = Complex64::new(1.0, 0.0);
            let step = Complex64::new(0.0, -1.0 / two_pi);
            for a in acc.iter().take(maxj + 1) {
                s += w * a;
                w *= step;
            }
            let num: i64 = t.phase_num.iter().zip(&mi).map(|(a, b)| a * b).sum::<i64>().rem_euclid(t.phase_den);
            let ang = two_pi * num as f64 / t.phase_den as f64;
            total += s * Complex64::new(ang.cos(), ang.sin());
        }
        Some(total)
    }

    pub fn gamma_positions(&self) -> &[Vec<usize>] {
        &self.labels
    }
}

/// Coefficient of prod t^k in F when no constant term is present (I empty):
/// F_n = sum_V R_V [G_V]_n is a homogeneous polynomial; set the last variable to 1 and
/// read off the coefficient by Lagrange interpolation one variable at a time.
fn homogeneous_coefficient(ctx: &BernoulliContext, data: &[BasisData], k: &[u32]) -> Result<Rational> {
    let nvar = k.len();
    let n: u32 = k.iter().sum();
    // [G_V]_n as a list of (exponents on V_I, coefficient)
    let g_parts: Vec<Vec<(Vec<u32>, Rational)>> = data
        .iter()
        .map(|bd| {
            let d = bd.vi_pos.len();
            let comps = compositions(n, d);
            let mut out = Vec::new();
            for l in comps {
                let mut c = Rational::zero();
                for ((x, _), weight) in &bd.groups {
                    let mut v = weight.clone();
                    for (xb, &lb) in x.iter().zip(&l) {
                        v *= bernoulli_poly_value(lb as usize, xb) / Rational::from_integer(factorial(lb));
                    }
                    c += v;
                }
                if !c.is_zero() {
                    out.push((l, c));
                }
            }
            out
        })
        .collect();
    let f = |t: &[Rational]| -> Option<Rational> {
        let mut total = Rational::zero();
        for (bd, gp) in data.iter().zip(&g_parts) {
            if gp.is_empty() {
                continue;
            }
            let mut r = Rational::one();
            for (gi, &p) in bd.gam.iter().enumerate() {
                let mut den = t[p].clone();
                for (l, &vp) in bd.vi_pos.iter().enumerate() {
                    den -= &bd.a[gi][l] * &t[vp];
                }
                if den.is_zero() {
                    return None;
                }
                r *= &t[p] / den;
            }
            let mut gsum = Rational::zero();
            for (l, c) in gp {
                let mut v = c.clone();
                for (&vp, &e) in bd.vi_pos.iter().zip(l) {
                    if e > 0 {
                        v *= num_traits::pow(t[vp].clone(), e as usize);
                    }
                }
                gsum += v;
            }
            total += r * gsum;
        }
        Some(total)
    };
    let mut counts = Vec::with_capacity(nvar - 1);
    let mut used = 0u32;
    for &kj in &k[..nvar - 1] {
        counts.push(n - used + 1);
        used += kj;
    }
    let grid: u64 = counts.iter().map(|&c| c as u64).product();
    if grid > MAX_GRID {
        return Err(Error::InvalidInput(format!("interpolation grid of {grid} points for k = {k:?} exceeds {MAX_GRID}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xb0b);
    for attempt in 0..16 {
        let nodes: Vec<Vec<Rational>> = counts
            .iter()
            .enumerate()
            .map(|(j, &c)| {
                let (shift, step) = if attempt == 0 { (rat(j as i64 + 1, 7), j as i64 + 2) } else { (rat(rng.gen_range(1..1000), rng.gen_range(2..60)), rng.gen_range(1..9)) };
                (0..c).map(|a| &shift + int((a as i64 + 1) * step)).collect()
            })
            .collect();
        let weights: Vec<Vec<Rational>> = nodes.iter().enumerate().map(|(j, xs)| lagrange_coeff_weights(xs, k[j])).collect();
        if let Some(v) = interp_rec(&f, &nodes, &weights, &mut Vec::with_capacity(nvar)) {
            return Ok(v * k_factorial(k));
        }
    }
    Err(Error::ZeroConstantDenominator { gamma: "no generic interpolation grid".into(), basis: vec![], lambda: vec![0; ctx.d.rank] })
}

fn interp_rec(f: &dyn Fn(&[Rational]) -> Option<Rational>, nodes: &[Vec<Rational>], weights: &[Vec<Rational>], prefix: &mut Vec<Rational>) -> Option<Rational> {
    let j = prefix.len();
    if j == nodes.len() {
        prefix.push(Rational::one());
        let v = f(prefix);
        prefix.pop();
        return v;
    }
    let mut acc = Rational::zero();
    for (x, w) in nodes[j].iter().zip(&weights[j]) {
        if w.is_zero() {
            continue;
        }
        prefix.push(x.clone());
        let v = interp_rec(f, nodes, weights, prefix);
        prefix.pop();
        acc += w * v?;
    }
    Some(acc)
}

/// w_a such that sum_a w_a p(x_a) is the coefficient of X^c of the interpolant of p.
fn lagrange_coeff_weights(xs: &[Rational], c: u32) -> Vec<Rational> {
    (0..xs.len())
        .map(|a| {
            let mut poly = vec![Rational::one()];
            let mut den = Rational::one();
            for (b, xb) in xs.iter().enumerate() {
                if b == a {
                    continue;
                }
                let mut next = vec![Rational::zero(); poly.len() + 1];
                for (i, p) in poly.iter().enumerate() {
                    next[i + 1] += p;
                    next[i] -= p * xb;
                }
                poly = next;
                den *= &xs[a] - xb;
            }
            poly.get(c as usize).cloned().unwrap_or_else(Rational::zero) / den
        })
        .collect()
}

/// P(k, y, lambda; I; Delta) exactly.
pub fn expand_p(ctx: &BernoulliContext, lambda: &[i64], y: &[Rational], k: &[u32]) -> Result<CycloLaurent> {
    check_lambda(ctx, lambda)?;
    symbolic_p(ctx, y, k)?.eval_exact(ctx, lambda)
}

#[derive(Clone, Debug, Serialize)]
pub struct TableContext {
    pub system: String,
    /// 1-based.
    pub i_set: Vec<usize>,
    pub lambda: Vec<i64>,
    pub y: Vec<String>,
    pub phi: super::GenericVector,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableEntry {
    pub k: Vec<u32>,
    pub value: CycloLaurent,
}

/// P(k, y, lambda) for every k with |k| <= kmax.
#[derive(Clone, Debug, Serialize)]
pub struct BernoulliTable {
    pub context: TableContext,
    pub entries: Vec<TableEntry>,
}

pub fn bernoulli_table(ctx: &BernoulliContext, lambda: &[i64], y: &[Rational], kmax: u32) -> Result<BernoulliTable> {
    check_lambda(ctx, lambda)?;
    let ks = indices_up_to(ctx.n_star(), kmax);
    let entries = ks
        .par_iter()
        .map(|k| Ok(TableEntry { k: k.clone(), value: symbolic_p(ctx, y, k)?.eval_exact(ctx, lambda)? }))
        .collect::<Result<Vec<_>>>()?;
    let context = TableContext {
        system: ctx.d.name(),
        i_set: ctx.par.i_set.iter().map(|i| i + 1).collect(),
        lambda: lambda.to_vec(),
        y: y.iter().map(format_rational).collect(),
        phi: ctx.phi.clone(),
    };
    Ok(BernoulliTable { context, entries })
}
