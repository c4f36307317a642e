//! Floating-point evaluation of F and the iterated-residue projection from I = empty to I.

use super::expand::basis_data as basis_data_pub;
use super::BernoulliContext;
use crate::algebra::rational::{to_f64, Rational};
use crate::error::{Error, Result};
use crate::rootsys::RootSystemData;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;

const NODES: usize = 64;
const KAPPA: f64 = 10.0;

struct PreparedBasis {
    vi_pos: Vec<usize>,
    gam: Vec<usize>,
    a: Vec<Vec<f64>>,
    /// Omega <gamma^vee, p(lambda)>
    c: Vec<Complex64>,
    /// (x on V_I, weight times phase)
    groups: Vec<(Vec<f64>, Complex64)>,
}

/// F(t_I, y, lambda; I; Delta) prepared for repeated evaluation at complex points.
pub struct FEvaluator {
    bases: Vec<PreparedBasis>,
}

/// t e^{t x} / (e^t - 1)
fn bernoulli_factor(t: Complex64, x: f64) -> Complex64 {
    if t.norm() < 1e-3 {
        let t2 = t * t;
        let s = 1.0 - t / 2.0 + t2 / 12.0 - t2 * t2 / 720.0;
        s * (t * x).exp()
    } else {
        t * (t * x).exp() / (t.exp() - 1.0)
    }
}

pub fn prepare_f(ctx: &BernoulliContext, y: &[Rational], m: &[i64]) -> Result<FEvaluator> {
    if m.len() != ctx.d.rank || y.len() != ctx.d.rank {
        return Err(Error::DimensionMismatch { expected: ctx.d.rank, got: m.len().min(y.len()) });
    }
    let mi: Vec<i64> = ctx.par.i_set.iter().map(|&i| m[i]).collect();
    let omega = Complex64::new(0.0, 2.0 * PI);
    let mut bases = Vec::with_capacity(ctx.bases.len());
    for b in 0..ctx.bases.len() {
        let bd = basis_data_pub(ctx, b, y)?;
        let c = bd
            .g
            .iter()
            .map(|gv| omega * gv.iter().zip(&mi).map(|(g, &n)| to_f64(g) * n as f64).sum::<f64>())
            .collect();
        let groups = bd
            .groups
            .iter()
            .map(|((x, w), weight)| {
                let ang: f64 = w.iter().zip(&mi).map(|(w, &n)| to_f64(&crate::algebra::rational::frac_part(&(w * crate::algebra::rational::int(n))))).sum();
                let ph = Complex64::from_polar(to_f64(weight), 2.0 * PI * ang);
                (x.iter().map(to_f64).collect(), ph)
            })
            .collect();
        let a = bd.a.iter().map(|r| r.iter().map(to_f64).collect()).collect();
        bases.push(PreparedBasis { vi_pos: bd.vi_pos, gam: bd.gam, a, c, groups });
    }
    Ok(FEvaluator { bases })
}

impl FEvaluator {
    /// t indexed like Delta*.
    pub fn eval(&self, t: &[Complex64]) -> Complex64 {
        let mut total = Complex64::new(0.0, 0.0);
        for pb in &self.bases {
            let mut r = Complex64::new(1.0, 0.0);
            for (gi, &p) in pb.gam.iter().enumerate() {
                let mut den = t[p] - pb.c[gi];
                for (l, &vp) in pb.vi_pos.iter().enumerate() {
                    den -= t[vp] * pb.a[gi][l];
                }
                r *= t[p] / den;
            }
            let mut g = Complex64::new(0.0, 0.0);
            for (x, w) in &pb.groups {
                let mut v = *w;
                for (xb, &vp) in x.iter().zip(&pb.vi_pos) {
                    v *= bernoulli_factor(t[vp], *xb);
                }
                g += v;
            }
            total += r * g;
        }
        total
    }
}

/// One-shot evaluation of F at a complex point (t indexed like Delta*).
pub fn eval_f(ctx: &BernoulliContext, y: &[Rational], m: &[i64], t: &[Complex64]) -> Result<Complex64> {
    Ok(prepare_f(ctx, y, m)?.eval(t))
}

/// Iterated residues of (prod_{alpha in Delta_{I+}} 1/t_alpha) F(t, y; Delta) at
/// t_alpha = Omega <alpha^vee, lambda>, taken in `order` (innermost first), by nested
/// trapezoidal contour integrals. `full` is the I = empty context of the same system,
/// `t_star` the point on Delta* of I.
pub fn residue_project(full: &BernoulliContext, i_set: &[usize], m: &[i64], order: &[usize], t_star: &[Complex64], y: &[Rational]) -> Result<Complex64> {
    let v1 = residue_at_radius(full, i_set, m, order, t_star, y, 1.0)?;
    let v2 = residue_at_radius(full, i_set, m, order, t_star, y, 0.6)?;
    if (v1 - v2).norm() > 1e-8 * (1.0 + v1.norm()) {
        return Err(Error::ContourTooClose(format!("radius 1 gives {v1}, radius 0.6 gives {v2}")));
    }
    Ok(v1)
}

fn residue_at_radius(full: &BernoulliContext, i_set: &[usize], m: &[i64], order: &[usize], t_star: &[Complex64], y: &[Rational], rho0: f64) -> Result<Complex64> {
    if !full.par.i_set.is_empty() {
        return Err(Error::InvalidInput("residue projection starts from the I = empty context".into()));
    }
    let d = &full.d;
    let par = d.parabolic(i_set)?;
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    let mut expect = par.delta_i_plus.clone();
    expect.sort_unstable();
    if sorted != expect {
        return Err(Error::InvalidInput(format!("order {order:?} is not a numbering of Delta_I+ = {:?}", par.delta_i_plus)));
    }
    if t_star.len() != par.delta_star.len() {
        return Err(Error::DimensionMismatch { expected: par.delta_star.len(), got: t_star.len() });
    }
    let zero = vec![0i64; d.rank];
    let f = prepare_f(full, y, &zero)?;
    let n_pos = d.n_pos();
    let mut base = vec![Complex64::new(0.0, 0.0); n_pos];
    for (p, &root) in par.delta_star.iter().enumerate() {
        base[root] = t_star[p];
    }
    let n = order.len();
    if n == 0 {
        return Ok(f.eval(&base));
    }
    let centers: Vec<Complex64> = order.iter().map(|&a| Complex64::new(0.0, 2.0 * PI * d.positive_roots[a].form(m) as f64)).collect();
    let radii: Vec<f64> = (0..n).map(|j| rho0.min(PI / 2.0) / KAPPA.powi((n - 1 - j) as i32)).collect();
    let unit: Vec<Complex64> = (0..NODES).map(|a| Complex64::from_polar(1.0, 2.0 * PI * (a as f64 + 0.5) / NODES as f64)).collect();
    // outermost variable (last in order) split across threads
    let outer = n - 1;
    let partial: Vec<Complex64> = (0..NODES)
        .into_par_iter()
        .map(|a| {
            let mut t = base.clone();
            let mut idx = vec![0usize; n];
            idx[outer] = a;
            let mut acc = Complex64::new(0.0, 0.0);
            let inner_count = NODES.pow(outer as u32);
            for flat in 0..inner_count {
                let mut rem = flat;
                for slot in idx.iter_mut().take(outer) {
                    *slot = rem % NODES;
                    rem /= NODES;
                }
                let mut weight = Complex64::new(1.0, 0.0);
                for j in 0..n {
                    let dz = unit[idx[j]] * radii[j];
                    let tj = centers[j] + dz;
                    t[order[j]] = tj;
                    weight *= dz / tj;
                }
                acc += f.eval(&t) * weight;
            }
            acc
        })
        .collect();
    let total: Complex64 = partial.iter().sum();
    Ok(total / (NODES as f64).powi(n as i32))
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidueReport {
    pub system: String,
    pub i_set: Vec<usize>,
    pub lambda: Vec<i64>,
    pub t_point: Vec<[f64; 2]>,
    pub direct: [f64; 2],
    /// (order as root labels, value)
    pub residues: Vec<(Vec<String>, [f64; 2])>,
    pub max_abs_diff: f64,
    pub pass: bool,
}

fn pair_of(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

/// Compare F_I with the residue projection of F_empty for the given orders of Delta_{I+}
/// (all orders when `orders` is empty) at a seeded random point.
pub fn residue_check(d: &RootSystemData, i_set: &[usize], m: &[i64], y: &[Rational], orders: &[Vec<usize>], seed: u64, tol: f64) -> Result<ResidueReport> {
    let full = BernoulliContext::new(d, &[], None)?;
    let part = BernoulliContext::with_phi(d, i_set, full.phi.clone())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t_star: Vec<Complex64> = (0..part.n_star()).map(|_| Complex64::from_polar(rng.gen_range(0.35..0.65), rng.gen_range(0.0..2.0 * PI))).collect();
    let direct = eval_f(&part, y, m, &t_star)?;
    let orders: Vec<Vec<usize>> = if orders.is_empty() { permutations(&part.par.delta_i_plus) } else { orders.to_vec() };
    let mut residues = Vec::new();
    let mut worst = 0.0f64;
    for o in &orders {
        let v = residue_project(&full, i_set, m, o, &t_star, y)?;
        worst = worst.max((v - direct).norm());
        residues.push((o.iter().map(|&a| d.root_label(a)).collect(), pair_of(v)));
    }
    Ok(ResidueReport {
        system: d.name(),
        i_set: i_set.iter().map(|i| i + 1).collect(),
        lambda: m.to_vec(),
        t_point: t_star.iter().map(|z| pair_of(*z)).collect(),
        direct: pair_of(direct),
        residues,
        max_abs_diff: worst,
        pass: worst <= tol * (1.0 + direct.norm()),
    })
}

pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use crate::rootsys::parse_system;

    #[test]
    fn empty_order_returns_f() {
        let a2 = parse_system("A2").unwrap();
        let full = BernoulliContext::new(&a2, &[], None).unwrap();
        let y = vec![int(0), int(0)];
        let t = vec![Complex64::new(0.3, 0.1), Complex64::new(-0.2, 0.4), Complex64::new(0.1, -0.3)];
        let a = residue_project(&full, &[], &[0, 0], &[], &t, &y).unwrap();
        let b = eval_f(&full, &y, &[0, 0], &t).unwrap();
        assert!((a - b).norm() < 1e-14);
    }

    #[test]
    fn a2_single_residue_matches_direct() {
        let a2 = parse_system("A2").unwrap();
        for m in [1, 2] {
            let rep = residue_check(&a2, &[1], &[0, m], &[int(0), int(0)], &[], 11, 1e-6).unwrap();
            assert!(rep.pass, "{rep:?}");
        }
    }

    #[test]
    fn a1_bernoulli_factor_is_smooth_at_zero() {
        let a = bernoulli_factor(Complex64::new(1e-4, 0.0), 0.25);
        let b = bernoulli_factor(Complex64::new(2e-3, 0.0), 0.25);
        assert!((a - 1.0).norm() < 1e-4 && (b - 1.0).norm() < 1e-3);
    }
}
