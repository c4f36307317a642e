//! Functional relations: the signed Weyl sum of zeta-functions against the Bernoulli-function
//! side, the |I| = 1 Lerch form and the explicit A2, A3, C3 and G2 identities.

mod templates;

pub use templates::{c3_values, check_g2_values, template_a2, template_a3, template_c3, A3_VALUE};

use crate::algebra::laurent::CycloLaurent;
use crate::algebra::numeric::{pairwise_reduce, Acc, Precision};
use crate::algebra::rational::{factorial, format_rational, int, Rational};
use crate::bernoulli_gen::lerch::{lerch_coeffs, LerchTable};
use crate::bernoulli_gen::{symbolic_p, BernoulliContext, GenericVector};
use crate::error::{Error, Result};
use crate::lattice_zeta::{is_zero_vec, lerch_phi, s_direct, zeta_r, SumResult, ZetaArgs};
use crate::poincare::{eval_minus_one, mixed_eval};
use crate::rootsys::RootSystemData;
use crate::weyl::{enumerate_weyl, min_coset_reps, WeylGroup};
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

/// Which sum stands on the left of the Bernoulli side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LhsMode {
    /// sum over W^I of signed zeta_r values
    SignedWeyl,
    /// S(s, y; I; Delta) summed directly over the symmetric box
    Direct,
}

/// A relation instance: integer k on Delta* (in Delta* order), complex s on Delta_{I+}
/// (in Delta_{I+} order) and y in simple-coroot coordinates.
#[derive(Clone, Debug)]
pub struct RelationSpec {
    pub d: RootSystemData,
    pub i_set: Vec<usize>,
    pub k: Vec<u32>,
    pub s: Vec<Complex64>,
    pub y: Vec<Rational>,
}

impl RelationSpec {
    pub fn new(d: &RootSystemData, i_set: &[usize], k: Vec<u32>, s: Vec<Complex64>, y: Vec<Rational>) -> Result<Self> {
        let par = d.parabolic(i_set)?;
        if k.len() != par.delta_star.len() {
            return Err(Error::DimensionMismatch { expected: par.delta_star.len(), got: k.len() });
        }
        if s.len() != par.delta_i_plus.len() {
            return Err(Error::DimensionMismatch { expected: par.delta_i_plus.len(), got: s.len() });
        }
        if y.len() != d.rank {
            return Err(Error::DimensionMismatch { expected: d.rank, got: y.len() });
        }
        if k.contains(&0) {
            return Err(Error::InvalidInput("k must be at least 1 on Delta*".into()));
        }
        Ok(RelationSpec { d: d.clone(), i_set: par.i_set.clone(), k, s, y })
    }

    /// Exponents on all positive roots.
    pub fn full_exponents(&self) -> Vec<Complex64> {
        let par = self.d.parabolic(&self.i_set).expect("validated");
        let mut out = vec![Complex64::new(0.0, 0.0); self.d.n_pos()];
        for (p, &a) in par.delta_star.iter().enumerate() {
            out[a] = Complex64::new(self.k[p] as f64, 0.0);
        }
        for (p, &a) in par.delta_i_plus.iter().enumerate() {
            out[a] = self.s[p];
        }
        out
    }

    /// Condition (#): roots in an A1 component need k >= 2. Only A1 itself has one among
    /// the irreducible systems.
    pub fn condition_sharp(&self) -> bool {
        self.d.rank > 1 || self.k.iter().all(|&k| k >= 2)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SignedTerm {
    pub word: String,
    pub sign: i64,
    /// Exponents of the zeta value, canonical root order, as [re, im].
    pub s: Vec<[f64; 2]>,
    pub y: Vec<String>,
    pub value: SumResult,
}

#[derive(Clone, Debug, Serialize)]
pub struct SignedSum {
    pub terms: Vec<SignedTerm>,
    pub total: SumResult,
}

/// sum_{w in W^I} (prod_{alpha in Delta_{w^{-1}}} (-1)^{s_alpha}) zeta_r(w^{-1} s, w^{-1} y).
pub fn lhs_signed(d: &RootSystemData, i_set: &[usize], s: &[Complex64], y: &[Rational], n: u64, precision: Precision) -> Result<SignedSum> {
    let g = enumerate_weyl(d)?;
    lhs_signed_with(d, &g, i_set, s, y, n, precision)
}

pub fn lhs_signed_with(d: &RootSystemData, g: &WeylGroup, i_set: &[usize], s: &[Complex64], y: &[Rational], n: u64, precision: Precision) -> Result<SignedSum> {
    let par = d.parabolic(i_set)?;
    let cosets = min_coset_reps(g, &par.i_set);
    let mut terms = Vec::with_capacity(cosets.w_upper_i.len());
    for &w in &cosets.w_upper_i {
        let inv = g.inversion_set(w);
        if let Some(&a) = inv.iter().find(|a| par.delta_i_plus.contains(a)) {
            return Err(Error::InvalidInput(format!("Delta_(w^-1) meets Delta_I+ at {} for w = {}", d.root_label(a), g.elements[w].word_string())));
        }
        let sign = g.inversion_sign(d, w, s)?;
        let (s2, y2) = g.act_on_args(d, w, s, y);
        let value = zeta_r(d, &s2, &y2, n, precision)?;
        terms.push(SignedTerm {
            word: g.elements[w].word_string(),
            sign,
            s: s2.iter().map(|z| [z.re, z.im]).collect(),
            y: y2.iter().map(format_rational).collect(),
            value,
        });
    }
    let parts: Vec<(Complex64, &SumResult)> = terms.iter().map(|t| (Complex64::new(t.sign as f64, 0.0), &t.value)).collect();
    let total = SumResult::combine(&parts);
    Ok(SignedSum { terms, total })
}

/// (-1)^{|Delta*|} prod_{alpha in Delta*} Omega^{k_alpha} / k_alpha!.
pub fn bernoulli_prefactor(k: &[u32]) -> CycloLaurent {
    let total: i32 = k.iter().map(|&x| x as i32).sum();
    let kf: num_bigint::BigInt = k.iter().map(|&x| factorial(x)).product();
    let sign = if k.len() % 2 == 0 { int(1) } else { int(-1) };
    CycloLaurent::omega_pow(total).scale_rational(&(sign / Rational::from_integer(kf)))
}

/// The Bernoulli side: prefactor times sum over lambda in P_{I++} with m_i <= M of
/// prod_{alpha in Delta_{I+}} <alpha^vee, lambda>^{-s_alpha} P(k, y, lambda; I; Delta).
pub fn rhs_bernoulli(ctx: &BernoulliContext, spec: &RelationSpec, m_max: u64, precision: Precision) -> Result<SumResult> {
    let d = &ctx.d;
    let sym = symbolic_p(ctx, &spec.y, &spec.k)?;
    let num = sym.numeric(ctx);
    let pref = bernoulli_prefactor(&spec.k).eval(precision);
    let mut warnings = Vec::new();
    if !spec.condition_sharp() {
        warnings.push("condition (#) fails: k = 1 on an A1 component".to_string());
    }
    if ctx.par.i_set.is_empty() {
        // only lambda = 0
        let p = match num.eval(&vec![0; d.rank]) {
            Some(v) => v,
            None => sym.eval_exact(ctx, &vec![0; d.rank])?.eval(precision),
        };
        let mut r = SumResult::exact(pref * p);
        r.warnings = warnings;
        return Ok(r);
    }
    let i_set = ctx.par.i_set.clone();
    let forms: Vec<Vec<i64>> = ctx.par.delta_i_plus.iter().map(|&a| d.positive_roots[a].coroot_coords.clone()).collect();
    let nm = m_max as i64;
    let half = nm / 2;
    let ni = i_set.len();
    let slices: Vec<Result<(Acc, Acc)>> = (1..=nm)
        .into_par_iter()
        .map(|m0| {
            let mut full = Acc::new(precision);
            let mut part = Acc::new(precision);
            let mut idx = vec![1i64; ni];
            idx[0] = m0;
            let mut m = vec![0i64; d.rank];
            loop {
                for (p, &i) in i_set.iter().enumerate() {
                    m[i] = idx[p];
                }
                let p = match num.eval(&m) {
                    Some(v) => v,
                    None => return Err(sym.eval_exact(ctx, &m).err().unwrap_or_else(|| Error::InvalidInput(format!("P undefined at {m:?}")))),
                };
                let mut w = p;
                for (f, z) in forms.iter().zip(&spec.s) {
                    let x: i64 = f.iter().zip(&m).map(|(a, b)| a * b).sum();
                    w *= crate::algebra::numeric::cpow_neg(x as f64, *z);
                }
                full.add(w);
                if idx.iter().all(|&v| v <= half) {
                    part.add(w);
                }
                let mut k = ni - 1;
                loop {
                    if k == 0 {
                        return Ok((full, part));
                    }
                    if idx[k] < nm {
                        idx[k] += 1;
                        break;
                    }
                    idx[k] = 1;
                    k -= 1;
                }
            }
        })
        .collect();
    let mut fulls = Vec::with_capacity(slices.len());
    let mut halves = Vec::with_capacity(slices.len());
    for s in slices {
        let (a, b) = s?;
        fulls.push(a);
        halves.push(b);
    }
    let full = pairwise_reduce(fulls, precision).value() * pref;
    let half_v = pairwise_reduce(halves, precision).value() * pref;
    let terms = m_max.pow(ni as u32);
    Ok(SumResult {
        value: [full.re, full.im],
        value_lo: [0.0, 0.0],
        n: m_max,
        terms,
        cauchy_diff: (full - half_v).norm(),
        precision,
        warnings,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PreCheck {
    /// u = -1 on the classes with odd k, u = 1 on the others.
    pub odd_classes: Vec<String>,
    /// W^I at that specialization, from the degrees.
    pub value: String,
    /// The same by summing signs over W^I.
    pub enumerated: i64,
    /// s is constant on each root length, so every term of the signed sum is the same value.
    pub invariant_exponents: bool,
    pub lhs_zero_expected: bool,
}

/// Poincaré pre-check: for exponents whose parity is constant on each root length, the
/// signs of the Weyl sum add up to W^I evaluated at (-1) on the odd classes.
pub fn precheck(d: &RootSystemData, g: &WeylGroup, i_set: &[usize], s: &[Complex64]) -> Option<PreCheck> {
    let int_of = |z: Complex64| if z.im == 0.0 && z.re.fract() == 0.0 { Some(z.re as i64) } else { None };
    let par = d.parabolic(i_set).ok()?;
    // parities come from Delta*, the only roots that can enter an inversion set of W^I
    let mut parity: [Option<i64>; 2] = [None, None];
    for &a in &par.delta_star {
        let c = usize::from(d.positive_roots[a].long);
        let k = int_of(s[a])?.rem_euclid(2);
        match parity[c] {
            None => parity[c] = Some(k),
            Some(p) if p != k => return None,
            _ => {}
        }
    }
    let mut value_of: [Option<Complex64>; 2] = [None, None];
    let mut invariant = true;
    for (a, r) in d.positive_roots.iter().enumerate() {
        let c = usize::from(r.long);
        match value_of[c] {
            None => value_of[c] = Some(s[a]),
            Some(v) if v != s[a] => invariant = false,
            _ => {}
        }
    }
    let cosets = min_coset_reps(g, &par.i_set);
    let odd_long = parity[1] == Some(1);
    let odd_short = parity[0] == Some(1);
    let enumerated: i64 = cosets
        .w_upper_i
        .iter()
        .map(|&w| {
            let n = g.inversion_set(w).iter().filter(|&&a| if d.positive_roots[a].long { odd_long } else { odd_short }).count();
            if n % 2 == 0 {
                1
            } else {
                -1
            }
        })
        .sum();
    let simply_laced = d.is_simply_laced();
    let (value, odd_classes): (Rational, Vec<String>) = match (odd_long, odd_short, simply_laced) {
        (false, false, _) => (int(cosets.w_upper_i.len() as i64), vec![]),
        (true, _, true) | (true, true, false) => (eval_minus_one(d, &par.i_set), vec!["all".into()]),
        (true, false, false) => (mixed_eval(d, &par.i_set, true).ok()?.value, vec!["long".into()]),
        (false, true, false) => (mixed_eval(d, &par.i_set, false).ok()?.value, vec!["short".into()]),
        (false, true, true) => (eval_minus_one(d, &par.i_set), vec!["all".into()]),
    };
    Some(PreCheck {
        odd_classes,
        lhs_zero_expected: invariant && value.is_zero(),
        value: format_rational(&value),
        enumerated,
        invariant_exponents: invariant,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub label: String,
    pub value: [f64; 2],
    pub reference: [f64; 2],
    pub rel_err: f64,
    pub pass: bool,
}

impl Check {
    pub fn new(label: impl Into<String>, value: Complex64, reference: Complex64, tol: f64) -> Self {
        let rel_err = rel_err(value, reference);
        Check { label: label.into(), value: [value.re, value.im], reference: [reference.re, reference.im], rel_err, pass: rel_err <= tol }
    }
}

pub fn rel_err(a: Complex64, b: Complex64) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub name: String,
    pub system: String,
    /// 1-based
    pub i_set: Vec<usize>,
    pub lhs: SumResult,
    pub rhs: SumResult,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub abs_floor: f64,
    pub n: u64,
    pub m: Option<u64>,
    pub phi: Option<GenericVector>,
    pub precheck: Option<PreCheck>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub pass: bool,
}

impl RelationReport {
    #[allow(clippy::too_many_arguments)]
    pub fn build(name: &str, d: &RootSystemData, i_set: &[usize], lhs: SumResult, rhs: SumResult, tol: f64, n: u64, m: Option<u64>) -> Self {
        let abs_err = (lhs.complex() - rhs.complex()).norm();
        let rel = rel_err(lhs.complex(), rhs.complex());
        let abs_floor = tol * 1e-3;
        RelationReport {
            name: name.into(),
            system: d.name(),
            i_set: i_set.iter().map(|i| i + 1).collect(),
            pass: rel <= tol || abs_err <= abs_floor,
            lhs,
            rhs,
            abs_err,
            rel_err: rel,
            tol,
            abs_floor,
            n,
            m,
            phi: None,
            precheck: None,
            checks: vec![],
            notes: vec![],
        }
    }

    pub fn with_checks(mut self, checks: Vec<Check>) -> Self {
        self.pass = self.pass && checks.iter().all(|c| c.pass);
        self.checks = checks;
        self
    }
}

/// Both sides of the functional relation for `spec`, evaluated concurrently.
pub fn verify(spec: &RelationSpec, mode: LhsMode, tol: f64, n: u64, m: u64, phi_seed: Option<u64>, precision: Precision) -> Result<RelationReport> {
    let d = &spec.d;
    let g = enumerate_weyl(d)?;
    let s_full = spec.full_exponents();
    let ctx = BernoulliContext::new(d, &spec.i_set, phi_seed)?;
    let (lhs, rhs) = rayon::join(
        || -> Result<SumResult> {
            match mode {
                LhsMode::SignedWeyl => Ok(lhs_signed_with(d, &g, &spec.i_set, &s_full, &spec.y, n, precision)?.total),
                LhsMode::Direct => s_direct(d, &ZetaArgs::new(d, s_full.clone(), spec.y.clone(), spec.i_set.clone())?, n, precision),
            }
        },
        || rhs_bernoulli(&ctx, spec, m, precision),
    );
    let (lhs, rhs) = (lhs?, rhs?);
    let name = match mode {
        LhsMode::SignedWeyl => "signed Weyl sum vs Bernoulli side",
        LhsMode::Direct => "direct sum S vs Bernoulli side",
    };
    let mut rep = RelationReport::build(name, d, &spec.i_set, lhs, rhs, tol, n, Some(m));
    rep.phi = Some(ctx.phi.clone());
    rep.precheck = precheck(d, &g, &spec.i_set, &s_full);
    if let Some(pc) = &rep.precheck {
        if pc.lhs_zero_expected {
            rep.notes.push("LHS identically zero expected".into());
        }
    }
    if !is_zero_vec(&spec.y) {
        rep.notes.push("experimental: nonzero y has no published numeric anchor".into());
    }
    Ok(rep)
}

/// The |I| = 1 relation with the Lerch zeta-function on the right:
/// (-1)^{|Delta+|-1} prod Omega^k / k! sum_{nu, j} b_{k nu j} Omega^{-j} phi(s + j, nu).
pub fn lerch_relation_check(d: &RootSystemData, i: usize, k: &[u32], s: Complex64, n: u64, tol: f64, precision: Precision) -> Result<(RelationReport, LerchTable)> {
    let spec = RelationSpec::new(d, &[i], k.to_vec(), vec![s], vec![int(0); d.rank])?;
    if k.iter().any(|&x| x < 2) {
        return Err(Error::InvalidInput("the Lerch form needs k >= 2 on Delta*".into()));
    }
    let ctx = BernoulliContext::new(d, &[i], None)?;
    let table = lerch_coeffs(&ctx, k)?;
    let g = enumerate_weyl(d)?;
    let lhs = lhs_signed_with(d, &g, &[i], &spec.full_exponents(), &spec.y, n, precision)?.total;
    let pref = bernoulli_prefactor(k).eval(precision);
    let omega = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    let mut parts = Vec::new();
    for e in &table.entries {
        let phi = lerch_phi(s + e.j as f64, &e.nu, 10_000, precision)?;
        let c = pref * e.b.to_f64().unwrap() * omega.powi(-(e.j as i32));
        parts.push((c, phi));
    }
    let refs: Vec<(Complex64, &SumResult)> = parts.iter().map(|(c, r)| (*c, r)).collect();
    let rhs = SumResult::combine(&refs);
    let mut rep = RelationReport::build("signed Weyl sum vs Lerch combination", d, &[i], lhs, rhs, tol, n, None);
    rep.phi = Some(ctx.phi.clone());
    rep.precheck = precheck(d, &g, &[i], &spec.full_exponents());
    rep.notes.push(format!("X_i = {:?}", table.nus.iter().map(format_rational).collect::<Vec<_>>()));
    Ok((rep, table))
}
