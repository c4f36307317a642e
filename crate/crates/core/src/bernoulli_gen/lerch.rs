//! Coefficients b_{k nu j} for |I| = 1, where P(k, 0, n lambda_i) is a finite sum of
//! e(n nu) b_{k nu j} (2 pi i n)^{-j}.

use super::expand::symbolic_p;
use super::BernoulliContext;
use crate::algebra::rational::{format_rational, int, Rational};
use crate::error::{Error, Result};
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Debug, Serialize)]
pub struct LerchEntry {
    #[serde(serialize_with = "ser_rat")]
    pub nu: Rational,
    pub j: u32,
    #[serde(serialize_with = "ser_rat")]
    pub b: Rational,
}

fn ser_rat<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

#[derive(Clone, Debug, Serialize)]
pub struct LerchTable {
    pub k: Vec<u32>,
    /// Nonzero entries sorted by (nu, j).
    pub entries: Vec<LerchEntry>,
    /// All nu = {<q, mu_{alpha_i}>} that occur, zero coefficients included.
    #[serde(serialize_with = "ser_rats")]
    pub nus: Vec<Rational>,
}

fn ser_rats<S: serde::Serializer>(r: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(r.len()))?;
    for x in r {
        seq.serialize_element(&format_rational(x))?;
    }
    seq.end()
}

impl LerchTable {
    pub fn get(&self, nu: &Rational, j: u32) -> Rational {
        self.entries.iter().find(|e| &e.nu == nu && e.j == j).map(|e| e.b.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn max_j(&self) -> u32 {
        self.entries.iter().map(|e| e.j).max().unwrap_or(0)
    }
}

/// b_{k nu j} for the context `ctx` (which must have a single-element I) and k over Delta*.
pub fn lerch_coeffs(ctx: &BernoulliContext, k: &[u32]) -> Result<LerchTable> {
    if ctx.par.i_set.len() != 1 {
        return Err(Error::InvalidInput(format!("Lerch coefficients need |I| = 1, got I = {:?}", ctx.par.i_set.iter().map(|i| i + 1).collect::<Vec<_>>())));
    }
    let r = ctx.d.rank;
    let i = ctx.par.i_set[0];
    let sym = symbolic_p(ctx, &vec![int(0); r], k)?;
    for (b, gb) in sym.g.iter().enumerate() {
        if let Some(gi) = gb.iter().position(|gv| gv[0].is_zero()) {
            let mut lambda = vec![0; r];
            lambda[i] = 1;
            let gamma = ctx.d.root_label(ctx.par.delta_star[sym.gammas[b][gi]]);
            return Err(Error::ZeroConstantDenominator { gamma, basis: ctx.bases[b].labels(&ctx.d), lambda });
        }
    }
    let mut table: BTreeMap<(Rational, u32), Rational> = BTreeMap::new();
    let mut nus: Vec<Rational> = Vec::new();
    for t in &sym.terms {
        let nu = t.phase[0].clone();
        if !nus.contains(&nu) {
            nus.push(nu.clone());
        }
        for (e, c) in &t.poly {
            let mut v = c.clone();
            for (gi, &ex) in e.iter().enumerate() {
                if ex > 0 {
                    v /= num_traits::pow(sym.g[t.basis][gi][0].clone(), ex as usize);
                }
            }
            *table.entry((nu.clone(), e.iter().sum())).or_insert_with(Rational::zero) += v;
        }
    }
    nus.sort();
    let entries = table.into_iter().filter(|(_, b)| !b.is_zero()).map(|((nu, j), b)| LerchEntry { nu, j, b }).collect();
    Ok(LerchTable { k: k.to_vec(), entries, nus })
}

/// The set X_i of all {<q, mu^V_{alpha_i}>} over bases and quotient representatives.
pub fn lerch_nu_set(ctx: &BernoulliContext) -> Result<Vec<Rational>> {
    if ctx.par.i_set.len() != 1 {
        return Err(Error::InvalidInput("X_i needs |I| = 1".into()));
    }
    let mut out: Vec<Rational> = Vec::new();
    for (b, basis) in ctx.bases.iter().enumerate() {
        let mu = &basis.dual[ctx.psi_pos(b, 0)];
        for q in &ctx.quotients[b].representatives {
            let v: Rational = q.iter().zip(mu).map(|(&a, x)| x * int(a)).sum();
            let f = crate::algebra::rational::frac_part(&v);
            if !out.contains(&f) {
                out.push(f);
            }
        }
    }
    out.sort();
    Ok(out)
}
