//! Truncated multivariate power series with Laurent-in-Omega coefficients.

use super::laurent::CycloLaurent;
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| o.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Variables and truncation orders shared by all series of one computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesShape {
    pub vars: Vec<String>,
    /// Largest kept exponent per variable.
    pub max_deg: Vec<u32>,
    /// Optional cap on the total degree.
    pub total_cap: Option<u32>,
}

impl SeriesShape {
    pub fn new(vars: Vec<String>, max_deg: Vec<u32>, total_cap: Option<u32>) -> Arc<Self> {
        assert_eq!(vars.len(), max_deg.len());
        Arc::new(SeriesShape { vars, max_deg, total_cap })
    }

    pub fn keeps(&self, m: &[u32]) -> bool {
        m.iter().zip(&self.max_deg).all(|(e, d)| e <= d) && self.total_cap.is_none_or(|c| m.iter().sum::<u32>() <= c)
    }

    pub fn max_total(&self) -> u32 {
        let s: u32 = self.max_deg.iter().sum();
        self.total_cap.map_or(s, |c| c.min(s))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    shape: Arc<SeriesShape>,
    coeffs: BTreeMap<Monomial, CycloLaurent>,
}

impl TruncatedSeries {
    pub fn zero(shape: &Arc<SeriesShape>) -> Self {
        TruncatedSeries { shape: shape.clone(), coeffs: BTreeMap::new() }
    }

    pub fn constant(shape: &Arc<SeriesShape>, c: CycloLaurent) -> Self {
        let mut s = Self::zero(shape);
        s.add_term(vec![0; shape.nvars()], &c);
        s
    }

    /// c * t_i
    pub fn variable(shape: &Arc<SeriesShape>, i: usize, c: CycloLaurent) -> Self {
        let mut m = vec![0; shape.nvars()];
        m[i] = 1;
        let mut s = Self::zero(shape);
        s.add_term(m, &c);
        s
    }

    pub fn shape(&self) -> &Arc<SeriesShape> {
        &self.shape
    }

    pub fn add_term(&mut self, m: Vec<u32>, c: &CycloLaurent) {
        if c.is_zero() || !self.shape.keeps(&m) {
            return;
        }
        let key = Monomial(m);
        match self.coeffs.get_mut(&key) {
            Some(v) => {
                v.add_assign_ref(c);
                if v.is_zero() {
                    self.coeffs.remove(&key);
                }
            }
            None => {
                self.coeffs.insert(key, c.clone());
            }
        }
    }

    pub fn coeff(&self, m: &[u32]) -> CycloLaurent {
        self.coeffs.get(&Monomial(m.to_vec())).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycloLaurent)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.shape, o.shape);
        let mut r = self.clone();
        for (m, c) in &o.coeffs {
            r.add_term(m.0.clone(), c);
        }
        r
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries { shape: self.shape.clone(), coeffs: self.coeffs.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &CycloLaurent) -> Self {
        let mut r = Self::zero(&self.shape);
        for (m, v) in &self.coeffs {
            r.add_term(m.0.clone(), &(v * c));
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.shape, o.shape);
        let mut r = Self::zero(&self.shape);
        let n = self.shape.nvars();
        let mut m = vec![0u32; n];
        for (a, ca) in &self.coeffs {
            for (b, cb) in &o.coeffs {
                for i in 0..n {
                    m[i] = a.0[i] + b.0[i];
                }
                if self.shape.keeps(&m) {
                    r.add_term(m.clone(), &(ca * cb));
                }
            }
        }
        r
    }
}

/// Expansion of t_target / (t_target - sum_b linear_b t_b - constant) as a power series,
/// i.e. -t_target * sum_n (t_target - sum linear_b t_b)^n / constant^{n+1}.
pub fn series_factor_expand(
    shape: &Arc<SeriesShape>,
    target: usize,
    linear: &[(usize, CycloLaurent)],
    constant: &CycloLaurent,
) -> Result<TruncatedSeries> {
    if constant.is_zero() {
        return Err(Error::ZeroConstantDenominator { gamma: shape.vars[target].clone(), basis: vec![], lambda: vec![] });
    }
    let cinv = constant.inverse()?;
    let mut u = TruncatedSeries::variable(shape, target, CycloLaurent::one());
    for (b, c) in linear {
        u = u.sub(&TruncatedSeries::variable(shape, *b, c.clone()));
    }
    let v = u.scale(&cinv);
    let mut p = TruncatedSeries::variable(shape, target, -&cinv);
    let mut acc = p.clone();
    for _ in 1..shape.max_total() {
        p = p.mul(&v);
        if p.is_zero() {
            break;
        }
        acc = acc.add(&p);
    }
    Ok(acc)
}
