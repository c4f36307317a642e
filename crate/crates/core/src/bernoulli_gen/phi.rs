//! The generic vector phi and the fractional parts {y}_{V,beta} it decides.

use super::bases::{combinations, pair, BasisChoice};
use crate::algebra::rational::{format_rational, frac_part, int, rank, rat, Rational};
use crate::error::{Error, Result};
use crate::rootsys::RootSystemData;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

const PRIMES: [i64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const MAX_ATTEMPTS: usize = 64;

/// phi in simple-coroot coordinates, with a note on how it was found.
#[derive(Clone, Debug, Serialize)]
pub struct GenericVector {
    #[serde(serialize_with = "ser_vec")]
    pub phi: Vec<Rational>,
    pub provenance: String,
}

fn ser_vec<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&format_rational(x))?;
    }
    seq.end()
}

/// Coroot coordinates of all independent (r-1)-subsets of Delta_+; phi must avoid the
/// hyperplane spanned by each of them.
fn hyperplanes(d: &RootSystemData) -> Vec<Vec<Vec<Rational>>> {
    let all: Vec<usize> = (0..d.n_pos()).collect();
    let rows = |s: &[usize]| -> Vec<Vec<Rational>> { s.iter().map(|&i| d.positive_roots[i].coroot_coords.iter().map(|&x| int(x)).collect()).collect() };
    combinations(&all, d.rank.saturating_sub(1)).into_iter().map(|s| rows(&s)).filter(|r| rank(r) + 1 == d.rank || d.rank == 1).collect()
}

/// True when phi lies on none of the hyperplanes, i.e. <phi, mu^V_beta> != 0 for every
/// basis V of positive roots and every beta in V.
pub fn is_generic(d: &RootSystemData, phi: &[Rational]) -> bool {
    if phi.iter().all(|x| x.is_zero()) {
        return false;
    }
    hyperplanes(d).into_iter().all(|mut rows| {
        rows.push(phi.to_vec());
        rank(&rows) == d.rank
    })
}

/// Deterministic search: prime coefficients in several windows and orders, then seeded
/// random rationals.
pub fn choose_phi(d: &RootSystemData, seed: Option<u64>) -> Result<GenericVector> {
    let r = d.rank;
    let planes = hyperplanes(d);
    let ok = |phi: &[Rational]| {
        !phi.iter().all(|x| x.is_zero())
            && planes.iter().all(|rows| {
                let mut rows = rows.clone();
                rows.push(phi.to_vec());
                rank(&rows) == r
            })
    };
    let mut attempts = 0;
    if seed.is_none() {
        for start in 0..=(PRIMES.len() - r) {
            for rev in [false, true] {
                attempts += 1;
                let mut p: Vec<i64> = PRIMES[start..start + r].to_vec();
                if rev {
                    p.reverse();
                }
                let phi: Vec<Rational> = p.iter().map(|&x| int(x)).collect();
                if ok(&phi) {
                    return Ok(GenericVector { phi, provenance: format!("primes {p:?}") });
                }
            }
        }
    }
    let s = seed.unwrap_or(0x5eed);
    let mut rng = ChaCha8Rng::seed_from_u64(s);
    while attempts < MAX_ATTEMPTS {
        attempts += 1;
        let phi: Vec<Rational> = (0..r).map(|_| rat(rng.gen_range(1..=97), rng.gen_range(1..=13))).collect();
        if ok(&phi) {
            return Ok(GenericVector { phi, provenance: format!("seeded random (seed {s}, attempt {attempts})") });
        }
    }
    Err(Error::GenericSearchExhausted(attempts))
}

/// {y}_{V,beta} for the basis element at position `l` of `b`; y in coroot coordinates.
pub fn fractional_part(d: &RootSystemData, y: &[Rational], b: &BasisChoice, l: usize, phi: &[Rational]) -> Result<Rational> {
    let mu = &b.dual[l];
    let s = pair(phi, mu);
    if s.is_zero() {
        return Err(Error::NonGenericPhi(b.labels(d)));
    }
    let v = pair(y, mu);
    if s.is_positive() {
        Ok(frac_part(&v))
    } else {
        Ok(Rational::one() - frac_part(&-v))
    }
}
