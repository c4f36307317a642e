//! Bernoulli functions of root systems: bases, lattice quotients, the generic vector,
//! exact expansion of the generating function, closed forms, Lerch coefficients and the
//! residue projection.

pub mod bases;
pub mod closed_forms;
pub mod expand;
pub mod lattice;
pub mod lerch;
pub mod phi;
pub mod residue;

pub use bases::{enumerate_bases, projection_p, transpose_projection, BasisChoice};
pub use expand::{bernoulli_table, expand_p, symbolic_p, BernoulliTable, NumericBernoulli, SymbolicBernoulli};
pub use lattice::{lattice_quotient, LatticeQuotient};
pub use phi::{choose_phi, fractional_part, GenericVector};

use crate::error::{Error, Result};
use crate::rootsys::{ParabolicData, RootSystemData};

/// Everything about (Delta, I) that does not depend on lambda, y or k.
#[derive(Clone, Debug)]
pub struct BernoulliContext {
    pub d: RootSystemData,
    pub par: ParabolicData,
    pub bases: Vec<BasisChoice>,
    pub quotients: Vec<LatticeQuotient>,
    pub phi: GenericVector,
}

impl BernoulliContext {
    /// `i_set` is 0-based.
    pub fn new(d: &RootSystemData, i_set: &[usize], phi_seed: Option<u64>) -> Result<Self> {
        let phi = choose_phi(d, phi_seed)?;
        Self::with_phi(d, i_set, phi)
    }

    pub fn with_phi(d: &RootSystemData, i_set: &[usize], phi: GenericVector) -> Result<Self> {
        if phi.phi.len() != d.rank {
            return Err(Error::DimensionMismatch { expected: d.rank, got: phi.phi.len() });
        }
        if !phi::is_generic(d, &phi.phi) {
            return Err(Error::NonGenericPhi(vec![format!("{:?}", phi.phi.iter().map(crate::algebra::rational::format_rational).collect::<Vec<_>>())]));
        }
        let par = d.parabolic(i_set)?;
        let bases = enumerate_bases(d, &par)?;
        let quotients = bases.iter().map(lattice_quotient).collect();
        Ok(BernoulliContext { d: d.clone(), par, bases, quotients, phi })
    }

    /// Position of mu_{alpha_i} inside basis `b`, for the j-th element of I.
    pub fn psi_pos(&self, b: usize, j: usize) -> usize {
        self.bases[b].v_i.len() + j
    }

    pub fn n_star(&self) -> usize {
        self.par.delta_star.len()
    }

    /// Position of a positive root inside Delta*.
    pub fn star_pos(&self, root: usize) -> Option<usize> {
        self.par.delta_star.iter().position(|&r| r == root)
    }
}
