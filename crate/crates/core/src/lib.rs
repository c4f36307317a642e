//! Zeta-functions of root systems.
//!
//! Exact algebra (cyclotomic Laurent polynomials, truncated series), root systems and
//! Weyl groups, Poincaré polynomials, Bernoulli functions of root systems and the
//! numerical lattice sums used to check the functional relations between them.

pub mod algebra;
pub mod bernoulli_gen;
pub mod error;
pub mod lattice_zeta;
pub mod poincare;
pub mod relations;
pub mod rootsys;
pub mod weyl;

pub use error::{Error, Result};
pub use algebra::{CycloElem, CycloLaurent, Precision, Rational, TruncatedSeries, UniPoly};
pub use bernoulli_gen::{BernoulliContext, BernoulliTable, GenericVector};
pub use lattice_zeta::{SumResult, ZetaArgs};
pub use relations::{RelationReport, RelationSpec};
pub use rootsys::{parse_system, CartanType, RootSystemData};
pub use weyl::{WeylElement, WeylGroup};
