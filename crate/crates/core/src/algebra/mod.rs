//! Exact arithmetic: rationals, cyclotomic numbers, Laurent polynomials in Omega,
//! polynomials and truncated power series, plus the float helpers used by the sums.

pub mod bernoulli;
pub mod cyclo;
pub mod laurent;
pub mod numeric;
pub mod poly;
pub mod rational;
pub mod series;

pub use bernoulli::{bernoulli_numbers, bernoulli_poly_value, zeta_even_from_bernoulli};
pub use cyclo::CycloElem;
pub use laurent::CycloLaurent;
pub use numeric::{Cdd, Precision};
pub use poly::{BiPoly, UniPoly};
pub use rational::Rational;
pub use series::{series_factor_expand, Monomial, TruncatedSeries};
