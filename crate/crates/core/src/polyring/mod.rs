//! Exact coefficient arithmetic: sparse multivariate polynomials and
//! truncated power series with the `r -> r*s^p` shift substitution.

mod poly;
mod series;

pub use poly::{f3, f4, m_prime, u_prime, Exponents, MultiPoly, Var, NUM_VARS};
pub use series::{RSeries, SeriesVar};
