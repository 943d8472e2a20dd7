//! Exact combinatorics of generalized lattice paths and one-dimensional
//! multi-colored dimer models.
//!
//! The crate has three layers that check each other:
//!
//! * brute-force enumeration ([`paths`], [`dimers`]) — the ground truth;
//! * recurrences and functional-equation solvers ([`recurrences`],
//!   [`series`]) over an exact polynomial ring ([`polyring`]);
//! * closed-form counts from Lagrange inversion ([`closedforms`]).
//!
//! Every generating function is a [`polyring::RSeries`]: a truncated power
//! series in `r` (or `p`) whose coefficients are integer polynomials in the
//! auxiliary variables `m, u, s, q, z`.

pub mod closedforms;
pub mod dimers;
pub mod error;
pub mod paths;
pub mod polyring;
pub mod recurrences;
pub mod series;

pub use error::{Error, Result};
pub use polyring::{MultiPoly, RSeries, SeriesVar, Var};
