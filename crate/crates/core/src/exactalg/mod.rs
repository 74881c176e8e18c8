//! Exact arithmetic kernels.
//!
//! Univariate polynomials are dense over [`Rational`]; multivariate ones are
//! sparse, lexicographically ordered and generic over a [`Coeff`] field so
//! that equations at non-real osculation points can be built over the
//! Gaussian rationals and then split into real and imaginary parts.

mod coeff;
mod gaussian;
mod matrix;
mod multipoly;
mod rational;
mod sturm;
mod unipoly;

pub use coeff::Coeff;
pub use gaussian::GaussianRational;
pub use matrix::{bareiss_determinant, rank, Matrix, PolyMatrix};
pub use multipoly::{split_real_imaginary, Monomial, MultiPoly};
pub use rational::{format_rational, parse_rational, rat, Rational};
pub(crate) use rational::{factorial, inv_factorial};
pub use sturm::{sturm_count_real_roots, sturm_sequence};
pub use unipoly::UniPoly;
