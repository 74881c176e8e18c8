//! Exact solver for real osculating instances of Schubert problems on
//! Grassmannians.
//!
//! The crate is split the same way the computation flows:
//!
//! * [`exactalg`]: rationals, Gaussian rationals, dense univariate and sparse
//!   multivariate polynomials, determinants and Sturm sequences.
//! * [`combinat`]: partitions, skew tableaux, sign-imbalance,
//!   Littlewood-Richardson counting and the factorization counts `nu(k,n,r)`.
//! * [`schubert`]: osculating flags, local-coordinate charts, rank equations
//!   and Wronskians.
//! * [`groebner`]: lexicographic Buchberger, eliminants and real-root counts.
//! * [`hookfam`]: the family `(box_{k,n}, 1^{n-1})` whose solutions are
//!   factorizations `f' = g h`.
//! * [`exper`]: seeded sampling, a resumable record log, frequency tables and
//!   structural checks.

pub mod combinat;
pub mod error;
pub mod exactalg;
pub mod exper;
pub mod groebner;
pub mod hookfam;
mod par;
pub mod schubert;

pub use error::{Error, Result};
pub use par::parallel_enabled;
